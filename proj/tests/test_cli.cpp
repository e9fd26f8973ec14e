#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Run
{
    int code;
    std::string out;
};

Run run(std::string const & args, std::string const & env = "")
{
    std::string const cmd = env + " " + OBSTRUCT_CLI_PATH + " " + args + " 2>/dev/null";
    FILE * p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int const status = pclose(p);
    return { WIFEXITED(status) ? WEXITSTATUS(status) : -1, out };
}

std::vector<json> lines(std::string const & s)
{
    std::vector<json> v;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        v.push_back(json::parse(line));
    return v;
}

} // namespace

TEST_CASE("field-info")
{
    auto r = run("field-info --m -15");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out)["result"];
    CHECK(j["field"]["D"] == -15);
    CHECK(j["class_group"]["order"] == 2);
    CHECK(j["cohomology"]["dims"] == json{ 1, 1, 2, 1 });
    CHECK(json::parse(run("field-info --m -3").out)["result"]["cohomology"]["dims"] == json{ 1, 0, 1, 1 });
    auto g = json::parse(run("field-info --m -4").out)["result"];
    CHECK(g["field"]["m"] == -1);
    CHECK(g["field"]["D"] == -4);
    CHECK(g["class_group"]["order"] == 1);
    CHECK(run("field-info --m -12").code == 2);
    CHECK(run("field-info --m 7").code == 2);
    CHECK(run("field-info --m abc").code == 2);
    CHECK(run("field-info").code == 2);
}

TEST_CASE("field-info skips class groups past the bound")
{
    auto r = run("field-info --m -4849845");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out)["result"];
    CHECK(j["t"] == 8);
    CHECK(j["two_rank"] == 7);
    CHECK(j["h1"]["dim"] == 7);
}

TEST_CASE("cup")
{
    auto parity = [](std::string const & a) {
        return json::parse(run("cup " + a).out)["result"]["cup"]["parity"];
    };
    CHECK(parity("--m -15 --x 5 --y 5") == 1);
    CHECK(parity("--m -255 --x 5 --y 17") == 1);
    CHECK(parity("--m -255 --x 5 --y 0") == 0);
    CHECK(run("cup --m -255 --x 7 --y 5").code == 2);
    CHECK(run("cup --m -255 --x 5 --y 1000").code == 2);
    CHECK(run("cup --m -255 --x 0 --y 5").code == 2);
}

TEST_CASE("obstruct exit codes")
{
    auto r = run("obstruct --m -15 --group m --q 3");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["result"]["verdict"]["outcome"] == "Obstructed");
    CHECK(run("obstruct --m -255 --group aut --q 3").code == 0);
    CHECK(run("obstruct --m -3 --group m --q 3").code == 4);
    CHECK(run("obstruct --m -145 --group m --q 3").code == 3);
    CHECK(run("obstruct --m -15 --group x --q 3").code == 2);
    CHECK(run("obstruct --m -15 --group m --q 6").code == 2);
    CHECK(run("obstruct --m -15 --group m --q 2").code == 2);
}

TEST_CASE("search")
{
    auto a = lines(run("search --family a --max-prime 10").out);
    REQUIRE(a.size() == 3);
    CHECK(a[0]["result"]["primes"] == json{ 5, 3 });
    CHECK(a.back()["result"]["summary"]["hits"] == 2);
    auto b = lines(run("search --family b --max-prime 17 --jobs 3").out);
    bool found = false;
    for (auto const & l : b)
        found = found || (l["result"].contains("primes") && l["result"]["primes"] == json{ 3, 5, 17 });
    CHECK(found);
    auto e = lines(run("search --family a --max-prime 4").out);
    REQUIRE(e.size() == 1);
    CHECK(e[0]["result"]["summary"]["hits"] == 0);
    CHECK(run("search --family c --max-prime 10").code == 2);
    CHECK(run("search --family a --max-prime 2").code == 2);
    // output does not depend on the worker count apart from the echoed input
    auto s1 = lines(run("search --family b --max-prime 60 --jobs 1").out);
    auto s4 = lines(run("search --family b --max-prime 60 --jobs 4").out);
    REQUIRE(s1.size() == s4.size());
    for (std::size_t i = 0; i < s1.size(); ++i)
        CHECK(s1[i]["result"] == s4[i]["result"]);
}

TEST_CASE("cocycle")
{
    auto m = json::parse(run("cocycle --q 3 --group m").out)["result"];
    CHECK(m["class"] == "a^3");
    CHECK(m["cocycle_identity"] == true);
    CHECK(m["table"]["nonzero"] == json{ { 1, 1, 1 } });
    auto a = json::parse(run("cocycle --q 3 --group aut").out)["result"];
    CHECK((a["class"] == "a^2 b" || a["class"] == "a b^2"));
    CHECK(a["pullbacks"]["first_factor"] == "0");
    CHECK(a["pullbacks"]["second_factor"] == "0");
    CHECK(a["pullbacks"]["diagonal_cohomologous_to_m"] == true);
    CHECK(json::parse(run("cocycle --q 5 --group m").out)["result"]["class"] == "a^3");
    CHECK(run("cocycle --q 7 --group m").code == 2);
}

TEST_CASE("selftest")
{
    auto r = run("selftest");
    CHECK(r.code == 0);
    CHECK(r.out.find("h3-dim-klein-four = 4") != std::string::npos);
    CHECK(run("selftest --inject-composition-fault").code != 0);
}

TEST_CASE("byte-identical output")
{
    for (auto const * args : { "field-info --m -255", "obstruct --m -255 --group aut --q 3",
                               "cocycle --q 3 --group aut", "search --family b --max-prime 40" })
        CHECK(run(args).out == run(args).out);
}

TEST_CASE("cache directory from the environment")
{
    auto dir = std::filesystem::temp_directory_path() / "obstruct_cli_cache";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    std::string const env = "OBSTRUCT_CACHE_DIR=" + dir.string();
    auto first = json::parse(run("field-info --m -255", env).out)["result"]["class_group"];
    auto second = json::parse(run("field-info --m -255", env).out)["result"]["class_group"];
    CHECK(first["cache"] == "miss");
    CHECK(second["cache"] == "hit");
    CHECK(first["order"] == second["order"]);
    std::filesystem::remove_all(dir);
}
