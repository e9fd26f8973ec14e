// Command-line front end: field data, triple cup products, obstruction
// verdicts, family searches, cocycle certificates and the self-test.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "obstruct/arith.hpp"
#include "obstruct/class_group_cache.hpp"
#include "obstruct/cup_obstruct.hpp"
#include "obstruct/group_cohomology.hpp"
#include "obstruct/matrix_groups.hpp"
#include "obstruct/quad_field.hpp"
#include "obstruct/report.hpp"
#include "obstruct/selftest.hpp"

using namespace obstruct;
using report::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_bad_args = 2;
constexpr int exit_inconclusive = 3;
constexpr int exit_trivially_blocked = 4;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::vector<std::string> g_notes;

void emit(json const & j)
{
    std::cout << j.dump(2) << '\n';
}

qf::ImagQuadField parse_field(std::string const & text)
{
    arith::Integer m;
    try {
        m = arith::parse_integer(text);
    } catch (std::invalid_argument const & e) {
        throw UsageError(std::string("--m: ") + e.what());
    }
    if (m >= 0)
        throw UsageError("--m: m must be negative, got " + m.get_str());
    if (!arith::is_squarefree(m)) {
        /* an even fundamental discriminant such as -4 names its field */
        if (m % 4 == 0) {
            arith::Integer const r = m / 4;
            arith::Integer const r4 = ((r % 4) + 4) % 4;
            if ((r4 == 2 || r4 == 3) && arith::is_squarefree(r)) {
                g_notes.push_back("--m " + m.get_str() + " read as the fundamental discriminant of Q(sqrt "
                                  + r.get_str() + ")");
                return qf::ImagQuadField(r);
            }
        }
        throw UsageError("--m: m must be squarefree, got " + m.get_str());
    }
    return qf::ImagQuadField(m);
}

qf::H1Class parse_class(qf::ImagQuadField const & K, std::string const & flag,
                        std::string const & text)
{
    arith::Integer g;
    try {
        g = arith::parse_integer(text);
    } catch (std::invalid_argument const &) {
        throw UsageError(flag + ": unknown class label '" + text + "'");
    }
    auto x = qf::find_class(K, g);
    if (!x)
        throw UsageError(flag + ": '" + text + "' does not name an H^1 class of Q(sqrt "
                         + K.m().get_str() + ")");
    return *x;
}

std::uint64_t parse_q(std::uint64_t q)
{
    auto const [p, e] = arith::prime_power(arith::Integer(static_cast<unsigned long>(q)));
    if (e == 0 || p == 2)
        throw UsageError("--q: q must be an odd prime power, got " + std::to_string(q));
    return q;
}

cup::GroupFamily parse_group(std::string const & g)
{
    if (g == "m")
        return cup::GroupFamily::M;
    if (g == "aut")
        return cup::GroupFamily::AutPSL;
    throw UsageError("--group: expected 'm' or 'aut', got '" + g + "'");
}

int cmd_field_info(std::string const & m_text)
{
    auto const K = parse_field(m_text);
    json result;
    result["field"] = report::field(K);
    json pd = json::array();
    for (auto const & d : K.prime_discriminants())
        pd.push_back(report::integer(d.value));
    result["prime_discriminants"] = pd;
    result["t"] = K.num_prime_discriminants();
    result["two_rank"] = K.two_rank();
    result["h1"] = report::h1(K);
    result["cohomology"] = report::cohomology(cup::cohomology_summary(K));
    std::vector<std::string> notes = g_notes;
    notes.push_back(cup::h2_derivation_note);
    if (abs(K.D()) <= qf::class_group_bound) {
        auto const cg = cache::class_group(K, cache::dir_from_env());
        result["class_group"] = report::class_group(cg.group);
        result["class_group"]["cache"] = cache::to_string(cg.status);
    } else {
        result["class_group"] = nullptr;
        notes.push_back("class group not enumerated: |D| exceeds the enumeration bound");
    }
    emit(report::envelope("field-info", json{ { "m", m_text } }, result, notes));
    return exit_ok;
}

int cmd_cup(std::string const & m_text, std::string const & x_text, std::string const & y_text)
{
    auto const K = parse_field(m_text);
    auto const x = parse_class(K, "--x", x_text);
    auto const y = parse_class(K, "--y", y_text);
    if (x.is_zero())
        throw UsageError("--x: x must be a nonzero class");
    auto const ev = cup::triple_cup(K, x, y);
    json result{ { "field", report::field(K) }, { "cup", report::cup_evidence(ev) } };
    /* only the implication nonzero triple product => x u x != 0 is certified */
    result["x_cup_x_nonzero"] = ev.parity ? json(true) : json(nullptr);
    emit(report::envelope("cup", json{ { "m", m_text }, { "x", x_text }, { "y", y_text } },
                          result, g_notes));
    return exit_ok;
}

int cmd_obstruct(std::string const & m_text, std::string const & group, std::uint64_t q)
{
    auto const K = parse_field(m_text);
    auto const family = parse_group(group);
    parse_q(q);
    auto const r = cup::verdict(K, family, q);
    json result{ { "field", report::field(K) },
                 { "family", cup::to_string(family) },
                 { "q", q },
                 { "h1", report::h1(K) },
                 { "verdict", report::verdict(r) } };
    emit(report::envelope("obstruct",
                          json{ { "m", m_text }, { "group", group }, { "q", q } }, result, g_notes));
    switch (r.outcome) {
    case cup::Outcome::Obstructed: return exit_ok;
    case cup::Outcome::Inconclusive: return exit_inconclusive;
    case cup::Outcome::TriviallyBlocked: return exit_trivially_blocked;
    }
    return exit_inconclusive;
}

int cmd_search(std::string const & family, std::uint64_t N, unsigned jobs)
{
    if (family != "a" && family != "b")
        throw UsageError("--family: expected 'a' or 'b', got '" + family + "'");
    if (N < 3)
        throw UsageError("--max-prime: N must be at least 3");
    if (jobs < 1)
        throw UsageError("--jobs: must be at least 1");
    json const inputs{ { "family", family }, { "max_prime", N }, { "jobs", jobs } };
    std::size_t hits = 0, mismatches = 0;
    auto line = [&](json primes, arith::Integer const & m, cup::FieldCondition c) {
        qf::ImagQuadField const K(m);
        json result{ { "family", family },
                     { "primes", std::move(primes) },
                     { "field", report::field(K) },
                     { "field_condition", cup::to_string(c) } };
        std::cout << report::envelope("search", inputs, result).dump() << '\n';
        ++hits;
        mismatches += c != cup::FieldCondition::Holds;
    };
    if (family == "a") {
        for (auto const & h : cup::search_family_a(N, jobs))
            line(json{ h.p, h.q }, h.m, h.recheck);
    } else {
        for (auto const & h : cup::search_family_b(N, jobs))
            line(json{ h.p1, h.p2, h.p3 }, h.m, h.recheck);
    }
    json summary{ { "summary", json{ { "hits", hits }, { "mismatches", mismatches } } } };
    std::cout << report::envelope("search", inputs, summary).dump() << '\n';
    return exit_ok;
}

int cmd_cocycle(std::uint64_t q, std::string const & group)
{
    auto const family = parse_group(group);
    parse_q(q);
    mgroups::AutPSL const G(q);
    if (G.psl_order() > mgroups::default_group_cap)
        throw UsageError("--q: |PSL(2," + std::to_string(q) + "^2)| = "
                         + std::to_string(G.psl_order()) + " exceeds the enumeration cap "
                         + std::to_string(mgroups::default_group_cap));
    auto const cm = family == cup::GroupFamily::M ? mgroups::m_group_cocycle(q)
                                                  : mgroups::aut_group_cocycle(q);
    auto const cls = gcoh::classify3(cm.table);
    json failure = json::array();
    for (std::size_t i = 0; i < cm.failure.size(); ++i) {
        if (cm.failure[i].is_identity())
            continue;
        std::size_t const n = cm.section.size();
        std::ostringstream F, Ft;
        F << cm.failure[i].representative();
        Ft << cm.lifts[i];
        failure.push_back(json{ { "args", { i / n, i % n } },
                                { "F", F.str() },
                                { "lift", Ft.str() } });
    }
    std::ostringstream theta;
    theta << G.theta();
    json result{ { "q", q },
                 { "group", cup::to_string(family) },
                 { "theta", theta.str() },
                 { "table", report::cocycle_table(cm.table) },
                 { "cocycle_identity", cm.cocycle_identity_holds },
                 { "class", cls.name() },
                 { "coords", cls.coords },
                 { "failure", failure } };
    if (family == cup::GroupFamily::AutPSL) {
        auto const & Z2 = gcoh::SmallGroup::z2();
        auto const first = gcoh::pullback(cm.table, Z2, mgroups::first_factor_inclusion());
        auto const second = gcoh::pullback(cm.table, Z2, mgroups::second_factor_inclusion());
        auto const diag = gcoh::pullback(cm.table, Z2, mgroups::diagonal_inclusion());
        auto const m_table = mgroups::m_group_cocycle(q).table;
        result["pullbacks"] = json{
            { "first_factor", gcoh::classify3(first).name() },
            { "second_factor", gcoh::classify3(second).name() },
            { "diagonal", gcoh::classify3(diag).name() },
            { "diagonal_cohomologous_to_m", gcoh::cohomologous(diag, m_table) } };
    }
    emit(report::envelope("cocycle", json{ { "q", q }, { "group", group } }, result));
    return exit_ok;
}

int cmd_selftest(bool corrupt)
{
    selftest::Options opts;
    opts.corrupt_composition = corrupt;
    auto const results = selftest::run(opts);
    for (auto const & r : results)
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    return selftest::all_passed(results) ? exit_ok : 1;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{ "Obstructions to unramified M(q^2) and Aut(PSL(2,q^2)) extensions "
                  "of imaginary quadratic fields" };
    app.require_subcommand(1);

    std::string m_text, x_text, y_text, group, family;
    std::uint64_t q = 0, max_prime = 0;
    unsigned jobs = 1;
    bool corrupt = false;

    auto * field_info = app.add_subcommand("field-info", "discriminant, class group, cohomology dimensions");
    field_info->add_option("--m", m_text, "squarefree negative integer")->required();

    auto * cup_cmd = app.add_subcommand("cup", "evaluate x u x u y");
    cup_cmd->add_option("--m", m_text, "squarefree negative integer")->required();
    cup_cmd->add_option("--x", x_text, "H^1 class label (generator)")->required();
    cup_cmd->add_option("--y", y_text, "H^1 class label, 0 for the zero class")->required();

    auto * obstruct_cmd = app.add_subcommand("obstruct", "obstruction verdict");
    obstruct_cmd->add_option("--m", m_text, "squarefree negative integer")->required();
    obstruct_cmd->add_option("--group", group, "m or aut")->required();
    obstruct_cmd->add_option("--q", q, "odd prime power")->required();

    auto * search_cmd = app.add_subcommand("search", "search a prime family (JSON lines)");
    search_cmd->add_option("--family", family, "a or b")->required();
    search_cmd->add_option("--max-prime", max_prime, "prime bound N")->required();
    search_cmd->add_option("--jobs", jobs, "worker threads");

    auto * cocycle_cmd = app.add_subcommand("cocycle", "obstruction 3-cocycle of M(q^2) or Aut(PSL(2,q^2))");
    cocycle_cmd->add_option("--q", q, "odd prime power")->required();
    cocycle_cmd->add_option("--group", group, "m or aut")->required();

    auto * selftest_cmd = app.add_subcommand("selftest", "run the oracle suites");
    selftest_cmd->add_flag("--inject-composition-fault", corrupt)->group("");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return exit_bad_args;
    }

    try {
        if (*field_info)
            return cmd_field_info(m_text);
        if (*cup_cmd)
            return cmd_cup(m_text, x_text, y_text);
        if (*obstruct_cmd)
            return cmd_obstruct(m_text, group, q);
        if (*search_cmd)
            return cmd_search(family, max_prime, jobs);
        if (*cocycle_cmd)
            return cmd_cocycle(q, group);
        if (*selftest_cmd)
            return cmd_selftest(corrupt);
    } catch (UsageError const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_args;
    } catch (std::invalid_argument const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_bad_args;
    }
    return exit_bad_args;
}
