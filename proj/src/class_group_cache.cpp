#include "obstruct/class_group_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace obstruct::cache {

using json = nlohmann::json;

char const * to_string(CacheStatus s)
{
    switch (s) {
    case CacheStatus::Disabled: return "disabled";
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Miss: return "miss";
    case CacheStatus::Recomputed: return "recomputed";
    }
    return "?";
}

std::filesystem::path entry_path(std::filesystem::path const & dir, std::int64_t D)
{
    return dir / ("classgroup_D" + std::to_string(D) + ".json");
}

std::string checksum(qf::ClassGroup const & G, std::string const & version)
{
    std::ostringstream canon;
    canon << G.D << ';' << G.order << ';';
    for (auto d : G.invariants)
        canon << d << ',';
    canon << ';' << version;
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : canon.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::optional<qf::ClassGroup> load(std::filesystem::path const & file, std::int64_t D)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        json const j = json::parse(in);
        qf::ClassGroup G;
        G.D = j.at("D").get<std::int64_t>();
        G.order = j.at("h").get<std::uint64_t>();
        G.invariants = j.at("invariants").get<std::vector<std::uint64_t>>();
        auto const version = j.at("version").get<std::string>();
        if (G.D != D || version != cache_version
            || j.at("checksum").get<std::string>() != checksum(G, version))
            return std::nullopt;
        return G;
    } catch (json::exception const &) {
        return std::nullopt;
    }
}

void store(std::filesystem::path const & file, qf::ClassGroup const & G)
{
    json const j{ { "D", G.D },
                  { "h", G.order },
                  { "invariants", G.invariants },
                  { "version", cache_version },
                  { "checksum", checksum(G, cache_version) } };
    std::filesystem::path const tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, file);
}

} // namespace

CachedClassGroup class_group(qf::ImagQuadField const & K,
                             std::optional<std::filesystem::path> const & dir)
{
    if (!dir)
        return { qf::class_group(K), CacheStatus::Disabled };
    std::int64_t const D = arith::to_int64(K.D());
    auto const file = entry_path(*dir, D);
    bool const existed = std::filesystem::exists(file);
    if (auto G = load(file, D))
        return { *G, CacheStatus::Hit };
    CachedClassGroup r{ qf::class_group(K), existed ? CacheStatus::Recomputed : CacheStatus::Miss };
    std::filesystem::create_directories(*dir);
    store(file, r.group);
    return r;
}

std::optional<std::filesystem::path> dir_from_env()
{
    char const * v = std::getenv(cache_env_var);
    if (!v || !*v)
        return std::nullopt;
    return std::filesystem::path(v);
}

} // namespace obstruct::cache
