#ifndef OBSTRUCT_CLASS_GROUP_CACHE_HPP
#define OBSTRUCT_CLASS_GROUP_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "obstruct/quad_field.hpp"

namespace obstruct::cache {

enum class CacheStatus { Disabled, Hit, Miss, Recomputed };

char const * to_string(CacheStatus s);

struct CachedClassGroup
{
    qf::ClassGroup group;
    CacheStatus status;
};

inline constexpr char const * cache_version = "1";
inline constexpr char const * cache_env_var = "OBSTRUCT_CACHE_DIR";

/* File holding the entry for D inside dir. */
std::filesystem::path entry_path(std::filesystem::path const & dir, std::int64_t D);

/* FNV-1a over the canonical "D;h;invariants;version" string, as 16 hex digits. */
std::string checksum(qf::ClassGroup const & G, std::string const & version);

/*
 * Class group of K, memoized as JSON {D, h, invariants, version, checksum}
 * under dir. An unreadable entry, or one whose checksum or discriminant does
 * not match, is recomputed and rewritten.
 */
CachedClassGroup class_group(qf::ImagQuadField const & K,
                             std::optional<std::filesystem::path> const & dir);

/* The directory named by OBSTRUCT_CACHE_DIR, if set and nonempty. */
std::optional<std::filesystem::path> dir_from_env();

} // namespace obstruct::cache

#endif
