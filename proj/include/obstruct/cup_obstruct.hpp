#ifndef OBSTRUCT_CUP_OBSTRUCT_HPP
#define OBSTRUCT_CUP_OBSTRUCT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obstruct/quad_field.hpp"

namespace obstruct::cup {

using arith::Integer;
using qf::H1Class;
using qf::ImagQuadField;

/* The degree-2 dimension comes from units/(units)^2 -> Z_1/B_1 -> Cl[2],
 * not from a closed formula; h2_is_derived records that. */
struct CohomologySummary
{
    std::array<unsigned, 4> dims{};
    std::vector<std::string> h1_labels;
    bool h2_is_derived = true;
};

CohomologySummary cohomology_summary(ImagQuadField const & K);

struct PrimeInertness
{
    Integer prime;
    unsigned exponent;   /* e of the prime over p in div(c_y)/2, i.e. v_p(c_y) */
    bool inert;
};

/* Evidence for x u x u y: the primes under the support of y's generator and
 * whether each stays inert in K(sqrt c_x). parity is the sum of exponents of
 * the inert ones mod 2; a -4 factor has exponent 2 and never counts.
 * parity = 1 iff the product is nonzero. */
struct CupEvidence
{
    H1Class x;
    H1Class y;
    std::vector<PrimeInertness> per_prime;
    int parity;
};

/* x must be nonzero; y may be zero. Both must belong to K. */
CupEvidence triple_cup(ImagQuadField const & K, H1Class const & x, H1Class const & y);

enum class FieldCondition { Holds, FailsWithWitness, VacuousNoSurjection };

char const * to_string(FieldCondition c);

struct PropertyResult
{
    FieldCondition condition;
    std::optional<H1Class> witness_a;   /* failing x (resp. a) */
    std::optional<H1Class> witness_b;   /* failing b, pair scan only */
    std::size_t checked = 0;
};

/* a u a u a != 0 for every nonzero a. */
PropertyResult property_ssa(ImagQuadField const & K);
/* a u a u b != 0 for every ordered pair of distinct nonzero classes. */
PropertyResult property_ssb(ImagQuadField const & K);

enum class GroupFamily { M, AutPSL };

char const * to_string(GroupFamily f);

enum class Outcome { Obstructed, TriviallyBlocked, Inconclusive };

char const * to_string(Outcome o);

struct GroupCertificate
{
    GroupFamily family;
    std::uint64_t q;
    bool computed;            /* false: cited, q above the enumeration cap */
    std::string class_name;   /* e.g. "a^3", "a^2 b" */
    std::vector<std::uint8_t> coords;
    bool cocycle_identity_holds;
    bool required_shape;      /* a^3 for M, a^2 b or a b^2 for Aut */
};

inline constexpr std::size_t certificate_group_cap = 10000;

/* Throws std::invalid_argument unless q is an odd prime power. */
GroupCertificate group_certificate(GroupFamily family, std::uint64_t q,
                                   std::size_t cap = certificate_group_cap);

bool has_required_shape(GroupFamily family, std::vector<std::uint8_t> const & coords);

struct ObstructionReport
{
    Integer m;
    Integer D;
    unsigned two_rank;
    GroupFamily family;
    std::uint64_t q;
    GroupCertificate certificate;
    PropertyResult field_condition;
    Outcome outcome;
    bool solvable_quotient_realizable;
    std::vector<std::string> flags;
};

ObstructionReport verdict(ImagQuadField const & K, GroupFamily family, std::uint64_t q,
                          std::size_t cap = certificate_group_cap);

struct FamilyAHit
{
    std::uint64_t p, q;
    Integer m;
    FieldCondition recheck;
};

struct FamilyBHit
{
    std::uint64_t p1, p2, p3;
    Integer m;
    FieldCondition recheck;
};

/* p = 1 mod 4, q = 3 mod 4, (q/p) = -1, both <= N; ordered by (p, q). */
std::vector<FamilyAHit> search_family_a(std::uint64_t N, unsigned jobs = 1);
/* p1 < p2 < p3 <= N, p1 p2 p3 = 3 mod 4, (pi/pj) = -1 for i != j. */
std::vector<FamilyBHit> search_family_b(std::uint64_t N, unsigned jobs = 1);

/* Footer attached to every report. */
extern char const * const inert_wording_note;
extern char const * const h2_derivation_note;

} // namespace obstruct::cup

#endif
