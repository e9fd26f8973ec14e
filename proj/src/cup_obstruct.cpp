#include "obstruct/cup_obstruct.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "obstruct/group_cohomology.hpp"
#include "obstruct/matrix_groups.hpp"

namespace obstruct::cup {

char const * const inert_wording_note =
        "criterion counts primes of div(d)/2 that are INERT in L; the obstruction "
        "theorems phrase the same sum over primes 'unramified in L', while the "
        "triple cup product formula and both family proofs use inertness";

char const * const h2_derivation_note =
        "dim H^2 = dim H^1 + 1 is derived from units/(units)^2 -> Z_1/B_1 -> Cl[2], "
        "not read off a closed formula";

CohomologySummary cohomology_summary(ImagQuadField const & K)
{
    CohomologySummary s;
    unsigned const t = K.num_prime_discriminants();
    s.dims = { 1, t - 1, t, 1 };
    for (auto const & x : qf::h1_classes(K))
        s.h1_labels.push_back(x.label());
    return s;
}

CupEvidence triple_cup(ImagQuadField const & K, H1Class const & x, H1Class const & y)
{
    if (!(x.field() == K) || !(y.field() == K))
        throw std::invalid_argument("triple_cup: classes belong to a different field");
    if (x.is_zero())
        throw std::invalid_argument("triple_cup: x must be a nonzero class");
    CupEvidence ev{ x, y, {}, 0 };
    Integer const d = y.generator();
    for (auto const & p : y.support_primes()) {
        bool const inert = qf::inert_in_extension(K, x, p);
        unsigned e = 0;
        for (Integer r = d; r % p == 0; r /= p)
            ++e;
        ev.per_prime.push_back({ p, e, inert });
        if (inert)
            ev.parity ^= static_cast<int>(e & 1);
    }
    return ev;
}

char const * to_string(FieldCondition c)
{
    switch (c) {
    case FieldCondition::Holds: return "Holds";
    case FieldCondition::FailsWithWitness: return "FailsWithWitness";
    case FieldCondition::VacuousNoSurjection: return "VacuousNoSurjection";
    }
    return "?";
}

char const * to_string(GroupFamily f)
{
    return f == GroupFamily::M ? "M" : "AutPSL";
}

char const * to_string(Outcome o)
{
    switch (o) {
    case Outcome::Obstructed: return "Obstructed";
    case Outcome::TriviallyBlocked: return "TriviallyBlocked";
    case Outcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

PropertyResult property_ssa(ImagQuadField const & K)
{
    PropertyResult r{ FieldCondition::VacuousNoSurjection, {}, {}, 0 };
    if (K.two_rank() == 0)
        return r;
    r.condition = FieldCondition::Holds;
    for (auto const & x : qf::h1_classes(K)) {
        ++r.checked;
        if (triple_cup(K, x, x).parity == 0) {
            r.condition = FieldCondition::FailsWithWitness;
            r.witness_a = x;
            return r;
        }
    }
    return r;
}

PropertyResult property_ssb(ImagQuadField const & K)
{
    PropertyResult r{ FieldCondition::VacuousNoSurjection, {}, {}, 0 };
    if (K.two_rank() < 2)
        return r;
    r.condition = FieldCondition::Holds;
    auto const classes = qf::h1_classes(K);
    for (auto const & a : classes) {
        for (auto const & b : classes) {
            if (a.same_class(b))
                continue;
            ++r.checked;
            if (triple_cup(K, a, b).parity == 0) {
                r.condition = FieldCondition::FailsWithWitness;
                r.witness_a = a;
                r.witness_b = b;
                return r;
            }
        }
    }
    return r;
}

bool has_required_shape(GroupFamily family, std::vector<std::uint8_t> const & coords)
{
    if (family == GroupFamily::M)
        return coords == std::vector<std::uint8_t>{ 1 };
    return coords == std::vector<std::uint8_t>{ 0, 1, 0, 0 }
        || coords == std::vector<std::uint8_t>{ 0, 0, 1, 0 };
}

GroupCertificate group_certificate(GroupFamily family, std::uint64_t q, std::size_t cap)
{
    auto const [p, e] = arith::prime_power(Integer(static_cast<unsigned long>(q)));
    if (e == 0 || p == 2)
        throw std::invalid_argument("q must be an odd prime power, got " + std::to_string(q));

    GroupCertificate c{ family, q, false, {}, {}, false, false };
    unsigned __int128 const q2 = static_cast<unsigned __int128>(q) * q;
    unsigned __int128 const psl_order = q2 * (q2 * q2 - 1) / 2;
    bool const live = psl_order <= cap && 2 * e <= 4 && q2 <= (1u << 20);
    if (!live) {
        /* holds for every odd prime power; not recomputed here */
        c.class_name = family == GroupFamily::M ? "a^3" : "a^2 b or a b^2";
        c.coords = family == GroupFamily::M ? std::vector<std::uint8_t>{ 1 }
                                            : std::vector<std::uint8_t>{};
        c.required_shape = true;
        return c;
    }
    auto const cm = family == GroupFamily::M ? mgroups::m_group_cocycle(q)
                                             : mgroups::aut_group_cocycle(q);
    auto const cls = gcoh::classify3(cm.table);
    c.computed = true;
    c.class_name = cls.name();
    c.coords = cls.coords;
    c.cocycle_identity_holds = cm.cocycle_identity_holds;
    c.required_shape = c.cocycle_identity_holds && has_required_shape(family, cls.coords);
    return c;
}

ObstructionReport verdict(ImagQuadField const & K, GroupFamily family, std::uint64_t q,
                          std::size_t cap)
{
    ObstructionReport r{ K.m(), K.D(), K.two_rank(), family, q,
                         group_certificate(family, q, cap), {}, Outcome::Inconclusive,
                         false, {} };
    unsigned const needed_rank = family == GroupFamily::M ? 1 : 2;
    r.field_condition = family == GroupFamily::M ? property_ssa(K) : property_ssb(K);
    r.solvable_quotient_realizable = K.two_rank() >= needed_rank;
    if (!r.certificate.computed)
        r.flags.push_back("group certificate cited: |PSL(2,q^2)| exceeds the enumeration cap");
    if (r.field_condition.condition == FieldCondition::VacuousNoSurjection)
        r.outcome = Outcome::TriviallyBlocked;
    else if (r.certificate.required_shape && r.field_condition.condition == FieldCondition::Holds)
        r.outcome = Outcome::Obstructed;
    else
        r.outcome = Outcome::Inconclusive;
    return r;
}

namespace {

/* Runs body(i) for i in [0, n) on up to jobs threads. */
template <typename Body>
void parallel_for(std::size_t n, unsigned jobs, Body body)
{
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{ 0 };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < std::min<std::size_t>(jobs, n); ++j)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;)
                body(i);
        });
    for (auto & t : pool)
        t.join();
}

int legendre(std::uint64_t a, std::uint64_t p)
{
    return arith::kronecker(Integer(static_cast<unsigned long>(a)),
                            Integer(static_cast<unsigned long>(p)));
}

} // namespace

std::vector<FamilyAHit> search_family_a(std::uint64_t N, unsigned jobs)
{
    auto const primes = arith::primes_up_to(N);
    std::vector<std::vector<FamilyAHit>> buckets(primes.size());
    parallel_for(primes.size(), jobs, [&](std::size_t i) {
        std::uint64_t const p = primes[i];
        if (p % 4 != 1)
            return;
        for (std::uint64_t q : primes) {
            if (q % 4 != 3 || legendre(q, p) != -1)
                continue;
            Integer const m = -Integer(static_cast<unsigned long>(p * q));
            ImagQuadField const K(m);
            buckets[i].push_back({ p, q, m, property_ssa(K).condition });
        }
    });
    std::vector<FamilyAHit> out;
    for (auto & b : buckets)
        out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<FamilyBHit> search_family_b(std::uint64_t N, unsigned jobs)
{
    auto const primes = arith::primes_up_to(N);
    std::vector<std::vector<FamilyBHit>> buckets(primes.size());
    parallel_for(primes.size(), jobs, [&](std::size_t i) {
        std::uint64_t const p1 = primes[i];
        if (p1 == 2)
            return;
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            std::uint64_t const p2 = primes[j];
            if (legendre(p1, p2) != -1 || legendre(p2, p1) != -1)
                continue;
            for (std::size_t k = j + 1; k < primes.size(); ++k) {
                std::uint64_t const p3 = primes[k];
                if ((p1 * p2 * p3) % 4 != 3)
                    continue;
                if (legendre(p1, p3) != -1 || legendre(p3, p1) != -1
                    || legendre(p2, p3) != -1 || legendre(p3, p2) != -1)
                    continue;
                Integer const m = -Integer(static_cast<unsigned long>(p1 * p2 * p3));
                ImagQuadField const K(m);
                buckets[i].push_back({ p1, p2, p3, m, property_ssb(K).condition });
            }
        }
    });
    std::vector<FamilyBHit> out;
    for (auto & b : buckets)
        out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace obstruct::cup
