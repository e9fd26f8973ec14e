#ifndef OBSTRUCT_MATRIX_GROUPS_HPP
#define OBSTRUCT_MATRIX_GROUPS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "obstruct/finite_field.hpp"
#include "obstruct/group_cohomology.hpp"

namespace obstruct::mgroups {

using ff::FFElem;

struct Mat2
{
    FFElem a, b, c, d;

    static Mat2 identity(ff::FiniteField const & F);
    static Mat2 diag(FFElem const & x, FFElem const & y);

    Mat2 operator*(Mat2 const & o) const;
    Mat2 operator-() const;
    Mat2 scaled(FFElem const & s) const;
    FFElem det() const;
    /* Inverse; throws std::domain_error when singular. */
    Mat2 inverse() const;
    /* Entrywise x -> x^e. */
    Mat2 entry_power(std::uint64_t e) const;

    bool operator==(Mat2 const & o) const
    {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

std::ostream & operator<<(std::ostream & os, Mat2 const & m);

/*
 * Element of PGL(2, F): an invertible matrix scaled so that the first
 * nonzero entry in the order a, b, c, d equals 1. Equal classes have equal
 * representatives.
 */
class ProjMat2
{
    Mat2 rep_;

    public:

    explicit ProjMat2(Mat2 const & m);

    Mat2 const & representative() const { return rep_; }
    ProjMat2 operator*(ProjMat2 const & o) const { return ProjMat2(rep_ * o.rep_); }
    ProjMat2 inverse() const { return ProjMat2(rep_.inverse()); }
    bool is_identity() const;
    std::array<std::uint32_t, 4> key() const;

    bool operator==(ProjMat2 const & o) const { return rep_ == o.rep_; }
};

struct ProjMat2Hash
{
    std::size_t operator()(ProjMat2 const & m) const;
};

/* 0 iff det of the representative is a square, i.e. the class lies in PSL. */
int det_class(ProjMat2 const & P);

/* (P, frob) standing for P . alpha^frob in PGL(2, q^2) x| <alpha>. */
struct AutElem
{
    ProjMat2 proj;
    int frob;

    bool operator==(AutElem const & o) const { return frob == o.frob && proj == o.proj; }
};

/*
 * The groups PSL(2, q^2) <= PGL(2, q^2) <= PGL(2, q^2) x| Gal(F_{q^2}/F_q)
 * for an odd prime power q, with the primitive element theta and
 * tau = class of diag(1, theta).
 */
class AutPSL
{
    std::uint64_t q_;
    ff::FieldPtr field_;
    FFElem theta_;

    public:

    /* Throws std::invalid_argument unless q is an odd prime power with q^2 <= 2^20. */
    explicit AutPSL(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    ff::FiniteField const & field() const { return *field_; }
    ff::FieldPtr const & field_ptr() const { return field_; }
    FFElem const & theta() const { return theta_; }

    /* |PSL(2, q^2)| = q^2 (q^4 - 1) / 2 */
    std::uint64_t psl_order() const;
    std::uint64_t pgl_order() const;

    ProjMat2 tau() const;
    ProjMat2 proj_identity() const;
    AutElem identity() const;
    AutElem alpha() const;

    Mat2 frobenius(Mat2 const & m) const { return m.entry_power(q_); }
    ProjMat2 frobenius(ProjMat2 const & m) const { return ProjMat2(frobenius(m.representative())); }

    /* (P1, f1)(P2, f2) = (P1 alpha^f1(P2), f1 + f2) */
    AutElem mul(AutElem const & x, AutElem const & y) const;
    AutElem inverse(AutElem const & x) const;

    /* Conjugation action of Aut on SL(2, q^2): X -> P alpha^f(X) P^-1. */
    Mat2 act(AutElem const & g, Mat2 const & X) const;

    /* Representative of determinant 1 for an element of PSL; of the two
     * such matrices, the one whose scalar has the smaller field index. */
    Mat2 lift_to_sl(ProjMat2 const & P) const;

    /* Generators: elementary matrices over an F_p-basis of F_{q^2}, and
     * additionally diag(1, theta) for PGL. */
    std::vector<ProjMat2> psl_generators() const;
    std::vector<ProjMat2> pgl_generators() const;
};

/* The map Aut(PSL(2, q^2)) -> Z/2 x Z/2, (P, f) -> (det_class(P), f). */
std::pair<int, int> to_quotient(AutElem const & g);

/* Index e + 2f of to_quotient in gcoh::SmallGroup::klein_four(). */
int quotient_index(AutElem const & g);

/* Breadth-first closure in PGL(2, q^2); throws std::length_error past cap. */
std::vector<ProjMat2> enumerate_closure(std::vector<ProjMat2> const & generators,
                                        ProjMat2 const & identity, std::size_t cap);

std::vector<ProjMat2> enumerate_psl(AutPSL const & G, std::size_t cap);
std::vector<ProjMat2> enumerate_pgl(AutPSL const & G, std::size_t cap);

/* Order of the derived subgroup of the group generated by the generators:
 * the normal closure of their pairwise commutators. */
std::size_t derived_subgroup_order(std::vector<ProjMat2> const & generators,
                                   ProjMat2 const & identity, std::size_t cap);

bool is_perfect(std::vector<ProjMat2> const & generators, ProjMat2 const & identity,
                std::size_t cap);

struct PerfectnessReport
{
    std::uint64_t q;
    std::size_t group_order;
    std::size_t derived_order;
    bool perfect;
};

inline constexpr std::size_t default_group_cap = 10000;

/* Refuses (std::length_error) when |PSL(2, q^2)| exceeds cap. */
PerfectnessReport perfectness_report(std::uint64_t q, std::size_t cap = default_group_cap);
bool perfectness_check(std::uint64_t q, std::size_t cap = default_group_cap);

/*
 * Obstruction cocycle of the crossed module SL(2, q^2) -> E where E is an
 * extension of the quotient Q by PSL(2, q^2). Given a section s of E -> Q,
 * F(g, h) = s(g) s(h) s(gh)^-1 lies in PSL; F~ lifts it to SL (identity
 * where F is trivial) and c(g, h, k) in F_2 is defined by
 *
 *     s(g)F~(h, k) . F~(g, hk) = (-1)^c(g,h,k) . F~(g, h) . F~(gh, k).
 */
struct CrossedModuleCocycle
{
    std::uint64_t q;
    ff::FieldPtr field;              /* keeps matrix entries valid */
    std::vector<AutElem> section;
    std::vector<ProjMat2> failure;   /* F, indexed g * |Q| + h */
    std::vector<Mat2> lifts;         /* F~, same indexing */
    gcoh::Cochain table;
    bool cocycle_identity_holds;
};

/* negate_lifts[g * |Q| + h] replaces F~(g, h) by its negative. Throws
 * std::logic_error if the section or the resulting table is inconsistent. */
CrossedModuleCocycle crossed_module_cocycle(AutPSL const & G, gcoh::SmallGroup const & Q,
                                            std::vector<AutElem> const & section,
                                            std::vector<bool> const & negate_lifts = {});

/* Section s(0) = I, s(1) = alpha tau of M(q^2) -> Z/2. */
std::vector<AutElem> m_group_section(AutPSL const & G);
/* Section s(e, f) = (tau^e, f) of Aut(PSL(2, q^2)) -> Z/2 x Z/2. */
std::vector<AutElem> aut_group_section(AutPSL const & G);

CrossedModuleCocycle m_group_cocycle(std::uint64_t q);
CrossedModuleCocycle aut_group_cocycle(std::uint64_t q);

/* Homomorphisms Z/2 -> Z/2 x Z/2 as index maps. */
std::vector<int> first_factor_inclusion();
std::vector<int> second_factor_inclusion();
std::vector<int> diagonal_inclusion();

} // namespace obstruct::mgroups

#endif
