#ifndef OBSTRUCT_QUAD_FIELD_HPP
#define OBSTRUCT_QUAD_FIELD_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "obstruct/arith.hpp"

namespace obstruct::qf {

using arith::Integer;

/* Fundamental discriminant of Q(sqrt m); m must be negative and squarefree. */
Integer discriminant(Integer const & m);

/* p* = (-1)^((p-1)/2) p for odd p, or one of -4, 8, -8 for p = 2. */
struct PrimeDiscriminant
{
    Integer value;
    Integer prime;
};

class ImagQuadField
{
    Integer m_;
    Integer D_;
    std::vector<PrimeDiscriminant> prime_discs_;

    public:

    /* Throws std::invalid_argument unless m < 0 is squarefree. */
    explicit ImagQuadField(Integer const & m);

    Integer const & m() const { return m_; }
    Integer const & D() const { return D_; }
    /* Sorted by increasing prime; the product is D. */
    std::vector<PrimeDiscriminant> const & prime_discriminants() const { return prime_discs_; }
    /* Number t of prime discriminants dividing D. */
    unsigned num_prime_discriminants() const { return static_cast<unsigned>(prime_discs_.size()); }
    /* Genus-theoretic 2-rank t - 1 of the class group. */
    unsigned two_rank() const { return num_prime_discriminants() - 1; }
    /* Position of the prime discriminant at p, or -1. */
    int position_of_prime(Integer const & p) const;

    bool operator==(ImagQuadField const & o) const { return D_ == o.D_; }
};

std::vector<PrimeDiscriminant> prime_discriminants(ImagQuadField const & K);

/*
 * A class in H^1(Spec O_K, Z/2), i.e. an unramified quadratic extension
 * K(sqrt c) with c a product of prime discriminants of K. The support is a
 * bitmask over K.prime_discriminants(); a support and its complement
 * describe the same class. A class is canonical when its support avoids the
 * prime discriminant of the smallest ramified prime (bit 0).
 */
class H1Class
{
    ImagQuadField const * field_ = nullptr;
    std::uint64_t support_ = 0;

    public:

    H1Class(ImagQuadField const & K, std::uint64_t support);

    ImagQuadField const & field() const { return *field_; }
    std::uint64_t support() const { return support_; }
    std::uint64_t full_mask() const;

    bool is_zero() const { return support_ == 0 || support_ == full_mask(); }
    H1Class complement() const { return H1Class(*field_, full_mask() ^ support_); }
    H1Class canonical() const;
    /* Group law: symmetric difference of supports. */
    H1Class operator+(H1Class const & o) const;

    /* Product of the prime discriminants in the support (1 when empty). */
    Integer generator() const;
    /* The generator of the canonical representative; "0" for the zero class. */
    std::string label() const;
    /* Rational primes below the support. */
    std::vector<Integer> support_primes() const;

    /* Class equality, independent of the representative. */
    bool same_class(H1Class const & o) const;
};

/* All 2^(t-1) - 1 nonzero classes, canonical, ordered by support mask. */
std::vector<H1Class> h1_classes(ImagQuadField const & K);

/* Parses a label: "0" (zero class) or the generator of either representative.
 * The returned class keeps the representative that was named. */
std::optional<H1Class> find_class(ImagQuadField const & K, Integer const & generator);

enum class Splitting { Split, Inert, Ramified };

char const * to_string(Splitting s);

/* Throws std::invalid_argument if p is not prime. */
Splitting splitting(ImagQuadField const & K, Integer const & p);

/*
 * Whether the prime of K above the ramified rational prime p stays inert in
 * K(sqrt c_x). Uses the representative of x whose support avoids p and
 * evaluates its Kronecker symbol at p. Throws std::invalid_argument when
 * p does not divide D or x is zero.
 */
bool inert_in_extension(ImagQuadField const & K, H1Class const & x, Integer const & p);

/* Positive definite binary quadratic form a x^2 + b xy + c y^2. */
struct QuadForm
{
    std::int64_t a, b, c;

    std::int64_t discriminant() const;
    bool is_reduced() const;
    bool operator==(QuadForm const & o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(QuadForm const & o) const
    {
        return a != o.a ? a < o.a : b != o.b ? b < o.b : c < o.c;
    }
};

/* Arithmetic on forms throws std::overflow_error rather than wrapping. */
QuadForm reduce(QuadForm f);
QuadForm principal_form(std::int64_t D);
QuadForm compose(QuadForm const & f, QuadForm const & g);
QuadForm inverse(QuadForm const & f);

inline constexpr std::int64_t class_group_bound = 100000000;

/* All primitive reduced forms of discriminant D < 0, sorted. */
std::vector<QuadForm> reduced_forms(std::int64_t D);

struct ClassGroup
{
    std::int64_t D = 0;
    std::uint64_t order = 0;                 /* number of reduced forms */
    std::vector<std::uint64_t> invariants;   /* d_1 | d_2 | ..., all > 1 */

    std::uint64_t structure_order() const;
    unsigned two_rank() const;
};

using Composer = std::function<QuadForm(QuadForm const &, QuadForm const &)>;

/*
 * Structure from composition: a generating set is grown greedily, each new
 * generator contributing a relation row, and the relation matrix is brought
 * to Smith normal form. Does not check the result against the form count.
 */
ClassGroup class_group_from_forms(std::int64_t D, std::vector<QuadForm> const & forms,
                                  Composer const & compose_fn);

/* Throws std::length_error when |D| exceeds class_group_bound and
 * std::logic_error if the structure disagrees with the form count. */
ClassGroup class_group(ImagQuadField const & K);

/* Invariant factors of an integer matrix (Smith normal form diagonal, > 1). */
std::vector<std::uint64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m);

/* Negative fundamental discriminants with |D| <= bound: -3, -4, -7, -8, ... */
std::vector<std::int64_t> fundamental_discriminants(std::int64_t bound);

/* Squarefree m with D(m) = D. */
Integer field_parameter(Integer const & D);

} // namespace obstruct::qf

#endif
