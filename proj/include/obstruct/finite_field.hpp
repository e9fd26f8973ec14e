#ifndef OBSTRUCT_FINITE_FIELD_HPP
#define OBSTRUCT_FINITE_FIELD_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

namespace obstruct::ff {

class FFElem;

/*
 * F_{p^k} = F_p[x]/(f) for odd p, k <= 4, p^k <= 2^20. The modulus f is the
 * least monic irreducible polynomial of degree k, ordering polynomials by
 * the integer sum c_i p^i of their lower coefficients.
 *
 * Elements are identified with the integers 0 .. p^k - 1 through the same
 * base-p encoding; this is the enumeration order used everywhere.
 */
class FiniteField
{
    std::uint32_t p_;
    unsigned k_;
    std::uint32_t size_;
    std::vector<std::uint32_t> modulus_;   /* k+1 coefficients, monic */
    std::array<std::uint32_t, 4> pow_p_{};

    FiniteField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

    friend std::shared_ptr<FiniteField const> make_field(std::uint64_t p, unsigned k);
    friend class FFElem;

    public:

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t size() const { return size_; }
    std::vector<std::uint32_t> const & modulus() const { return modulus_; }

    FFElem zero() const;
    FFElem one() const;
    FFElem from_int(std::int64_t n) const;
    FFElem element(std::uint32_t index) const;
    FFElem from_coeffs(std::array<std::uint32_t, 4> const & coeffs) const;
};

using FieldPtr = std::shared_ptr<FiniteField const>;

FieldPtr make_field(std::uint64_t p, unsigned k);

/* True iff the monic polynomial with the given coefficients (low to high,
 * leading 1 included) has no monic factor of degree 1 .. deg/2 over F_p. */
bool is_irreducible(std::vector<std::uint32_t> const & poly, std::uint32_t p);

class FFElem
{
    FiniteField const * field_ = nullptr;
    std::array<std::uint32_t, 4> c_{};

    friend class FiniteField;

    public:

    FFElem() = default;

    FiniteField const & field() const { return *field_; }
    std::array<std::uint32_t, 4> const & coeffs() const { return c_; }
    std::uint32_t index() const;
    bool is_zero() const;
    bool is_one() const;

    FFElem operator+(FFElem const & o) const;
    FFElem operator-(FFElem const & o) const;
    FFElem operator-() const;
    FFElem operator*(FFElem const & o) const;
    FFElem & operator+=(FFElem const & o) { return *this = *this + o; }
    FFElem & operator*=(FFElem const & o) { return *this = *this * o; }

    FFElem pow(std::uint64_t e) const;
    /* x^e for signed e; x must be nonzero when e < 0. */
    FFElem pow_signed(std::int64_t e) const;
    FFElem inverse() const;

    /* Multiplicative order; x must be nonzero. */
    std::uint64_t order() const;
    bool is_square() const;
    /* Square root with the smaller index, if one exists. */
    std::optional<FFElem> sqrt() const;

    bool operator==(FFElem const & o) const { return c_ == o.c_; }
    bool operator!=(FFElem const & o) const { return c_ != o.c_; }
};

std::ostream & operator<<(std::ostream & os, FFElem const & x);

/* Least element (in index order) of full multiplicative order p^k - 1. */
FFElem primitive_element(FiniteField const & F);

/* x -> x^q where F = F_{q^2}. Throws std::domain_error if q^2 != |F|. */
FFElem frobenius(FFElem const & x, std::uint64_t q);

} // namespace obstruct::ff

#endif
