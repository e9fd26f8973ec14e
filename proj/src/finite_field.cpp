#include "obstruct/finite_field.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "obstruct/arith.hpp"

namespace obstruct::ff {

namespace {

/* Remainder of a modulo the monic polynomial g over F_p; both low-to-high. */
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    std::vector<std::uint32_t> const & g,
                                    std::uint32_t p)
{
    std::size_t const dg = g.size() - 1;
    while (a.size() > dg) {
        std::uint64_t const lead = a.back();
        std::size_t const shift = a.size() - 1 - dg;
        if (lead != 0)
            for (std::size_t i = 0; i <= dg; ++i)
                a[shift + i] = static_cast<std::uint32_t>(
                        (a[shift + i] + (p - lead) * g[i]) % p);
        a.pop_back();
    }
    return a;
}

std::vector<std::uint32_t> digits(std::uint64_t index, std::uint32_t p, unsigned n)
{
    std::vector<std::uint32_t> d(n);
    for (unsigned i = 0; i < n; ++i) {
        d[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return d;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 2; r * r <= n; ++r) {
        if (n % r)
            continue;
        out.push_back(r);
        while (n % r == 0)
            n /= r;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace

bool is_irreducible(std::vector<std::uint32_t> const & poly, std::uint32_t p)
{
    unsigned const deg = static_cast<unsigned>(poly.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto g = digits(idx, p, d);
            g.push_back(1);
            auto r = poly_rem(poly, g, p);
            bool zero = true;
            for (auto c : r)
                zero = zero && c == 0;
            if (zero)
                return false;
        }
    }
    return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), size_(1), modulus_(std::move(modulus))
{
    for (unsigned i = 0; i < k; ++i) {
        pow_p_[i] = size_;
        size_ *= p;
    }
}

FieldPtr make_field(std::uint64_t p, unsigned k)
{
    if (p == 2 || !arith::is_prime(arith::Integer(static_cast<unsigned long>(p))))
        throw std::invalid_argument("make_field: characteristic must be an odd prime, got "
                                    + std::to_string(p));
    if (k < 1 || k > 4)
        throw std::invalid_argument("make_field: degree must lie in [1, 4]");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < k; ++i)
        size *= p;
    if (size > (1u << 20))
        throw std::invalid_argument("make_field: field size exceeds 2^20");
    auto const pp = static_cast<std::uint32_t>(p);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        auto poly = digits(idx, pp, k);
        poly.push_back(1);
        if (is_irreducible(poly, pp))
            return FieldPtr(new FiniteField(pp, k, std::move(poly)));
    }
    throw std::logic_error("make_field: no irreducible polynomial found");
}

FFElem FiniteField::zero() const
{
    FFElem x;
    x.field_ = this;
    return x;
}

FFElem FiniteField::one() const
{
    return from_int(1);
}

FFElem FiniteField::from_int(std::int64_t n) const
{
    FFElem x = zero();
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    x.c_[0] = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    return x;
}

FFElem FiniteField::element(std::uint32_t index) const
{
    if (index >= size_)
        throw std::out_of_range("element index out of range");
    FFElem x = zero();
    for (unsigned i = 0; i < k_; ++i) {
        x.c_[i] = index % p_;
        index /= p_;
    }
    return x;
}

FFElem FiniteField::from_coeffs(std::array<std::uint32_t, 4> const & coeffs) const
{
    FFElem x = zero();
    for (unsigned i = 0; i < k_; ++i)
        x.c_[i] = coeffs[i] % p_;
    return x;
}

std::uint32_t FFElem::index() const
{
    std::uint32_t r = 0;
    for (unsigned i = 0; i < field_->k_; ++i)
        r += c_[i] * field_->pow_p_[i];
    return r;
}

bool FFElem::is_zero() const
{
    return c_ == std::array<std::uint32_t, 4>{};
}

bool FFElem::is_one() const
{
    return c_ == std::array<std::uint32_t, 4>{ 1, 0, 0, 0 };
}

FFElem FFElem::operator+(FFElem const & o) const
{
    FFElem r = *this;
    std::uint32_t const p = field_->p_;
    for (unsigned i = 0; i < field_->k_; ++i)
        r.c_[i] = (c_[i] + o.c_[i]) % p;
    return r;
}

FFElem FFElem::operator-() const
{
    FFElem r = *this;
    std::uint32_t const p = field_->p_;
    for (unsigned i = 0; i < field_->k_; ++i)
        r.c_[i] = c_[i] ? p - c_[i] : 0;
    return r;
}

FFElem FFElem::operator-(FFElem const & o) const
{
    return *this + (-o);
}

FFElem FFElem::operator*(FFElem const & o) const
{
    unsigned const k = field_->k_;
    std::uint64_t const p = field_->p_;
    std::array<std::uint64_t, 8> prod{};
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(c_[i]) * o.c_[j]) % p;
    auto const & g = field_->modulus_;
    for (unsigned d = 2 * k - 2; d >= k && d < 8; --d) {
        std::uint64_t const lead = prod[d];
        if (lead == 0)
            continue;
        prod[d] = 0;
        for (unsigned i = 0; i < k; ++i)
            prod[d - k + i] = (prod[d - k + i] + (p - lead) * g[i]) % p;
    }
    FFElem r = *this;
    for (unsigned i = 0; i < k; ++i)
        r.c_[i] = static_cast<std::uint32_t>(prod[i]);
    return r;
}

FFElem FFElem::pow(std::uint64_t e) const
{
    FFElem result = field_->one();
    FFElem base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

FFElem FFElem::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return pow(field_->size_ - 2);
}

FFElem FFElem::pow_signed(std::int64_t e) const
{
    std::int64_t const n = field_->size_ - 1;
    if (e >= 0)
        return pow(static_cast<std::uint64_t>(e));
    if (is_zero())
        throw std::domain_error("negative power of zero");
    std::int64_t r = e % n;
    if (r < 0)
        r += n;
    return pow(static_cast<std::uint64_t>(r));
}

std::uint64_t FFElem::order() const
{
    if (is_zero())
        throw std::domain_error("order of zero");
    std::uint64_t ord = field_->size_ - 1;
    for (std::uint64_t r : distinct_prime_factors(ord))
        while (ord % r == 0 && pow(ord / r).is_one())
            ord /= r;
    return ord;
}

bool FFElem::is_square() const
{
    if (is_zero())
        return true;
    return pow((field_->size_ - 1) / 2).is_one();
}

std::optional<FFElem> FFElem::sqrt() const
{
    if (is_zero())
        return *this;
    if (!is_square())
        return std::nullopt;
    /* Tonelli-Shanks on the cyclic group of order n - 1 = 2^s * odd */
    std::uint64_t q = field_->size_ - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    FFElem z = field_->one();
    for (std::uint32_t i = 1; i < field_->size_; ++i) {
        z = field_->element(i);
        if (!z.is_square())
            break;
    }
    FFElem c = z.pow(q);
    FFElem t = pow(q);
    FFElem r = pow((q + 1) / 2);
    unsigned m = s;
    while (!t.is_one()) {
        unsigned i = 0;
        FFElem tt = t;
        while (!tt.is_one()) {
            tt *= tt;
            ++i;
        }
        FFElem b = c;
        for (unsigned j = 0; j + 1 < m - i; ++j)
            b *= b;
        m = i;
        c = b * b;
        t *= c;
        r *= b;
    }
    FFElem neg = -r;
    return neg.index() < r.index() ? neg : r;
}

std::ostream & operator<<(std::ostream & os, FFElem const & x)
{
    auto const & F = x.field();
    bool first = true;
    for (unsigned i = F.degree(); i-- > 0;) {
        if (x.coeffs()[i] == 0)
            continue;
        if (!first)
            os << "+";
        first = false;
        if (i == 0 || x.coeffs()[i] != 1)
            os << x.coeffs()[i];
        if (i >= 1)
            os << "x";
        if (i >= 2)
            os << "^" << i;
    }
    if (first)
        os << "0";
    return os;
}

FFElem primitive_element(FiniteField const & F)
{
    std::uint64_t const n = F.size() - 1;
    for (std::uint32_t i = 1; i < F.size(); ++i) {
        FFElem x = F.element(i);
        if (x.order() == n)
            return x;
    }
    throw std::logic_error("primitive_element: none found");
}

FFElem frobenius(FFElem const & x, std::uint64_t q)
{
    if (q * q != x.field().size())
        throw std::domain_error("frobenius: q^2 does not match the field size");
    return x.pow(q);
}

} // namespace obstruct::ff
