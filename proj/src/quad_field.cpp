#include "obstruct/quad_field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace obstruct::qf {

namespace {

std::int64_t add_checked(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("quadratic form arithmetic overflow");
    return r;
}

std::int64_t sub_checked(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("quadratic form arithmetic overflow");
    return r;
}

std::int64_t mul_checked(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("quadratic form arithmetic overflow");
    return r;
}

std::int64_t floor_div(std::int64_t x, std::int64_t y)
{
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0)))
        --q;
    return q;
}

std::int64_t mod_pos(std::int64_t x, std::int64_t m)
{
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

/* u x + v y = g = gcd(x, y) >= 0 */
std::int64_t xgcd(std::int64_t x, std::int64_t y, std::int64_t & u, std::int64_t & v)
{
    std::int64_t r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t const q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 < 0) {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    u = s0;
    v = t0;
    return r0;
}

bool squarefree_small(std::int64_t n)
{
    n = n < 0 ? -n : n;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

} // namespace

Integer discriminant(Integer const & m)
{
    if (m >= 0)
        throw std::invalid_argument("m must be negative, got " + m.get_str());
    if (!arith::is_squarefree(m))
        throw std::invalid_argument("m must be squarefree, got " + m.get_str());
    Integer r = m % 4;
    if (r < 0)
        r += 4;
    return r == 1 ? m : Integer(4 * m);
}

ImagQuadField::ImagQuadField(Integer const & m)
    : m_(m), D_(discriminant(m))
{
    auto const f = arith::factor(m_);
    Integer odd_product = 1;
    for (auto const & [p, e] : f.factors) {
        if (p == 2)
            continue;
        Integer const star = (p % 4 == 1) ? p : Integer(-p);
        odd_product *= star;
        prime_discs_.push_back({ star, p });
    }
    Integer const even_part = D_ / odd_product;
    if (even_part != 1) {
        if (even_part != -4 && even_part != 8 && even_part != -8)
            throw std::logic_error("unexpected 2-part of the discriminant: " + even_part.get_str());
        prime_discs_.insert(prime_discs_.begin(), PrimeDiscriminant{ even_part, 2 });
    }
    if (prime_discs_.size() > 63)
        throw std::invalid_argument("too many prime discriminants");
}

int ImagQuadField::position_of_prime(Integer const & p) const
{
    for (std::size_t i = 0; i < prime_discs_.size(); ++i)
        if (prime_discs_[i].prime == p)
            return static_cast<int>(i);
    return -1;
}

std::vector<PrimeDiscriminant> prime_discriminants(ImagQuadField const & K)
{
    return K.prime_discriminants();
}

H1Class::H1Class(ImagQuadField const & K, std::uint64_t support)
    : field_(&K), support_(support)
{
    if (support & ~full_mask())
        throw std::invalid_argument("H1Class: support outside the prime discriminants");
}

std::uint64_t H1Class::full_mask() const
{
    return (std::uint64_t(1) << field_->num_prime_discriminants()) - 1;
}

H1Class H1Class::canonical() const
{
    if (is_zero())
        return H1Class(*field_, 0);
    return (support_ & 1) ? complement() : *this;
}

H1Class H1Class::operator+(H1Class const & o) const
{
    if (!(*field_ == *o.field_))
        throw std::invalid_argument("H1Class: adding classes of different fields");
    return H1Class(*field_, support_ ^ o.support_);
}

Integer H1Class::generator() const
{
    Integer g = 1;
    auto const & pd = field_->prime_discriminants();
    for (std::size_t i = 0; i < pd.size(); ++i)
        if (support_ >> i & 1)
            g *= pd[i].value;
    return g;
}

std::string H1Class::label() const
{
    if (is_zero())
        return "0";
    return canonical().generator().get_str();
}

std::vector<Integer> H1Class::support_primes() const
{
    std::vector<Integer> out;
    auto const & pd = field_->prime_discriminants();
    for (std::size_t i = 0; i < pd.size(); ++i)
        if (support_ >> i & 1)
            out.push_back(pd[i].prime);
    return out;
}

bool H1Class::same_class(H1Class const & o) const
{
    return *field_ == *o.field_ && canonical().support_ == o.canonical().support_;
}

std::vector<H1Class> h1_classes(ImagQuadField const & K)
{
    std::vector<H1Class> out;
    unsigned const r = K.two_rank();
    if (r > 30)
        throw std::length_error("too many H^1 classes to enumerate");
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask)
        out.emplace_back(K, mask << 1);
    return out;
}

std::optional<H1Class> find_class(ImagQuadField const & K, Integer const & generator)
{
    if (generator == 0 || generator == 1)
        return H1Class(K, 0);
    auto const & pd = K.prime_discriminants();
    Integer rest = generator;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < pd.size(); ++i) {
        if (rest % pd[i].prime == 0) {
            rest /= pd[i].value;
            mask |= std::uint64_t(1) << i;
        }
    }
    if (rest != 1)
        return std::nullopt;
    return H1Class(K, mask);
}

char const * to_string(Splitting s)
{
    switch (s) {
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
    }
    return "?";
}

Splitting splitting(ImagQuadField const & K, Integer const & p)
{
    if (!arith::is_prime(p))
        throw std::invalid_argument("splitting: " + p.get_str() + " is not prime");
    if (K.D() % p == 0)
        return Splitting::Ramified;
    return arith::kronecker(K.D(), p) == 1 ? Splitting::Split : Splitting::Inert;
}

bool inert_in_extension(ImagQuadField const & K, H1Class const & x, Integer const & p)
{
    int const pos = K.position_of_prime(p);
    if (pos < 0)
        throw std::invalid_argument("inert_in_extension: " + p.get_str()
                                    + " does not divide the discriminant");
    if (x.is_zero())
        throw std::invalid_argument("inert_in_extension: zero class");
    H1Class const rep = (x.support() >> pos & 1) ? x.complement() : x;
    return arith::kronecker(rep.generator(), p) == -1;
}

std::int64_t QuadForm::discriminant() const
{
    return sub_checked(mul_checked(b, b), mul_checked(4, mul_checked(a, c)));
}

bool QuadForm::is_reduced() const
{
    std::int64_t const ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c))
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

QuadForm reduce(QuadForm f)
{
    if (f.a <= 0)
        throw std::domain_error("reduce: form is not positive definite");
    auto normalize = [](QuadForm & g) {
        if (-g.a < g.b && g.b <= g.a)
            return;
        std::int64_t const r = floor_div(g.a - g.b, 2 * g.a);
        std::int64_t const nb = add_checked(g.b, mul_checked(2 * g.a, r));
        g.c = add_checked(g.c, mul_checked(r, add_checked(g.b, mul_checked(g.a, r))));
        g.b = nb;
    };
    normalize(f);
    while (f.a > f.c) {
        f = QuadForm{ f.c, -f.b, f.a };
        normalize(f);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm principal_form(std::int64_t D)
{
    std::int64_t const b = mod_pos(D, 2);
    return QuadForm{ 1, b, (b * b - D) / 4 };
}

QuadForm compose(QuadForm const & f, QuadForm const & g)
{
    QuadForm f1 = f, f2 = g;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    std::int64_t const D = f1.discriminant();
    std::int64_t const s = (f1.b + f2.b) / 2;
    std::int64_t const n = f2.b - s;
    std::int64_t y1, d;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        std::int64_t u, v;
        d = xgcd(f2.a, f1.a, u, v);
        y1 = u;
    }
    std::int64_t x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        d1 = xgcd(s, d, x2, y2);
        y2 = -y2;
    }
    std::int64_t const v1 = f1.a / d1;
    std::int64_t const v2 = f2.a / d1;
    std::int64_t const r = mod_pos(sub_checked(mul_checked(mul_checked(y1, y2), n) % v1,
                                               mul_checked(x2 % v1, f2.c % v1) % v1),
                                   v1);
    std::int64_t const b3 = add_checked(f2.b, mul_checked(2 * v2, r));
    std::int64_t const a3 = mul_checked(v1, v2);
    std::int64_t const num = sub_checked(mul_checked(b3, b3), D);
    if (num % (4 * a3) != 0)
        throw std::logic_error("compose: inconsistent composite");
    return reduce(QuadForm{ a3, b3, num / (4 * a3) });
}

QuadForm inverse(QuadForm const & f)
{
    return reduce(QuadForm{ f.a, -f.b, f.c });
}

std::vector<QuadForm> reduced_forms(std::int64_t D)
{
    if (D >= 0 || mod_pos(D, 4) > 1)
        throw std::invalid_argument("reduced_forms: D must be negative and 0 or 1 mod 4");
    std::vector<QuadForm> out;
    std::int64_t const absD = -D;
    for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (mod_pos(b - D, 2) != 0)
                continue;
            std::int64_t const num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t const c = num / (4 * a);
            QuadForm const f{ a, b, c };
            if (!f.is_reduced())
                continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1)
                continue;
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ClassGroup::structure_order() const
{
    std::uint64_t h = 1;
    for (auto d : invariants)
        h *= d;
    return h;
}

unsigned ClassGroup::two_rank() const
{
    return static_cast<unsigned>(std::count_if(invariants.begin(), invariants.end(),
                                               [](std::uint64_t d) { return d % 2 == 0; }));
}

std::vector<std::uint64_t> smith_invariants(std::vector<std::vector<std::int64_t>> m)
{
    std::size_t const rows = m.size();
    std::size_t const cols = rows ? m[0].size() : 0;
    std::vector<std::uint64_t> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            /* smallest nonzero entry of the trailing block goes to (t, t) */
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0
                        && (pi == rows || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows)
                break;
            std::swap(m[t], m[pi]);
            for (auto & row : m)
                std::swap(row[t], row[pj]);
            std::int64_t const piv = m[t][t];
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                std::int64_t const q = m[i][t] / piv;
                if (q)
                    for (std::size_t j = t; j < cols; ++j)
                        m[i][j] = sub_checked(m[i][j], mul_checked(q, m[t][j]));
                clean = clean && m[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                std::int64_t const q = m[t][j] / piv;
                if (q)
                    for (std::size_t i = t; i < rows; ++i)
                        m[i][j] = sub_checked(m[i][j], mul_checked(q, m[i][t]));
                clean = clean && m[t][j] == 0;
            }
            if (!clean)
                continue;
            /* divisibility condition on the trailing block */
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % piv != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                m[t][j] = add_checked(m[t][j], m[bad][j]);
        }
        std::int64_t const v = m[t][t];
        diag.push_back(static_cast<std::uint64_t>(v < 0 ? -v : v));
    }
    std::vector<std::uint64_t> out;
    for (auto d : diag)
        if (d != 1)
            out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

ClassGroup class_group_from_forms(std::int64_t D, std::vector<QuadForm> const & forms,
                                  Composer const & compose_fn)
{
    ClassGroup G;
    G.D = D;
    G.order = forms.size();

    QuadForm const one = principal_form(D);
    /* element -> coordinates in the generators chosen so far */
    std::map<QuadForm, std::vector<std::int64_t>> coords{ { reduce(one), {} } };
    std::vector<std::vector<std::int64_t>> relations;

    for (auto const & f : forms) {
        if (coords.count(f))
            continue;
        std::size_t const k = relations.size();
        /* smallest n with f^n in the current subgroup */
        std::int64_t n = 1;
        QuadForm power = f;
        while (!coords.count(power)) {
            power = compose_fn(power, f);
            ++n;
            if (static_cast<std::uint64_t>(n) > forms.size() + 1)
                throw std::logic_error("class group: element order exceeds the form count");
        }
        std::vector<std::int64_t> rel(k + 1, 0);
        auto const & base = coords.at(power);
        for (std::size_t i = 0; i < base.size(); ++i)
            rel[i] = -base[i];
        rel[k] = n;
        for (auto & r : relations)
            r.push_back(0);
        relations.push_back(std::move(rel));

        std::vector<std::pair<QuadForm, std::vector<std::int64_t>>> old(coords.begin(), coords.end());
        for (auto & [g, c] : coords)
            c.push_back(0);
        for (auto const & [g, c] : old) {
            QuadForm x = g;
            for (std::int64_t j = 1; j < n; ++j) {
                x = compose_fn(x, f);
                auto cj = c;
                cj.push_back(j);
                coords.emplace(x, std::move(cj));
            }
        }
    }
    G.invariants = smith_invariants(relations);
    return G;
}

ClassGroup class_group(ImagQuadField const & K)
{
    Integer const absD = abs(K.D());
    if (absD > class_group_bound)
        throw std::length_error("class group: |D| = " + absD.get_str()
                                + " exceeds the enumeration bound");
    std::int64_t const D = arith::to_int64(K.D());
    auto const forms = reduced_forms(D);
    ClassGroup G = class_group_from_forms(D, forms, [](QuadForm const & x, QuadForm const & y) {
        return compose(x, y);
    });
    if (G.structure_order() != G.order)
        throw std::logic_error("class group: structure order disagrees with the form count");
    return G;
}

std::vector<std::int64_t> fundamental_discriminants(std::int64_t bound)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = 3; n <= bound; ++n) {
        std::int64_t const D = -n;
        std::int64_t const r = mod_pos(D, 4);
        if (r == 1 && squarefree_small(D))
            out.push_back(D);
        else if (r == 0) {
            std::int64_t const m = D / 4;
            std::int64_t const rm = mod_pos(m, 4);
            if ((rm == 2 || rm == 3) && squarefree_small(m))
                out.push_back(D);
        }
    }
    return out;
}

Integer field_parameter(Integer const & D)
{
    Integer r = D % 4;
    if (r < 0)
        r += 4;
    return r == 0 ? Integer(D / 4) : D;
}

} // namespace obstruct::qf
