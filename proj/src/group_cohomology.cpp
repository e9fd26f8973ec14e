#include "obstruct/group_cohomology.hpp"

#include <stdexcept>

#include "f2_echelon.hpp"

namespace obstruct::gcoh {

using detail::F2Echelon;

SmallGroup::SmallGroup(std::string name, std::vector<std::vector<int>> const & table)
    : name_(std::move(name)), order_(static_cast<int>(table.size())), identity_(-1)
{
    int const n = order_;
    if (n < 1 || n > 8)
        throw std::invalid_argument("SmallGroup: order must lie in [1, 8]");
    table_.reserve(n * n);
    for (auto const & row : table) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("SmallGroup: table is not square");
        for (int v : row) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("SmallGroup: entry out of range");
            table_.push_back(v);
        }
    }
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            ok = ok && mul(e, x) == x && mul(x, e) == x;
        if (ok)
            identity_ = e;
    }
    if (identity_ < 0)
        throw std::invalid_argument("SmallGroup: no identity element");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    throw std::invalid_argument("SmallGroup: not associative");
    inverse_.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mul(x, y) == identity_ && mul(y, x) == identity_)
                inverse_[x] = y;
    for (int x = 0; x < n; ++x)
        if (inverse_[x] < 0)
            throw std::invalid_argument("SmallGroup: element without inverse");
}

SmallGroup SmallGroup::cyclic(int n)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = (i + j) % n;
    return SmallGroup("Z/" + std::to_string(n), t);
}

SmallGroup SmallGroup::direct_product(SmallGroup const & a, SmallGroup const & b)
{
    /* (x, y) at index x + |a| * y */
    int const na = a.order(), nb = b.order();
    std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
    for (int i = 0; i < na * nb; ++i)
        for (int j = 0; j < na * nb; ++j)
            t[i][j] = a.mul(i % na, j % na) + na * b.mul(i / na, j / na);
    return SmallGroup(a.name() + " x " + b.name(), t);
}

SmallGroup const & SmallGroup::z2()
{
    static SmallGroup const g = cyclic(2);
    return g;
}

SmallGroup const & SmallGroup::klein_four()
{
    static SmallGroup const g = direct_product(z2(), z2());
    return g;
}

SmallGroup const & SmallGroup::trivial()
{
    static SmallGroup const g = cyclic(1);
    return g;
}

namespace {

std::size_t ipow(std::size_t b, unsigned e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

F2Echelon::Bits to_bits(Cochain const & c, F2Echelon const & E)
{
    auto bits = E.make_bits();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.values[i])
            F2Echelon::flip(bits, i);
    return bits;
}

Cochain from_bits(SmallGroup const & G, unsigned degree, F2Echelon::Bits const & bits)
{
    Cochain c = zero_cochain(G, degree);
    for (std::size_t i = 0; i < c.size(); ++i)
        c.values[i] = F2Echelon::test(bits, i);
    return c;
}

/* Coboundaries of the basis cochains of degree n - 1. */
F2Echelon coboundary_space(SmallGroup const & G, unsigned n)
{
    F2Echelon E(ipow(G.order(), n), 0);
    if (n == 0)
        return E;
    Cochain e = zero_cochain(G, n - 1);
    for (std::size_t j = 0; j < e.size(); ++j) {
        e.values.assign(e.size(), 0);
        e.values[j] = 1;
        E.insert(to_bits(coboundary(e), E));
    }
    return E;
}

void require_same_group(Cochain const & a, Cochain const & b)
{
    if (a.group != b.group)
        throw std::invalid_argument("cochains live on different groups");
}

} // namespace

std::size_t Cochain::index_of(std::span<int const> args) const
{
    if (args.size() != degree)
        throw std::invalid_argument("cochain evaluated on a tuple of the wrong length");
    std::size_t idx = 0;
    for (int g : args)
        idx = idx * group->order() + static_cast<std::size_t>(g);
    return idx;
}

std::vector<int> Cochain::tuple_at(std::size_t index) const
{
    std::vector<int> t(degree);
    for (unsigned i = degree; i-- > 0;) {
        t[i] = static_cast<int>(index % group->order());
        index /= group->order();
    }
    return t;
}

bool Cochain::is_zero() const
{
    for (auto v : values)
        if (v)
            return false;
    return true;
}

Cochain Cochain::operator+(Cochain const & o) const
{
    require_same_group(*this, o);
    if (degree != o.degree)
        throw std::invalid_argument("adding cochains of different degrees");
    Cochain r = *this;
    for (std::size_t i = 0; i < values.size(); ++i)
        r.values[i] ^= o.values[i];
    return r;
}

Cochain zero_cochain(SmallGroup const & G, unsigned degree)
{
    return Cochain{ &G, degree, std::vector<std::uint8_t>(ipow(G.order(), degree), 0) };
}

Cochain homomorphism_cochain(SmallGroup const & G, std::vector<std::uint8_t> const & values)
{
    if (static_cast<int>(values.size()) != G.order())
        throw std::invalid_argument("homomorphism_cochain: wrong number of values");
    Cochain c = zero_cochain(G, 1);
    for (std::size_t i = 0; i < values.size(); ++i)
        c.values[i] = values[i] & 1;
    return c;
}

Cochain coboundary(Cochain const & c)
{
    SmallGroup const & G = *c.group;
    unsigned const n = c.degree + 1;
    Cochain d = zero_cochain(G, n);
    std::vector<int> args(c.degree);
    for (std::size_t idx = 0; idx < d.size(); ++idx) {
        auto g = d.tuple_at(idx);
        std::uint8_t v = 0;
        /* g_1 . f(g_2..g_n), with trivial action */
        std::copy(g.begin() + 1, g.end(), args.begin());
        v ^= c(args);
        for (unsigned i = 0; i + 1 < n; ++i) {
            std::size_t k = 0;
            for (unsigned j = 0; j < n; ++j) {
                if (j == i) {
                    args[k++] = G.mul(g[j], g[j + 1]);
                    ++j;
                } else {
                    args[k++] = g[j];
                }
            }
            v ^= c(args);
        }
        std::copy(g.begin(), g.end() - 1, args.begin());
        v ^= c(args);
        d.values[idx] = v;
    }
    return d;
}

bool is_cocycle(Cochain const & c)
{
    return coboundary(c).is_zero();
}

bool is_coboundary(Cochain const & c)
{
    if (!is_cocycle(c))
        return false;
    F2Echelon B = coboundary_space(*c.group, c.degree);
    auto v = to_bits(c, B);
    B.reduce(v);
    return F2Echelon::is_zero(v);
}

bool cohomologous(Cochain const & a, Cochain const & b)
{
    return is_coboundary(a + b);
}

CohomologyBasis cohomology_basis(SmallGroup const & G, unsigned degree)
{
    std::size_t const dim_c = ipow(G.order(), degree);

    /* kernel of delta on C^degree, read off from the tags of dependent images */
    F2Echelon image(ipow(G.order(), degree + 1), dim_c);
    std::vector<F2Echelon::Bits> kernel;
    Cochain e = zero_cochain(G, degree);
    for (std::size_t j = 0; j < dim_c; ++j) {
        e.values.assign(dim_c, 0);
        e.values[j] = 1;
        auto v = to_bits(coboundary(e), image);
        auto tag = image.make_tag();
        F2Echelon::flip(tag, j);
        auto vr = v;
        auto tr = tag;
        image.reduce(vr, tr);
        if (F2Echelon::is_zero(vr))
            kernel.push_back(tr);
        else
            image.insert(std::move(v), std::move(tag));
    }

    F2Echelon B = coboundary_space(G, degree);
    F2Echelon span = B;
    CohomologyBasis result;
    result.degree = degree;
    for (auto const & ktag : kernel) {
        auto z = B.make_bits();
        for (std::size_t i = 0; i < dim_c; ++i)
            if (F2Echelon::test(ktag, i))
                F2Echelon::flip(z, i);
        if (!span.insert(z))
            continue;
        B.reduce(z);
        result.representatives.push_back(from_bits(G, degree, z));
    }
    return result;
}

Cochain cup(Cochain const & a, Cochain const & b)
{
    require_same_group(a, b);
    if (!is_cocycle(a) || !is_cocycle(b))
        throw std::invalid_argument("cup: inputs must be cocycles");
    Cochain r = zero_cochain(*a.group, a.degree + b.degree);
    std::size_t const nb = b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < nb; ++j)
            r.values[i * nb + j] = a.values[i] & b.values[j];
    return r;
}

bool H3Class::is_zero() const
{
    for (auto c : coords)
        if (c)
            return false;
    return true;
}

std::string H3Class::name() const
{
    static char const * const z2_names[] = { "a^3" };
    static char const * const v4_names[] = { "a^3", "a^2 b", "a b^2", "b^3" };
    char const * const * names = coords.size() == 1 ? z2_names : v4_names;
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i])
            continue;
        if (!out.empty())
            out += " + ";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

std::vector<Cochain> degree_one_generators(SmallGroup const & G)
{
    if (&G == &SmallGroup::z2())
        return { homomorphism_cochain(G, { 0, 1 }) };
    if (&G == &SmallGroup::klein_four())
        return { homomorphism_cochain(G, { 0, 1, 0, 1 }),
                 homomorphism_cochain(G, { 0, 0, 1, 1 }) };
    throw std::invalid_argument("fixed H^1 generators exist only for Z/2 and Z/2 x Z/2");
}

std::vector<Cochain> h3_cup_basis(SmallGroup const & G)
{
    auto gens = degree_one_generators(G);
    Cochain const & a = gens[0];
    if (gens.size() == 1)
        return { cup(cup(a, a), a) };
    Cochain const & b = gens[1];
    Cochain const aa = cup(a, a);
    Cochain const bb = cup(b, b);
    return { cup(aa, a), cup(aa, b), cup(a, bb), cup(bb, b) };
}

std::vector<std::string> h3_basis_names(SmallGroup const & G)
{
    if (degree_one_generators(G).size() == 1)
        return { "a^3" };
    return { "a^3", "a^2 b", "a b^2", "b^3" };
}

std::vector<std::uint8_t> coordinates_in(Cochain const & c, std::vector<Cochain> const & basis)
{
    if (!is_cocycle(c))
        throw std::invalid_argument("coordinates_in: input is not a cocycle");
    SmallGroup const & G = *c.group;
    F2Echelon E(c.size(), basis.size());
    {
        F2Echelon B = coboundary_space(G, c.degree);
        for (auto const & row : B.rows())
            E.insert(row.bits);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        require_same_group(c, basis[i]);
        auto tag = E.make_tag();
        F2Echelon::flip(tag, i);
        if (!E.insert(to_bits(basis[i], E), std::move(tag)))
            throw std::logic_error("coordinates_in: basis classes are dependent");
    }
    auto v = to_bits(c, E);
    auto tag = E.make_tag();
    E.reduce(v, tag);
    if (!F2Echelon::is_zero(v))
        throw std::domain_error("coordinates_in: class not in the span of the basis");
    std::vector<std::uint8_t> coords(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        coords[i] = F2Echelon::test(tag, i);
    return coords;
}

H3Class classify3(Cochain const & c)
{
    if (c.degree != 3)
        throw std::invalid_argument("classify3: cochain must have degree 3");
    auto coords = coordinates_in(c, h3_cup_basis(*c.group));
    return H3Class{ std::move(coords) };
}

bool is_homomorphism(SmallGroup const & H, SmallGroup const & G, std::vector<int> const & h)
{
    if (static_cast<int>(h.size()) != H.order())
        return false;
    for (int v : h)
        if (v < 0 || v >= G.order())
            return false;
    for (int x = 0; x < H.order(); ++x)
        for (int y = 0; y < H.order(); ++y)
            if (h[H.mul(x, y)] != G.mul(h[x], h[y]))
                return false;
    return true;
}

Cochain pullback(Cochain const & c, SmallGroup const & H, std::vector<int> const & h)
{
    if (!is_homomorphism(H, *c.group, h))
        throw std::invalid_argument("pullback: map is not a homomorphism");
    Cochain r = zero_cochain(H, c.degree);
    std::vector<int> args(c.degree);
    for (std::size_t idx = 0; idx < r.size(); ++idx) {
        auto x = r.tuple_at(idx);
        for (unsigned i = 0; i < c.degree; ++i)
            args[i] = h[x[i]];
        r.values[idx] = c(args);
    }
    return r;
}

} // namespace obstruct::gcoh
