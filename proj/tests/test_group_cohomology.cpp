#include <doctest.h>

#include <random>

#include "obstruct/group_cohomology.hpp"

using namespace obstruct::gcoh;

namespace {

Cochain random_cochain(SmallGroup const & G, unsigned n, std::mt19937 & rng)
{
    Cochain c = zero_cochain(G, n);
    for (auto & v : c.values)
        v = rng() & 1;
    return c;
}

// all homomorphisms H -> G by brute force over maps
std::vector<std::vector<int>> all_homs(SmallGroup const & H, SmallGroup const & G)
{
    std::vector<std::vector<int>> out;
    std::size_t total = 1;
    for (int i = 0; i < H.order(); ++i)
        total *= G.order();
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> h(H.order());
        std::size_t r = code;
        for (int i = 0; i < H.order(); ++i, r /= G.order())
            h[i] = static_cast<int>(r % G.order());
        bool ok = true;
        for (int a = 0; a < H.order() && ok; ++a)
            for (int b = 0; b < H.order() && ok; ++b)
                ok = h[H.mul(a, b)] == G.mul(h[a], h[b]);
        if (ok)
            out.push_back(h);
    }
    return out;
}

} // namespace

TEST_CASE("group validation")
{
    CHECK(SmallGroup::z2().order() == 2);
    CHECK(SmallGroup::klein_four().order() == 4);
    CHECK(SmallGroup::klein_four().mul(1, 2) == 3);
    CHECK_THROWS(SmallGroup("bad", { { 0, 1 }, { 0, 1 } }));
    CHECK_THROWS(SmallGroup("nonassoc", { { 0, 1, 2 }, { 1, 0, 0 }, { 2, 2, 0 } }));
}

TEST_CASE("cohomology dimensions match Kunneth")
{
    auto const & Z2 = SmallGroup::z2();
    auto const & V = SmallGroup::klein_four();
    for (unsigned n = 0; n <= 4; ++n) {
        CHECK(cohomology_basis(Z2, n).dim() == 1);
        CHECK(cohomology_basis(V, n).dim() == n + 1);
    }
    auto const Z4 = SmallGroup::cyclic(4);
    auto const Z3 = SmallGroup::cyclic(3);
    for (unsigned n = 0; n <= 3; ++n) {
        CHECK(cohomology_basis(Z4, n).dim() == 1);
        CHECK(cohomology_basis(Z3, n).dim() == (n == 0 ? 1u : 0u));
    }
    auto const Z2Z4 = SmallGroup::direct_product(Z2, Z4);
    CHECK(cohomology_basis(Z2Z4, 2).dim() == 3);
    CHECK(cohomology_basis(SmallGroup::trivial(), 3).dim() == 0);
}

TEST_CASE("delta squared vanishes")
{
    auto const & Z2 = SmallGroup::z2();
    auto const & V = SmallGroup::klein_four();
    // exhaustive in degrees 0..2 for V4, 0..3 for Z/2
    for (unsigned n = 0; n <= 2; ++n) {
        std::size_t const len = zero_cochain(V, n).size();
        for (std::size_t code = 0; code < (std::size_t{ 1 } << len); ++code) {
            Cochain c = zero_cochain(V, n);
            for (std::size_t i = 0; i < len; ++i)
                c.values[i] = code >> i & 1;
            REQUIRE(coboundary(coboundary(c)).is_zero());
        }
    }
    for (unsigned n = 0; n <= 3; ++n) {
        std::size_t const len = zero_cochain(Z2, n).size();
        for (std::size_t code = 0; code < (std::size_t{ 1 } << len); ++code) {
            Cochain c = zero_cochain(Z2, n);
            for (std::size_t i = 0; i < len; ++i)
                c.values[i] = code >> i & 1;
            REQUIRE(coboundary(coboundary(c)).is_zero());
        }
    }
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i)
        REQUIRE(coboundary(coboundary(random_cochain(V, 3, rng))).is_zero());
}

TEST_CASE("degree-one classes and cup products")
{
    auto const & V = SmallGroup::klein_four();
    auto gens = degree_one_generators(V);
    REQUIRE(gens.size() == 2);
    auto const & a = gens[0];
    auto const & b = gens[1];
    // a, b are coordinate projections of (e, f) = e + 2f
    for (int g = 0; g < 4; ++g) {
        CHECK(a({ g }) == (g & 1));
        CHECK(b({ g }) == (g >> 1 & 1));
    }
    CHECK(classify3(cup(cup(a, a), a)).name() == "a^3");
    CHECK(classify3(cup(cup(a, a), b)).name() == "a^2 b");
    CHECK(classify3(cup(cup(a, b), b)).name() == "a b^2");
    CHECK(classify3(cup(cup(b, b), b)).name() == "b^3");
    CHECK(classify3(cup(cup(a, b), a)).name() == "a^2 b");   // graded commutativity mod 2
    auto ab = a + b;
    CHECK(classify3(cup(cup(ab, ab), ab)).name() == "a^3 + a^2 b + a b^2 + b^3");
    CHECK(cup(a, zero_cochain(V, 2)).is_zero());
    Cochain bad = zero_cochain(V, 1);
    bad.set({ 0 }, 1);   // f(e) = 1 is not a cocycle
    CHECK_THROWS(cup(a, bad));
}

TEST_CASE("classify3 is a left inverse on the basis")
{
    for (auto const * G : { &SmallGroup::z2(), &SmallGroup::klein_four() }) {
        auto basis = h3_cup_basis(*G);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto cls = classify3(basis[i]);
            for (std::size_t j = 0; j < basis.size(); ++j)
                CHECK(cls.coords[j] == (i == j ? 1 : 0));
        }
        // adding coboundaries never changes the class
        std::mt19937 rng(17);
        for (int t = 0; t < 50; ++t) {
            auto const c = basis[t % basis.size()] + coboundary(random_cochain(*G, 2, rng));
            CHECK(classify3(c) == classify3(basis[t % basis.size()]));
        }
    }
    CHECK(classify3(zero_cochain(SmallGroup::z2(), 3)).name() == "0");
}

TEST_CASE("cup of 1-cocycles is bilinear")
{
    auto const & V = SmallGroup::klein_four();
    std::vector<Cochain> z1;
    for (auto const & h : all_homs(V, SmallGroup::z2())) {
        std::vector<std::uint8_t> vals(h.begin(), h.end());
        z1.push_back(homomorphism_cochain(V, vals));
    }
    CHECK(z1.size() == 4);
    for (auto const & x : z1)
        for (auto const & y : z1)
            for (auto const & z : z1) {
                CHECK(cup(x + y, z) == cup(x, z) + cup(y, z));
                CHECK(cup(z, x + y) == cup(z, x) + cup(z, y));
            }
}

TEST_CASE("pullback examples and functoriality")
{
    auto const & Z2 = SmallGroup::z2();
    auto const & V = SmallGroup::klein_four();
    auto gens = degree_one_generators(V);
    auto const a2b = cup(cup(gens[0], gens[0]), gens[1]);
    CHECK(is_coboundary(pullback(a2b, Z2, { 0, 1 })));
    CHECK(is_coboundary(pullback(a2b, Z2, { 0, 2 })));
    CHECK(classify3(pullback(a2b, Z2, { 0, 3 })).name() == "a^3");
    CHECK(pullback(a2b, V, { 0, 1, 2, 3 }) == a2b);
    CHECK_THROWS(pullback(a2b, Z2, { 1, 0 }));

    std::mt19937 rng(3);
    auto const into = all_homs(Z2, V);
    auto const outof = all_homs(V, Z2);
    CHECK(into.size() == 4);
    for (int t = 0; t < 20; ++t) {
        Cochain c = random_cochain(Z2, 3, rng);
        for (auto const & f : into)
            for (auto const & g : outof) {
                std::vector<int> gf(2);
                for (int i = 0; i < 2; ++i)
                    gf[i] = g[f[i]];
                REQUIRE(pullback(c, Z2, gf) == pullback(pullback(c, V, g), Z2, f));
            }
    }
}

TEST_CASE("coboundary tests and cohomologous")
{
    auto const & Z2 = SmallGroup::z2();
    auto basis = h3_cup_basis(Z2);
    CHECK_FALSE(is_coboundary(basis[0]));
    CHECK(is_cocycle(basis[0]));
    Cochain c = zero_cochain(Z2, 3);
    c.set({ 1, 1, 1 }, 1);
    CHECK(cohomologous(c, basis[0]));
    CHECK(h3_basis_names(SmallGroup::klein_four()).size() == 4);
}
