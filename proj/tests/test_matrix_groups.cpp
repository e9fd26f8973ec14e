#include <doctest.h>

#include <random>
#include <set>

#include "obstruct/finite_field.hpp"
#include "obstruct/group_cohomology.hpp"
#include "obstruct/matrix_groups.hpp"

using namespace obstruct;
using namespace obstruct::mgroups;

namespace {

// |SL(2, F)| by brute force over all matrices
std::size_t count_sl(ff::FiniteField const & F)
{
    std::size_t n = 0;
    std::uint32_t const s = F.size();
    for (std::uint32_t a = 0; a < s; ++a)
        for (std::uint32_t b = 0; b < s; ++b)
            for (std::uint32_t c = 0; c < s; ++c)
                for (std::uint32_t d = 0; d < s; ++d) {
                    auto det = F.element(a) * F.element(d) - F.element(b) * F.element(c);
                    n += det.is_one();
                }
    return n;
}

AutElem random_aut(std::vector<ProjMat2> const & pgl, std::mt19937 & rng)
{
    return AutElem{ pgl[rng() % pgl.size()], static_cast<int>(rng() & 1) };
}

} // namespace

TEST_CASE("AutPSL parameters")
{
    AutPSL G(3);
    CHECK(G.field().size() == 9);
    CHECK(G.theta().index() == 4);
    CHECK(G.psl_order() == 360);
    CHECK(G.pgl_order() == 720);
    CHECK(AutPSL(5).psl_order() == 7800);
    CHECK_THROWS(AutPSL(2));
    CHECK_THROWS(AutPSL(6));
    CHECK_THROWS(AutPSL(1031));
}

TEST_CASE("det_class examples")
{
    AutPSL G(3);
    auto const & th = G.theta();
    auto const one = G.field().one();
    CHECK(det_class(G.proj_identity()) == 0);
    CHECK(det_class(G.tau()) == 1);
    CHECK(det_class(ProjMat2(Mat2::diag(one, th))) == 1);
    CHECK(det_class(ProjMat2(Mat2::diag(th, th))) == 0);
    CHECK(ProjMat2(Mat2::diag(th, th)).is_identity());
}

TEST_CASE("to_quotient examples")
{
    AutPSL G(3);
    CHECK(to_quotient(G.identity()) == std::pair{ 0, 0 });
    CHECK(to_quotient(AutElem{ G.tau(), 0 }) == std::pair{ 1, 0 });
    CHECK(to_quotient(G.alpha()) == std::pair{ 0, 1 });
}

TEST_CASE("group orders by enumeration against brute-force SL count")
{
    AutPSL G(3);
    std::size_t const sl = count_sl(G.field());
    CHECK(sl == 720);
    auto psl = enumerate_psl(G, 10000);
    auto pgl = enumerate_pgl(G, 10000);
    CHECK(psl.size() == sl / 2);
    CHECK(pgl.size() == 720);
    for (auto const & P : psl)
        CHECK(det_class(P) == 0);
    std::set<std::array<std::uint32_t, 4>> keys;
    for (auto const & P : pgl)
        keys.insert(P.key());
    CHECK(keys.size() == pgl.size());
    CHECK_THROWS_AS(enumerate_pgl(G, 100), std::length_error);
}

TEST_CASE("to_quotient is a homomorphism")
{
    for (std::uint64_t q : { 3u, 5u }) {
        AutPSL G(q);
        auto pgl = enumerate_pgl(G, 20000);
        std::mt19937 rng(static_cast<unsigned>(q));
        for (int i = 0; i < 10000; ++i) {
            auto x = random_aut(pgl, rng), y = random_aut(pgl, rng);
            auto [a1, b1] = to_quotient(x);
            auto [a2, b2] = to_quotient(y);
            REQUIRE(to_quotient(G.mul(x, y)) == std::pair{ (a1 + a2) & 1, (b1 + b2) & 1 });
        }
    }
}

TEST_CASE("Aut group law and action")
{
    AutPSL G(3);
    auto pgl = enumerate_pgl(G, 10000);
    std::mt19937 rng(11);
    auto const psl = enumerate_psl(G, 10000);
    for (int i = 0; i < 500; ++i) {
        auto x = random_aut(pgl, rng), y = random_aut(pgl, rng), z = random_aut(pgl, rng);
        REQUIRE(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
        REQUIRE(G.mul(x, G.inverse(x)) == G.identity());
        // action is compatible with the group law on SL
        Mat2 X = G.lift_to_sl(psl[rng() % psl.size()]);
        REQUIRE(X.det().is_one());
        REQUIRE(G.act(G.mul(x, y), X) == G.act(x, G.act(y, X)));
        REQUIRE(G.act(x, X).det().is_one());
    }
    // alpha is the entrywise Frobenius
    Mat2 X = G.lift_to_sl(ProjMat2(Mat2{ G.theta(), G.field().one(), G.field().zero(), G.theta().inverse() }));
    CHECK(G.act(G.alpha(), X) == X.entry_power(3));
}

TEST_CASE("perfectness of PSL(2, q^2)")
{
    auto r = perfectness_report(3);
    CHECK(r.group_order == 360);
    CHECK(r.derived_order == 360);
    CHECK(r.perfect);
    auto r5 = perfectness_report(5);
    CHECK(r5.group_order == 7800);
    CHECK(r5.perfect);
    CHECK_THROWS_AS(perfectness_report(7), std::length_error);
    // trivial group: vacuously perfect
    AutPSL G(3);
    CHECK(is_perfect({}, G.proj_identity(), 10));
    // PGL is not perfect: derived subgroup is PSL
    CHECK(derived_subgroup_order(G.pgl_generators(), G.proj_identity(), 10000) == 360);
}

TEST_CASE("M(9) cocycle")
{
    auto cm = m_group_cocycle(3);
    CHECK(cm.cocycle_identity_holds);
    CHECK(gcoh::is_cocycle(cm.table));
    for (std::size_t i = 0; i < cm.table.size(); ++i) {
        auto t = cm.table.tuple_at(i);
        CHECK(cm.table.values[i] == (t == std::vector<int>{ 1, 1, 1 } ? 1 : 0));
    }
    CHECK(gcoh::classify3(cm.table).name() == "a^3");
    // F(1, 1) is the class of diag(theta^-2, theta^2)
    AutPSL G(3);
    auto const th = G.theta();
    CHECK(cm.failure[3] == ProjMat2(Mat2::diag(th.pow_signed(-2), th.pow(2))));
    CHECK(det_class(cm.failure[3]) == 0);
}

TEST_CASE("M cocycle is a^3 for q = 5, 7, 9")
{
    for (std::uint64_t q : { 5u, 7u, 9u }) {
        auto cm = m_group_cocycle(q);
        CHECK(cm.cocycle_identity_holds);
        CHECK(gcoh::classify3(cm.table).name() == "a^3");
    }
}

TEST_CASE("Aut cocycle shape and pullbacks")
{
    for (std::uint64_t q : { 3u, 5u, 7u }) {
        auto cm = aut_group_cocycle(q);
        CHECK(cm.cocycle_identity_holds);
        auto name = gcoh::classify3(cm.table).name();
        CHECK((name == "a^2 b" || name == "a b^2"));
        auto const & Z2 = gcoh::SmallGroup::z2();
        CHECK(gcoh::is_coboundary(gcoh::pullback(cm.table, Z2, first_factor_inclusion())));
        CHECK(gcoh::is_coboundary(gcoh::pullback(cm.table, Z2, second_factor_inclusion())));
        CHECK(gcoh::cohomologous(gcoh::pullback(cm.table, Z2, diagonal_inclusion()),
                                 m_group_cocycle(q).table));
    }
}

TEST_CASE("class does not depend on the lift")
{
    AutPSL G(3);
    auto const & Z2 = gcoh::SmallGroup::z2();
    auto const & V = gcoh::SmallGroup::klein_four();
    auto base = crossed_module_cocycle(G, Z2, m_group_section(G));
    auto neg = crossed_module_cocycle(G, Z2, m_group_section(G), { false, false, false, true });
    CHECK(gcoh::cohomologous(base.table, neg.table));
    auto abase = crossed_module_cocycle(G, V, aut_group_section(G));
    for (std::size_t i = 0; i < 16; ++i) {
        std::vector<bool> flip(16, false);
        flip[i] = true;
        auto alt = crossed_module_cocycle(G, V, aut_group_section(G), flip);
        CHECK(gcoh::cohomologous(abase.table, alt.table));
    }
}

TEST_CASE("class does not depend on the section")
{
    AutPSL G(3);
    auto const & V = gcoh::SmallGroup::klein_four();
    auto psl = enumerate_psl(G, 10000);
    auto const base = aut_group_cocycle(3).table;
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        auto s = aut_group_section(G);
        for (std::size_t g = 1; g < s.size(); ++g)
            s[g] = G.mul(AutElem{ psl[rng() % psl.size()], 0 }, s[g]);
        auto alt = crossed_module_cocycle(G, V, s);
        CHECK(alt.cocycle_identity_holds);
        CHECK(gcoh::cohomologous(base, alt.table));
    }
}
