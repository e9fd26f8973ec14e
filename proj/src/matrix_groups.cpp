#include "obstruct/matrix_groups.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "obstruct/arith.hpp"

namespace obstruct::mgroups {

Mat2 Mat2::identity(ff::FiniteField const & F)
{
    return { F.one(), F.zero(), F.zero(), F.one() };
}

Mat2 Mat2::diag(FFElem const & x, FFElem const & y)
{
    auto const & F = x.field();
    return { x, F.zero(), F.zero(), y };
}

Mat2 Mat2::operator*(Mat2 const & o) const
{
    return { a * o.a + b * o.c, a * o.b + b * o.d,
             c * o.a + d * o.c, c * o.b + d * o.d };
}

Mat2 Mat2::operator-() const
{
    return { -a, -b, -c, -d };
}

Mat2 Mat2::scaled(FFElem const & s) const
{
    return { a * s, b * s, c * s, d * s };
}

FFElem Mat2::det() const
{
    return a * d - b * c;
}

Mat2 Mat2::inverse() const
{
    FFElem const dinv = det().inverse();
    return Mat2{ d, -b, -c, a }.scaled(dinv);
}

Mat2 Mat2::entry_power(std::uint64_t e) const
{
    return { a.pow(e), b.pow(e), c.pow(e), d.pow(e) };
}

std::ostream & operator<<(std::ostream & os, Mat2 const & m)
{
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

ProjMat2::ProjMat2(Mat2 const & m)
    : rep_(m)
{
    if (m.det().is_zero())
        throw std::domain_error("ProjMat2: singular matrix");
    FFElem const * lead = nullptr;
    for (FFElem const * e : { &m.a, &m.b, &m.c, &m.d }) {
        if (!e->is_zero()) {
            lead = e;
            break;
        }
    }
    if (!lead->is_one())
        rep_ = m.scaled(lead->inverse());
}

bool ProjMat2::is_identity() const
{
    return rep_.a.is_one() && rep_.b.is_zero() && rep_.c.is_zero() && rep_.d.is_one();
}

std::array<std::uint32_t, 4> ProjMat2::key() const
{
    return { rep_.a.index(), rep_.b.index(), rep_.c.index(), rep_.d.index() };
}

std::size_t ProjMat2Hash::operator()(ProjMat2 const & m) const
{
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.key())
        h = (h ^ v) * 1099511628211ull;
    return h;
}

int det_class(ProjMat2 const & P)
{
    return P.representative().det().is_square() ? 0 : 1;
}

AutPSL::AutPSL(std::uint64_t q)
    : q_(q)
{
    auto const [p, m] = arith::prime_power(arith::Integer(static_cast<unsigned long>(q)));
    if (m == 0 || p == 2)
        throw std::invalid_argument("q must be an odd prime power, got " + std::to_string(q));
    if (2 * m > 4 || q * q > (1u << 20))
        throw std::invalid_argument("q^2 exceeds the supported field size, q = "
                                    + std::to_string(q));
    field_ = ff::make_field(p.get_ui(), 2 * m);
    theta_ = ff::primitive_element(*field_);
}

std::uint64_t AutPSL::pgl_order() const
{
    std::uint64_t const q2 = q_ * q_;
    return q2 * (q2 * q2 - 1);
}

std::uint64_t AutPSL::psl_order() const
{
    return pgl_order() / 2;
}

ProjMat2 AutPSL::tau() const
{
    return ProjMat2(Mat2::diag(field_->one(), theta_));
}

ProjMat2 AutPSL::proj_identity() const
{
    return ProjMat2(Mat2::identity(*field_));
}

AutElem AutPSL::identity() const
{
    return { proj_identity(), 0 };
}

AutElem AutPSL::alpha() const
{
    return { proj_identity(), 1 };
}

AutElem AutPSL::mul(AutElem const & x, AutElem const & y) const
{
    ProjMat2 const rhs = x.frob ? frobenius(y.proj) : y.proj;
    return { x.proj * rhs, (x.frob + y.frob) % 2 };
}

AutElem AutPSL::inverse(AutElem const & x) const
{
    ProjMat2 const inv = x.proj.inverse();
    return { x.frob ? frobenius(inv) : inv, x.frob };
}

Mat2 AutPSL::act(AutElem const & g, Mat2 const & X) const
{
    Mat2 const & P = g.proj.representative();
    Mat2 const Y = g.frob ? frobenius(X) : X;
    return P * Y * P.inverse();
}

Mat2 AutPSL::lift_to_sl(ProjMat2 const & P) const
{
    if (det_class(P) != 0)
        throw std::domain_error("lift_to_sl: class is not in PSL");
    Mat2 const & m = P.representative();
    auto const root = m.det().inverse().sqrt();
    return m.scaled(*root);
}

std::vector<ProjMat2> AutPSL::psl_generators() const
{
    std::vector<ProjMat2> gens;
    FFElem const one = field_->one();
    FFElem const zero = field_->zero();
    std::uint32_t basis = 1;
    for (unsigned i = 0; i < field_->degree(); ++i, basis *= field_->characteristic()) {
        FFElem const x = field_->element(basis);
        gens.emplace_back(Mat2{ one, x, zero, one });
        gens.emplace_back(Mat2{ one, zero, x, one });
    }
    return gens;
}

std::vector<ProjMat2> AutPSL::pgl_generators() const
{
    auto gens = psl_generators();
    gens.push_back(tau());
    return gens;
}

std::pair<int, int> to_quotient(AutElem const & g)
{
    return { det_class(g.proj), g.frob };
}

int quotient_index(AutElem const & g)
{
    auto const [e, f] = to_quotient(g);
    return e + 2 * f;
}

std::vector<ProjMat2> enumerate_closure(std::vector<ProjMat2> const & generators,
                                        ProjMat2 const & identity, std::size_t cap)
{
    std::unordered_set<ProjMat2, ProjMat2Hash> seen{ identity };
    std::vector<ProjMat2> elems{ identity };
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (auto const & g : generators) {
            ProjMat2 next = elems[i] * g;
            if (seen.insert(next).second) {
                if (elems.size() >= cap)
                    throw std::length_error("group closure exceeds the cap of "
                                            + std::to_string(cap));
                elems.push_back(std::move(next));
            }
        }
    }
    return elems;
}

std::vector<ProjMat2> enumerate_psl(AutPSL const & G, std::size_t cap)
{
    return enumerate_closure(G.psl_generators(), G.proj_identity(), cap);
}

std::vector<ProjMat2> enumerate_pgl(AutPSL const & G, std::size_t cap)
{
    return enumerate_closure(G.pgl_generators(), G.proj_identity(), cap);
}

std::size_t derived_subgroup_order(std::vector<ProjMat2> const & generators,
                                   ProjMat2 const & identity, std::size_t cap)
{
    std::vector<ProjMat2> normal_gens;
    for (auto const & x : generators)
        for (auto const & y : generators)
            normal_gens.push_back(x * y * x.inverse() * y.inverse());

    for (;;) {
        auto elems = enumerate_closure(normal_gens, identity, cap);
        std::unordered_set<ProjMat2, ProjMat2Hash> members(elems.begin(), elems.end());
        bool grew = false;
        std::size_t const n = normal_gens.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (auto const & g : generators) {
                ProjMat2 conj = g * normal_gens[i] * g.inverse();
                if (members.insert(conj).second) {
                    normal_gens.push_back(std::move(conj));
                    grew = true;
                }
            }
        }
        if (!grew)
            return elems.size();
    }
}

bool is_perfect(std::vector<ProjMat2> const & generators, ProjMat2 const & identity,
                std::size_t cap)
{
    std::size_t const order = enumerate_closure(generators, identity, cap).size();
    return derived_subgroup_order(generators, identity, cap) == order;
}

PerfectnessReport perfectness_report(std::uint64_t q, std::size_t cap)
{
    AutPSL const G(q);
    if (G.psl_order() > cap)
        throw std::length_error("|PSL(2," + std::to_string(q) + "^2)| = "
                                + std::to_string(G.psl_order()) + " exceeds the cap "
                                + std::to_string(cap));
    auto const gens = G.psl_generators();
    PerfectnessReport r;
    r.q = q;
    r.group_order = enumerate_closure(gens, G.proj_identity(), cap).size();
    r.derived_order = derived_subgroup_order(gens, G.proj_identity(), cap);
    r.perfect = r.derived_order == r.group_order;
    return r;
}

bool perfectness_check(std::uint64_t q, std::size_t cap)
{
    return perfectness_report(q, cap).perfect;
}

CrossedModuleCocycle crossed_module_cocycle(AutPSL const & G, gcoh::SmallGroup const & Q,
                                            std::vector<AutElem> const & section,
                                            std::vector<bool> const & negate_lifts)
{
    int const n = Q.order();
    if (static_cast<int>(section.size()) != n)
        throw std::invalid_argument("section has the wrong size");
    if (!(section[Q.identity()] == G.identity()))
        throw std::logic_error("section must send the identity to the identity");

    CrossedModuleCocycle out;
    out.q = G.q();
    out.field = G.field_ptr();
    out.section = section;
    out.failure.reserve(n * n);
    out.lifts.reserve(n * n);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            AutElem const f = G.mul(G.mul(section[g], section[h]),
                                    G.inverse(section[Q.mul(g, h)]));
            if (f.frob != 0 || det_class(f.proj) != 0)
                throw std::logic_error("section is not compatible with the quotient map");
            Mat2 lift = f.proj.is_identity() ? Mat2::identity(G.field())
                                             : G.lift_to_sl(f.proj);
            std::size_t const idx = static_cast<std::size_t>(g * n + h);
            if (idx < negate_lifts.size() && negate_lifts[idx])
                lift = -lift;
            out.failure.push_back(f.proj);
            out.lifts.push_back(lift);
        }
    }

    auto lift = [&](int g, int h) -> Mat2 const & { return out.lifts[g * n + h]; };
    out.table = gcoh::zero_cochain(Q, 3);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            for (int k = 0; k < n; ++k) {
                Mat2 const lhs = G.act(section[g], lift(h, k)) * lift(g, Q.mul(h, k));
                Mat2 const rhs = lift(g, h) * lift(Q.mul(g, h), k);
                if (lhs == rhs)
                    out.table.set({ g, h, k }, 0);
                else if (lhs == -rhs)
                    out.table.set({ g, h, k }, 1);
                else
                    throw std::logic_error("lifted failure function differs by a non-central element");
            }
        }
    }
    out.cocycle_identity_holds = gcoh::is_cocycle(out.table);
    if (!out.cocycle_identity_holds)
        throw std::logic_error("computed table violates the 3-cocycle identity");
    return out;
}

std::vector<AutElem> m_group_section(AutPSL const & G)
{
    AutElem const tau{ G.tau(), 0 };
    return { G.identity(), G.mul(G.alpha(), tau) };
}

std::vector<AutElem> aut_group_section(AutPSL const & G)
{
    std::vector<AutElem> s;
    for (int idx = 0; idx < 4; ++idx) {
        int const e = idx & 1, f = idx >> 1;
        s.push_back({ e ? G.tau() : G.proj_identity(), f });
    }
    return s;
}

CrossedModuleCocycle m_group_cocycle(std::uint64_t q)
{
    AutPSL const G(q);
    return crossed_module_cocycle(G, gcoh::SmallGroup::z2(), m_group_section(G));
}

CrossedModuleCocycle aut_group_cocycle(std::uint64_t q)
{
    AutPSL const G(q);
    return crossed_module_cocycle(G, gcoh::SmallGroup::klein_four(), aut_group_section(G));
}

std::vector<int> first_factor_inclusion() { return { 0, 1 }; }
std::vector<int> second_factor_inclusion() { return { 0, 2 }; }
std::vector<int> diagonal_inclusion() { return { 0, 3 }; }

} // namespace obstruct::mgroups
