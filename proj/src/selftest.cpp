#include "obstruct/selftest.hpp"

#include <exception>
#include <functional>
#include <string>

#include "obstruct/arith.hpp"
#include "obstruct/cup_obstruct.hpp"
#include "obstruct/group_cohomology.hpp"
#include "obstruct/matrix_groups.hpp"
#include "obstruct/quad_field.hpp"

namespace obstruct::selftest {

namespace {

SuiteResult guarded(std::string name, std::function<std::string(bool &)> const & body)
{
    SuiteResult r{ std::move(name), false, {} };
    try {
        bool ok = true;
        r.detail = body(ok);
        r.passed = ok;
    } catch (std::exception const & e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

} // namespace

std::vector<SuiteResult> run(Options const & opts)
{
    std::vector<SuiteResult> out;

    out.push_back(guarded("form-enumeration-vs-structure", [&](bool & ok) {
        qf::Composer composer = [](qf::QuadForm const & x, qf::QuadForm const & y) {
            return qf::compose(x, y);
        };
        if (opts.corrupt_composition)
            composer = [](qf::QuadForm const & x, qf::QuadForm const & y) {
                return qf::compose(qf::compose(x, y), y);
            };
        std::size_t fields = 0;
        for (auto D : qf::fundamental_discriminants(1000)) {
            qf::ImagQuadField const K(qf::field_parameter(D));
            auto const forms = qf::reduced_forms(D);
            auto const G = qf::class_group_from_forms(D, forms, composer);
            ++fields;
            if (G.structure_order() != forms.size() || G.two_rank() != K.two_rank()) {
                ok = false;
                return "mismatch at D = " + std::to_string(D);
            }
        }
        return std::to_string(fields) + " discriminants";
    }));

    out.push_back(guarded("h3-dim-klein-four = 4", [](bool & ok) {
        auto const dim = gcoh::cohomology_basis(gcoh::SmallGroup::klein_four(), 3).dim();
        ok = dim == 4;
        return "dim = " + std::to_string(dim);
    }));

    out.push_back(guarded("h3-dim-z2 = 1", [](bool & ok) {
        auto const dim = gcoh::cohomology_basis(gcoh::SmallGroup::z2(), 3).dim();
        ok = dim == 1;
        return "dim = " + std::to_string(dim);
    }));

    out.push_back(guarded("symbol-brute-force", [](bool & ok) {
        std::size_t checked = 0;
        for (auto p : arith::primes_up_to(600)) {
            if (p == 2)
                continue;
            std::vector<bool> square(p, false);
            for (std::uint64_t x = 1; x < p; ++x)
                square[x * x % p] = true;
            for (std::uint64_t a = 0; a < p; ++a) {
                int const expect = a == 0 ? 0 : square[a] ? 1 : -1;
                ++checked;
                if (arith::kronecker(arith::Integer(static_cast<unsigned long>(a)),
                                     arith::Integer(static_cast<unsigned long>(p))) != expect) {
                    ok = false;
                    return "mismatch at (" + std::to_string(a) + "/" + std::to_string(p) + ")";
                }
            }
        }
        return std::to_string(checked) + " symbols";
    }));

    out.push_back(guarded("representative-invariance", [](bool & ok) {
        std::size_t checked = 0;
        for (auto D : qf::fundamental_discriminants(1000)) {
            qf::ImagQuadField const K(qf::field_parameter(D));
            auto const classes = qf::h1_classes(K);
            for (auto const & x : classes) {
                for (auto const & y : classes) {
                    ++checked;
                    if (cup::triple_cup(K, x, y).parity
                        != cup::triple_cup(K, x, y.complement()).parity) {
                        ok = false;
                        return "violation at D = " + std::to_string(D) + ", x = " + x.label()
                             + ", y = " + y.label();
                    }
                }
            }
        }
        return std::to_string(checked) + " pairs";
    }));

    out.push_back(guarded("m-cocycle-q3 = a^3", [](bool & ok) {
        auto const cls = gcoh::classify3(mgroups::m_group_cocycle(3).table);
        ok = cls.name() == "a^3";
        return "class = " + cls.name();
    }));

    return out;
}

bool all_passed(std::vector<SuiteResult> const & results)
{
    for (auto const & r : results)
        if (!r.passed)
            return false;
    return true;
}

} // namespace obstruct::selftest
