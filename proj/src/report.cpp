#include "obstruct/report.hpp"

#include <sstream>

namespace obstruct::report {

json integer(arith::Integer const & n)
{
    if (mpz_fits_slong_p(n.get_mpz_t()))
        return json(static_cast<std::int64_t>(n.get_si()));
    return json(n.get_str());
}

json field(qf::ImagQuadField const & K)
{
    return json{ { "m", integer(K.m()) }, { "D", integer(K.D()) } };
}

json class_group(qf::ClassGroup const & G)
{
    return json{ { "order", G.order }, { "invariants", G.invariants } };
}

json h1(qf::ImagQuadField const & K)
{
    json labels = json::array();
    for (auto const & x : qf::h1_classes(K))
        labels.push_back(x.label());
    return json{ { "dim", K.two_rank() }, { "labels", labels } };
}

json cohomology(cup::CohomologySummary const & s)
{
    return json{ { "dims", s.dims }, { "h2_derived", s.h2_is_derived } };
}

json cup_evidence(cup::CupEvidence const & ev)
{
    json per_prime = json::array();
    for (auto const & pp : ev.per_prime)
        per_prime.push_back(json{ { "prime", integer(pp.prime) },
                                  { "exponent", pp.exponent },
                                  { "inert", pp.inert } });
    return json{ { "x", ev.x.label() },
                 { "y", ev.y.label() },
                 { "y_generator", integer(ev.y.generator()) },
                 { "per_prime", per_prime },
                 { "parity", ev.parity } };
}

json property(cup::PropertyResult const & r)
{
    json j{ { "status", cup::to_string(r.condition) }, { "checked", r.checked } };
    if (r.witness_a) {
        json w{ { "a", r.witness_a->label() } };
        if (r.witness_b)
            w["b"] = r.witness_b->label();
        j["witness"] = w;
    }
    return j;
}

json certificate(cup::GroupCertificate const & c)
{
    return json{ { "family", cup::to_string(c.family) },
                 { "q", c.q },
                 { "source", c.computed ? "computed" : "cited" },
                 { "class", c.class_name },
                 { "coords", c.coords },
                 { "cocycle_identity", c.computed ? json(c.cocycle_identity_holds) : json(nullptr) },
                 { "required_shape", c.required_shape } };
}

json verdict(cup::ObstructionReport const & r)
{
    std::string const quotient = r.family == cup::GroupFamily::M ? "Z/2" : "Z/2+Z/2";
    return json{ { "outcome", cup::to_string(r.outcome) },
                 { "group_certificate", certificate(r.certificate) },
                 { "field_condition", property(r.field_condition) },
                 { "solvable_quotient", quotient },
                 { "solvable_quotient_realizable", r.solvable_quotient_realizable },
                 { "flags", r.flags } };
}

json cocycle_table(gcoh::Cochain const & c)
{
    json nonzero = json::array();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.values[i])
            nonzero.push_back(c.tuple_at(i));
    std::string bits;
    for (auto v : c.values)
        bits.push_back(v ? '1' : '0');
    return json{ { "group", c.group->name() },
                 { "degree", c.degree },
                 { "values", bits },
                 { "nonzero", nonzero } };
}

std::vector<std::string> standard_notes()
{
    return { cup::inert_wording_note };
}

json envelope(std::string const & command, json inputs, json result,
              std::vector<std::string> notes)
{
    auto all = standard_notes();
    all.insert(all.end(), notes.begin(), notes.end());
    return json{ { "schema_version", schema_version },
                 { "command", command },
                 { "inputs", std::move(inputs) },
                 { "result", std::move(result) },
                 { "notes", all } };
}

} // namespace obstruct::report
