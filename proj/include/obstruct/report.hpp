#ifndef OBSTRUCT_REPORT_HPP
#define OBSTRUCT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "obstruct/cup_obstruct.hpp"
#include "obstruct/matrix_groups.hpp"
#include "obstruct/quad_field.hpp"

/* JSON rendering of reports, schema version "1". Objects use sorted keys,
 * so output is byte-stable for fixed inputs. */
namespace obstruct::report {

using json = nlohmann::json;

inline constexpr char const * schema_version = "1";

/* Number when it fits in 64 bits, decimal string otherwise. */
json integer(arith::Integer const & n);

json field(qf::ImagQuadField const & K);
json class_group(qf::ClassGroup const & G);
json h1(qf::ImagQuadField const & K);
json cohomology(cup::CohomologySummary const & s);
json cup_evidence(cup::CupEvidence const & ev);
json property(cup::PropertyResult const & r);
json certificate(cup::GroupCertificate const & c);
json verdict(cup::ObstructionReport const & r);
json cocycle_table(gcoh::Cochain const & c);

json envelope(std::string const & command, json inputs, json result,
              std::vector<std::string> notes = {});

/* Notes every envelope carries. */
std::vector<std::string> standard_notes();

} // namespace obstruct::report

#endif
