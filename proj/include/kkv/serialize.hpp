#pragma once

// JSON and CSV encodings. Rationals and integers are always strings ("n" or
// "n/d") so that no consumer ever round-trips them through floating point.

#include "kkv/bps_transform.hpp"
#include "kkv/kkv_engine.hpp"
#include "kkv/nl_correspondence.hpp"
#include "kkv/pairs_mnop.hpp"
#include "kkv/rational_function.hpp"

#include <json.hpp>

#include <string>

namespace kkv {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const RationalSeries& s);
RationalSeries series_from_json(const Json& j);

Json to_json(const RationalFunction& r);
RationalFunction ratfn_from_json(const Json& j);

Json to_json(const SymLaurentPoly& p);

Json to_json(const KkvBpsGrid& grid);
KkvBpsGrid grid_from_json(const Json& j);

Json to_json(const BpsTable& table);
BpsTable bps_table_from_json(const Json& j);

Json to_json(const GwPotential& pot);
GwPotential gw_potential_from_json(const Json& j);

Json to_json(const ClassLabel& label);
ClassLabel class_label_from_json(const Json& j);

Json to_json(const NlMatrix& nl);
NlMatrix nl_matrix_from_json(const Json& j);

Json to_json(const MnopReport& report);
Json to_json(const TransferReport& report);

// BPS grid as CSV: one row per genus, one column per h.
std::string grid_to_csv(const KkvBpsGrid& grid);

} // namespace kkv
