#pragma once

#include <string>

#include "json.hpp"

#include "ccd/constacyclic.hpp"
#include "ccd/designs.hpp"
#include "ccd/equations.hpp"
#include "ccd/error.hpp"
#include "ccd/gf.hpp"
#include "ccd/polyring.hpp"
#include "ccd/quantum_lrc.hpp"
#include "ccd/subfield.hpp"
#include "ccd/wdist.hpp"

namespace ccd {

using ordered_json = nlohmann::ordered_json;

// Big integers and rationals are rendered as decimal strings so reports stay
// exact; field elements as packed base-p integers.

std::string bigint_str(const BigInt& v);

ordered_json tower_json(const FieldTower& tw);
ordered_json poly_json(const Poly& f);
ordered_json code_json(const ConstacyclicCode& c);

ordered_json wdist_json(const WeightDistribution& wd);
std::string wdist_csv(const WeightDistribution& wd);

ordered_json design_json(const Design& d, size_t block_limit = 4096);
std::string design_csv(const Design& d);
ordered_json design_check_json(const DesignCheck& chk);
ordered_json assmus_mattson_json(const AssmusMattsonReport& rep);

ordered_json rootcount_json(const RootCountReport& rep, uint64_t p, uint64_t m);
ordered_json conjecture_json(const ConjectureReport& rep);

ordered_json subfield_json(const SubfieldCode& sub);
ordered_json ovoid_json(const OvoidReport& rep);
ordered_json triviality_json(const TrivialityReport& rep);

ordered_json intersection_json(const IntersectionDim& id);
ordered_json eaqecc_json(const EaqeccParams& ea);
ordered_json lrc_json(const LrcReport& rep);

ordered_json error_json(const Error& err);

// {schema: 1, tower: {...}} prefix every CLI report starts from.
ordered_json report_envelope(const FieldTower& tw);

}  // namespace ccd
