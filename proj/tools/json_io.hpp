#pragma once

#include <json.hpp>

#include "gordian/laurent.hpp"
#include "gordian/moves.hpp"
#include "gordian/verify.hpp"

namespace gordian::io {

using json = nlohmann::ordered_json;

// {"variable": "A", "terms": [{"exp": -4, "coef": 1}, ...]}, terms ascending.
// Coefficients outside int64 are written as decimal strings.
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json degree_to_json(const MaxPlusDeg& d);  // integer or "BOTTOM"

json verify_to_json(const VerifyResult& r);
json move_report_to_json(const MoveReport& r);

}  // namespace gordian::io
