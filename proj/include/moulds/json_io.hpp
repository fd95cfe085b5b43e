#pragma once

#include <json.hpp>

#include "moulds/ratfun.hpp"

namespace moulds {

using nlohmann::json;

json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

// Poly: list of [coeff, exponent-vector] pairs.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, int nv);

// RatFun: {"num": <poly>, "den": [[<int coeffs>, mult], ...]}.
// With strict set, input must already be in canonical form (normalized
// pinned forms, fully cancelled); otherwise it is normalized on the way in.
json ratfun_to_json(const RatFun& f);
RatFun ratfun_from_json(const json& j, int nv, bool strict = false);

}  // namespace moulds
