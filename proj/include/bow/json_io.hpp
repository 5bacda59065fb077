#pragma once

#include <json.hpp>

#include "bow/brane.hpp"
#include "bow/kclass.hpp"
#include "bow/maya.hpp"
#include "bow/series.hpp"

namespace bow {

using Json = nlohmann::json;

// {"d": int, "e": [int], "f": [int]}
Json to_json(const BraneTriple& t);
BraneTriple triple_from_json(const Json& j);

// {"n": int, "m": int, "two_k_lo": int, "blocks": [[[0/1 row] ...] ...]}
Json to_json(const MayaDiagram& M);
MayaDiagram maya_from_json(const Json& j);

// canonical list of {"a": int, "b": int, "w": [int], "coeff": int}
Json to_json(const KClass& X);
KClass kclass_from_json(const Json& j);

// {"q_order": N, "coeffs": [int]}
Json to_json(const QSeries& s);

// {"q_order": N, "coeffs": [[[t_exp, coeff] ...] ...]}
Json to_json(const QTSeries& s);

}  // namespace bow
