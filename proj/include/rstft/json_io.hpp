#ifndef RSTFT_JSON_IO_HPP
#define RSTFT_JSON_IO_HPP

#include "rstft/abelian.hpp"
#include "rstft/picard.hpp"
#include "rstft/rspin.hpp"
#include "rstft/skk.hpp"

#include <json.hpp>

namespace rstft {

using json = nlohmann::json;

/// Matrices serialise as arrays of arrays of decimal strings, so entries of
/// any size survive a round trip.
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

/// {"rank": n, "torsion": [d1, d2, ...]}; factors emit as numbers when they
/// fit, strings otherwise, and parse from either.
json group_to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const json& j);

/// {"type":"sphere"} | {"type":"torus","s":..,"t":..}
/// | {"type":"higher_genus","l":..,"arf":"+"|"-"}
/// | {"type":"low_genus","g":..,"arf":"+"|"-"}; "arf" present only when the
/// descriptor carries it.
json surface_to_json(const ClosedRSpinSurface& s);
ClosedRSpinSurface surface_from_json(const json& j);

/// [{"coeff": c, "surface": {...}}, ...]
json surface_sum_to_json(const FormalSurfaceSum& x);
FormalSurfaceSum surface_sum_from_json(const json& j);

/// {"r": r, "j": j, "eps": eps} with absent coordinates omitted.
json skk_class_to_json(const SkkClass& c);

/// {"factors": ["Z", "Z/2", "C*"], "string": "Z x Z/2 x C*"}
json expr_to_json(const FormalGroupExpr& e);

/// Custom classification target:
/// {"pi0": <group>, "pi1": "circle" | <group> | {"circle": true, "finite":
/// <group>}, "k": [<value>, ...]} with one k value per generator of
/// pi0 (x) Z/2: a coordinate array for finitely generated pi1, a sign (+-1)
/// for a pure circle, {"sign": s, "coords": [...]} for a mixed group.
PicardData picard_from_json(const json& j);
json picard_to_json(const PicardData& d);

}  // namespace rstft

#endif
