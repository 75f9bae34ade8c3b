#pragma once

// JSON wire formats: quaternions as [w,x,y,z], points as arrays of
// quaternions, polynomials as {"n": int, "terms": [{"alpha": [...],
// "coeff": [w,x,y,z]}]}, decompositions with closed-form component strings
// when the source is a polynomial.

#include <json.hpp>

#include "almansi/almansi.hpp"
#include "almansi/poly.hpp"
#include "almansi/quaternion.hpp"
#include "almansi/slice.hpp"

namespace almansi {

nlohmann::json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

nlohmann::json qpoint_to_json(const QPoint& x);
QPoint qpoint_from_json(const nlohmann::json& j);

nlohmann::json qpoly_to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const nlohmann::json& j);

// {"H": [members], "components": {"<K-mask>": "<closed form>" | "numeric"}}
nlohmann::json decomposition_to_json(const AlmansiDecomposition& dec);

}  // namespace almansi
