#include "almansi/json_io.hpp"

#include <stdexcept>

namespace almansi {

using nlohmann::json;

json quaternion_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("quaternion: expected [w,x,y,z]");
    Quaternion q;
    q.w = j[0].get<double>();
    q.x = j[1].get<double>();
    q.y = j[2].get<double>();
    q.z = j[3].get<double>();
    if (!q.is_finite()) throw std::invalid_argument("quaternion: components must be finite");
    return q;
}

json qpoint_to_json(const QPoint& x) {
    json arr = json::array();
    for (const auto& q : x.coords) arr.push_back(quaternion_to_json(q));
    return arr;
}

QPoint qpoint_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("point: expected array of quaternions");
    QPoint x;
    for (const auto& e : j) x.coords.push_back(quaternion_from_json(e));
    return x;
}

json qpoly_to_json(const QPolynomial& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        terms.push_back({{"alpha", t.alpha}, {"coeff", quaternion_to_json(t.coeff)}});
    }
    return {{"n", p.nvars()}, {"terms", terms}};
}

QPolynomial qpoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw std::invalid_argument("polynomial: expected {\"n\":..., \"terms\":[...]}");
    QPolynomial p(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        auto alpha = t.at("alpha").get<std::vector<int>>();
        p.add_term(std::move(alpha), quaternion_from_json(t.at("coeff")));
    }
    return p;
}

json decomposition_to_json(const AlmansiDecomposition& dec) {
    json comps = json::object();
    const auto& poly = dec.source.source_poly();
    for (const auto& [k, comp] : dec.components) {
        std::string repr = "numeric";
        if (poly) {
            repr = poly_component_closed_form(*poly, dec.H, IndexSet(k, dec.H.n)).to_string();
        }
        comps[std::to_string(k)] = repr;
    }
    json h_members = json::array();
    for (int h : dec.H.members()) h_members.push_back(h);
    return {{"H", h_members}, {"components", comps}};
}

}  // namespace almansi
