#include "almansi/slice.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace almansi {

ComplexPoint QPoint::complex_point() const {
    ComplexPoint z;
    z.coords.reserve(coords.size());
    for (const auto& q : coords) {
        const SplitForm s = split(q);
        z.coords.emplace_back(s.alpha, s.beta);
    }
    return z;
}

std::vector<Quaternion> QPoint::j_units() const {
    std::vector<Quaternion> js;
    js.reserve(coords.size());
    for (const auto& q : coords) js.push_back(split(q).j);
    return js;
}

Quaternion SliceFunction::operator()(const QPoint& x) const {
    if (x.n() != nvars()) throw std::domain_error("slice: point arity mismatch");
    const StemValue v = stem_(x.complex_point());
    const auto js = x.j_units();

    // J_K products, lowest index first: J_K = J_min * J_{K \ min}
    const Mask count = Mask{1} << nvars();
    std::vector<Quaternion> jprod(count);
    jprod[0] = Quaternion::real(1.0);
    Quaternion acc = v[0];
    for (Mask k = 1; k < count; ++k) {
        const int low = std::countr_zero(k);
        jprod[k] = js[static_cast<std::size_t>(low)] * jprod[k & (k - 1)];
        acc += jprod[k] * v[k];
    }
    return acc;
}

SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g) {
    return SliceFunction(stem_tensor(f.stem(), g.stem()));
}

double circularity_residual(const SliceFunction& f, int h, const QPoint& x,
                            const Quaternion& jprime) {
    if (h < 1 || h > f.nvars()) throw std::domain_error("circularity_residual: bad variable");
    if (std::fabs((jprime * jprime + Quaternion::real(1.0)).max_abs()) > 1e-9)
        throw std::domain_error("circularity_residual: jprime is not a unit imaginary");
    const Quaternion base = f(x);
    QPoint moved = x;
    const SplitForm s = split(x[h]);
    moved[h] = Quaternion::real(s.alpha) + jprime * s.beta;
    return (f(moved) - base).norm();
}

bool sliceness_check(const StemFunction& F, IndexSet H, StemShape shape) {
    if (H.n != F.nvars()) throw std::domain_error("sliceness_check: index set arity mismatch");
    if (!F.support().has_value())
        throw CapabilityError("sliceness_check: component support unknown for this stem");
    const Mask hmask = H.bits;
    for (Mask k : *F.support()) {
        if ((k & hmask) == 0) continue;
        if (shape == StemShape::Circular) return false;
        // mixed components must be {h} u Q with h = min K in H, Q above h and
        // outside H
        const Mask low = k & (~k + 1);
        if ((low & hmask) == 0) return false;
        if ((k & hmask) != low) return false;
    }
    return true;
}

}  // namespace almansi
