#pragma once

// Slice functions induced from stem functions: pointwise evaluation on H^n,
// the slice product, and the structural predicates (circularity, sliceness)
// decided on exact component support.

#include <memory>
#include <vector>

#include "almansi/quaternion.hpp"
#include "almansi/stem.hpp"

namespace almansi {

class QPolynomial;

struct QPoint {
    std::vector<Quaternion> coords;

    QPoint() = default;
    explicit QPoint(std::vector<Quaternion> c) : coords(std::move(c)) {}

    int n() const { return static_cast<int>(coords.size()); }
    const Quaternion& operator[](int h) const { return coords[static_cast<std::size_t>(h - 1)]; }
    Quaternion& operator[](int h) { return coords[static_cast<std::size_t>(h - 1)]; }

    // slice coordinates alpha_h + i beta_h with beta_h >= 0
    ComplexPoint complex_point() const;
    // unit imaginaries J_h; canonical i at real coordinates
    std::vector<Quaternion> j_units() const;
};

class SliceFunction {
public:
    SliceFunction() = default;
    explicit SliceFunction(StemFunction stem) : stem_(std::move(stem)) {}
    SliceFunction(StemFunction stem, std::shared_ptr<const QPolynomial> source)
        : stem_(std::move(stem)), source_poly_(std::move(source)) {}

    int nvars() const { return stem_.nvars(); }
    const StemFunction& stem() const { return stem_; }

    // the generating polynomial, when this function was built from one
    const std::shared_ptr<const QPolynomial>& source_poly() const { return source_poly_; }

    // f(x) = sum_K J_K F_K(z)
    Quaternion operator()(const QPoint& x) const;

private:
    StemFunction stem_;
    std::shared_ptr<const QPolynomial> source_poly_;
};

SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g);

// |f(x) - f(x')| where x' replaces the unit imaginary of coordinate h by
// jprime; zero for every choice iff f is circular in x_h on that orbit
double circularity_residual(const SliceFunction& f, int h, const QPoint& x,
                            const Quaternion& jprime);

enum class StemShape {
    Circular,  // components vanish unless K disjoint from H
    Slice      // additionally allows K = {h} u Q, h in H, Q in {h+1..n} \ H
};

// exact support test; requires a stem whose component support is known
// (polynomial-backed or builtin). The Slice shape is order-sensitive in h:
// the H-member of a mixed component must be its minimum.
bool sliceness_check(const StemFunction& F, IndexSet H, StemShape shape);

}  // namespace almansi
