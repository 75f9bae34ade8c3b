#pragma once

// Cauchy-Riemann-Fueter operators and Laplacians per variable, exact on
// polynomial maps, finite-difference on everything else. The operators
// carry the global 1/2 normalization, under which the Laplacian factors as
// 4 del delbar and delbar equals minus the spherical derivative on
// functions regular in that variable.

#include <optional>

#include "almansi/poly.hpp"
#include "almansi/poly_map.hpp"
#include "almansi/quaternion.hpp"
#include "almansi/slice.hpp"

namespace almansi {

// (1/2)(d/dalpha_h -+ i d/dbeta_h -+ j d/dgamma_h -+ k d/ddelta_h);
// conjugated = true gives the + signs, i/j/k multiply on the left
PolyMap crf_apply(const PolyMap& M, int h, bool conjugated);

// sum of second derivatives over the four coordinates of variable h
PolyMap laplacian(const PolyMap& M, int h);

enum class FdOperator { Crf, CrfConj, Laplacian };

// central differences (4th order, one Richardson level) on a slice
// function; error model O(step^4). step <= 0 selects 1e-3*(1+|coordinate|).
Quaternion fd_directional(const SliceFunction& f, int h, const QPoint& x, FdOperator op,
                          double step = 0.0);

struct DiffOpResult {
    enum class Path { Exact, FiniteDifference };
    Path path{Path::Exact};
    std::optional<PolyMap> map;       // exact path
    std::optional<Quaternion> value;  // numeric path, value at the probe point
};

// exact path when f carries its generating polynomial, numeric otherwise
// (numeric requires a probe point)
DiffOpResult apply_operator(const SliceFunction& f, int h, FdOperator op,
                            const QPoint* probe = nullptr);

// max |coefficient| of delbar_m(laplacian_m(P)); zero certifies that the
// Laplacian of P in x_m is axially monogenic. For m > 1 the input must use
// variables >= m only (slice-in-x_m hypothesis).
double fueter_residual(const QPolynomial& P, int m);

}  // namespace almansi
