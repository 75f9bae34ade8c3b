#include "almansi/calculus.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace almansi {

PolyMap crf_apply(const PolyMap& M, int h, bool conjugated) {
    const double sign = conjugated ? 1.0 : -1.0;
    PolyMap r = M.derivative(RealCoords::alpha(h));
    r = r + M.derivative(RealCoords::beta(h)).left_mul(Quaternion::unit_i()).scaled(sign);
    r = r + M.derivative(RealCoords::gamma(h)).left_mul(Quaternion::unit_j()).scaled(sign);
    r = r + M.derivative(RealCoords::delta(h)).left_mul(Quaternion::unit_k()).scaled(sign);
    return r.scaled(0.5);
}

PolyMap laplacian(const PolyMap& M, int h) {
    PolyMap r(M.nvars());
    for (int c = 0; c < 4; ++c) {
        const int v = RealCoords::alpha(h) + c;
        r = r + M.derivative(v).derivative(v);
    }
    return r;
}

namespace {

using PointFn = std::function<Quaternion(double)>;

// 4th-order first derivative with one Richardson level
Quaternion fd_first(const PointFn& g, double s) {
    auto d4 = [&](double step) {
        Quaternion v = g(2.0 * step) * (-1.0) + g(step) * 8.0 + g(-step) * (-8.0) + g(-2.0 * step);
        return v * (1.0 / (12.0 * step));
    };
    const Quaternion coarse = d4(s);
    const Quaternion fine = d4(s / 2.0);
    return (fine * 16.0 - coarse) * (1.0 / 15.0);
}

// 4th-order second derivative with one Richardson level
Quaternion fd_second(const PointFn& g, const Quaternion& center, double s) {
    auto d4 = [&](double step) {
        Quaternion v = g(2.0 * step) * (-1.0) + g(step) * 16.0 + center * (-30.0) +
                       g(-step) * 16.0 + g(-2.0 * step) * (-1.0);
        return v * (1.0 / (12.0 * step * step));
    };
    const Quaternion coarse = d4(s);
    const Quaternion fine = d4(s / 2.0);
    return (fine * 16.0 - coarse) * (1.0 / 15.0);
}

}  // namespace

Quaternion fd_directional(const SliceFunction& f, int h, const QPoint& x, FdOperator op,
                          double step) {
    if (h < 1 || h > f.nvars()) throw std::domain_error("fd_directional: bad variable");
    if (step <= 0.0) step = 1e-3 * (1.0 + x[h].max_abs());
    if (step < 1e-8) throw std::domain_error("fd_directional: step too small");

    auto shifted = [&](int c, double d) {
        QPoint p = x;
        switch (c) {
            case 0: p[h].w += d; break;
            case 1: p[h].x += d; break;
            case 2: p[h].y += d; break;
            default: p[h].z += d; break;
        }
        return f(p);
    };

    if (op == FdOperator::Laplacian) {
        const Quaternion center = f(x);
        Quaternion acc;
        for (int c = 0; c < 4; ++c)
            acc += fd_second([&](double d) { return shifted(c, d); }, center, step);
        return acc;
    }

    const double sign = (op == FdOperator::CrfConj) ? 1.0 : -1.0;
    Quaternion d[4];
    for (int c = 0; c < 4; ++c) d[c] = fd_first([&](double dd) { return shifted(c, dd); }, step);
    Quaternion r = d[0];
    r += Quaternion::unit_i() * d[1] * sign;
    r += Quaternion::unit_j() * d[2] * sign;
    r += Quaternion::unit_k() * d[3] * sign;
    return r * 0.5;
}

DiffOpResult apply_operator(const SliceFunction& f, int h, FdOperator op, const QPoint* probe) {
    DiffOpResult out;
    if (f.source_poly()) {
        out.path = DiffOpResult::Path::Exact;
        const PolyMap M = to_real_poly_map(*f.source_poly());
        switch (op) {
            case FdOperator::Crf: out.map = crf_apply(M, h, false); break;
            case FdOperator::CrfConj: out.map = crf_apply(M, h, true); break;
            case FdOperator::Laplacian: out.map = laplacian(M, h); break;
        }
        if (probe != nullptr) out.value = out.map->eval(real_coords_of(*probe));
        return out;
    }
    if (probe == nullptr)
        throw std::domain_error("apply_operator: numeric path needs a probe point");
    out.path = DiffOpResult::Path::FiniteDifference;
    out.value = fd_directional(f, h, *probe, op);
    return out;
}

double fueter_residual(const QPolynomial& P, int m) {
    if (m < 1 || m > P.nvars()) throw std::domain_error("fueter_residual: bad variable");
    if (m > 1) {
        for (const auto& t : P.terms()) {
            for (int i = 1; i < m; ++i) {
                if (t.alpha[static_cast<std::size_t>(i - 1)] != 0)
                    throw std::domain_error(
                        "fueter_residual: for m > 1 the polynomial must use variables >= m only "
                        "(membership in the slice-in-x_" + std::to_string(m) + " class is a hypothesis)");
            }
        }
    }
    const PolyMap M = to_real_poly_map(P);
    return crf_apply(laplacian(M, m), m, true).max_abs_coeff();
}

}  // namespace almansi
