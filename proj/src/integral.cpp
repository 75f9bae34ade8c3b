#include "almansi/integral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace almansi {

namespace {

constexpr long long kBatchSize = 1 << 13;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t batch_seed(std::uint64_t seed, long long batch) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(batch) + 1));
}

}  // namespace

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(t);
    has_cached_ = true;
    return r * std::cos(t);
}

Quaternion Rng::sample_s3() {
    while (true) {
        const Quaternion g(gaussian(), gaussian(), gaussian(), gaussian());
        const double n = g.norm();
        if (n > 1e-12) return g / n;
    }
}

Quaternion Rng::random_unit_imaginary() {
    while (true) {
        const double a = gaussian();
        const double b = gaussian();
        const double c = gaussian();
        const double n = std::sqrt(a * a + b * b + c * c);
        if (n > 1e-12) return Quaternion(0.0, a / n, b / n, c / n);
    }
}

MCEstimate MCAccumulator::estimate(std::uint64_t seed) const {
    MCEstimate e;
    e.samples = count;
    e.seed = seed;
    if (count == 0) return e;
    e.value = Quaternion(mean[0], mean[1], mean[2], mean[3]);
    if (count > 1) {
        const double n = static_cast<double>(count);
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) worst = std::fmax(worst, std::fmax(0.0, m2[i]) / (n - 1.0));
        e.stderr_est = std::sqrt(worst / n);
    }
    return e;
}

double poisson_kernel(const Quaternion& x, const Quaternion& xi) {
    const double xn = x.norm_sq();
    const double dot = x.w * xi.w + x.x * xi.x + x.y * xi.y + x.z * xi.z;
    const double dist_sq = xn - 2.0 * dot + 1.0;
    return (1.0 - xn) / (dist_sq * dist_sq);
}

namespace {

struct FormulaContext {
    QPoint a;
    std::vector<double> radii;
    int m;
    // closed-form components: order-m components by K, and the K = empty
    // components of orders 0..m for the telescoping formulas
    std::vector<QComponentExpr> order_m;      // indexed by K mask
    std::vector<QComponentExpr> empty_chain;  // index j: order-j, K = empty
};

FormulaContext make_context(const QPolynomial& P, const QPoint& a,
                            const std::vector<double>& radii, int m) {
    const int n = P.nvars();
    if (m < 1 || m > n) throw std::domain_error("integral: order m out of range");
    if (a.n() != n) throw std::domain_error("integral: center arity mismatch");
    if (static_cast<int>(radii.size()) < m) throw std::domain_error("integral: missing radii");
    for (int h = 0; h < m; ++h)
        if (radii[static_cast<std::size_t>(h)] < 0.0)
            throw std::domain_error("integral: negative radius");

    FormulaContext ctx{a, radii, m, {}, {}};
    const IndexSet H = IndexSet::interval(m, n);
    ctx.order_m.resize(std::size_t{1} << m);
    for (Mask k : subsets_of(H.bits))
        ctx.order_m[k] = poly_component_closed_form(P, H, IndexSet(k, n));
    ctx.empty_chain.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j)
        ctx.empty_chain.push_back(
            poly_component_closed_form(P, IndexSet::interval(j, n), IndexSet::empty(n)));
    return ctx;
}

QPoint shifted(const QPoint& base, const std::vector<double>& radii,
               const std::vector<Quaternion>& lambda, int upto) {
    QPoint y = base;
    for (int h = 1; h <= upto; ++h)
        y[h] += lambda[static_cast<std::size_t>(h - 1)] * radii[static_cast<std::size_t>(h - 1)];
    return y;
}

QPoint shifted_center(const FormulaContext& ctx, const std::vector<Quaternion>& lambda,
                      int upto) {
    return shifted(ctx.a, ctx.radii, lambda, upto);
}

// runs the per-sample estimator over fixed-size, separately seeded batches
template <typename PerSample>
MCEstimate run_batches(long long nsamples, std::uint64_t seed, int draws_per_sample,
                       const PerSample& body) {
    if (nsamples <= 0) throw std::domain_error("integral: sample count must be positive");
    MCAccumulator total;
    std::vector<Quaternion> draws(static_cast<std::size_t>(draws_per_sample));
    for (long long start = 0, batch = 0; start < nsamples; start += kBatchSize, ++batch) {
        const long long stop = std::min(nsamples, start + kBatchSize);
        Rng rng(batch_seed(seed, batch));
        MCAccumulator acc;
        for (long long s = start; s < stop; ++s) {
            for (auto& d : draws) d = rng.sample_s3();
            acc.add(body(draws));
        }
        total += acc;
    }
    return total.estimate(seed);
}

}  // namespace

FormulaCheck mean_value_check(const QPolynomial& P, const QPoint& a,
                              const std::vector<double>& radii, int m, MeanValueFormula formula,
                              long long nsamples, std::uint64_t seed) {
    const FormulaContext ctx = make_context(P, a, radii, m);
    FormulaCheck out;

    switch (formula) {
        case MeanValueFormula::Components: {
            out.lhs = ctx.empty_chain[static_cast<std::size_t>(m)].eval(a);
            out.rhs = run_batches(nsamples, seed, m, [&](const std::vector<Quaternion>& lam) {
                return ctx.empty_chain[static_cast<std::size_t>(m)].eval(shifted_center(ctx, lam, m));
            });
            break;
        }
        case MeanValueFormula::First: {
            out.lhs = P.eval(a);
            // signed conj(a) weights per K, ordered over K^c
            std::vector<Quaternion> weight(ctx.order_m.size());
            for (Mask k = 0; k < weight.size(); ++k) {
                Quaternion w = Quaternion::real(1.0);
                int csize = 0;
                for (int h = 1; h <= m; ++h) {
                    if (mask_contains(k, h)) continue;
                    w = w * a[h].conj();
                    ++csize;
                }
                weight[k] = (csize & 1) ? -w : w;
            }
            out.rhs = run_batches(nsamples, seed, m, [&](const std::vector<Quaternion>& lam) {
                const QPoint y = shifted_center(ctx, lam, m);
                Quaternion g;
                for (Mask k = 0; k < ctx.order_m.size(); ++k)
                    g += weight[k] * ctx.order_m[k].eval(y);
                return g;
            });
            break;
        }
        case MeanValueFormula::Second: {
            out.lhs = P.eval(a);
            out.rhs = run_batches(nsamples, seed, m, [&](const std::vector<Quaternion>& lam) {
                Quaternion g;
                Quaternion lbar = Quaternion::real(1.0);  // conj(lambda)_{1..j}, ordered
                double rprod = 1.0;                       // r_{1..j}
                for (int j = 0; j < m; ++j) {
                    g += rprod * (lbar * ctx.empty_chain[static_cast<std::size_t>(j)].eval(
                                             shifted_center(ctx, lam, j + 1)));
                    lbar = lbar * lam[static_cast<std::size_t>(j)].conj();
                    rprod *= ctx.radii[static_cast<std::size_t>(j)];
                }
                g += rprod * (lbar * ctx.empty_chain[static_cast<std::size_t>(m)].eval(
                                         shifted_center(ctx, lam, m)));
                return g;
            });
            break;
        }
    }
    return out;
}

FormulaCheck poisson_check(const QPolynomial& P, const QPoint& a,
                           const std::vector<double>& radii,
                           const std::vector<Quaternion>& interior, int m, PoissonFormula formula,
                           long long nsamples, std::uint64_t seed) {
    const FormulaContext ctx = make_context(P, a, radii, m);
    if (static_cast<int>(interior.size()) < m)
        throw std::domain_error("poisson_check: missing interior points");
    for (int h = 0; h < m; ++h)
        if (interior[static_cast<std::size_t>(h)].norm() >= 1.0)
            throw std::domain_error("poisson_check: interior point with |x| >= 1");

    QPoint target = a;
    for (int h = 1; h <= m; ++h)
        target[h] += interior[static_cast<std::size_t>(h - 1)] * ctx.radii[static_cast<std::size_t>(h - 1)];

    FormulaCheck out;
    out.lhs = P.eval(target);

    auto kernel_product = [&](const std::vector<Quaternion>& xi, int upto) {
        double k = 1.0;
        for (int t = 0; t < upto; ++t)
            k *= poisson_kernel(interior[static_cast<std::size_t>(t)], xi[static_cast<std::size_t>(t)]);
        return k;
    };

    switch (formula) {
        case PoissonFormula::First: {
            std::vector<Quaternion> weight(ctx.order_m.size());
            for (Mask k = 0; k < weight.size(); ++k) {
                Quaternion w = Quaternion::real(1.0);
                int csize = 0;
                for (int h = 1; h <= m; ++h) {
                    if (mask_contains(k, h)) continue;
                    w = w * target[h].conj();
                    ++csize;
                }
                weight[k] = (csize & 1) ? -w : w;
            }
            out.rhs = run_batches(nsamples, seed, m, [&](const std::vector<Quaternion>& xi) {
                const QPoint y = shifted_center(ctx, xi, m);
                const double kern = kernel_product(xi, m);
                Quaternion g;
                for (Mask k = 0; k < ctx.order_m.size(); ++k)
                    g += weight[k] * ctx.order_m[k].eval(y);
                return g * kern;
            });
            break;
        }
        case PoissonFormula::Second: {
            // the j-th term integrates the first j+1 coordinates and keeps
            // the remaining interior shifts r_i x_i, i = j+2..m, in place
            std::vector<QPoint> tails;
            tails.reserve(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) {
                QPoint base = a;
                for (int i = j + 2; i <= m; ++i)
                    base[i] += interior[static_cast<std::size_t>(i - 1)] *
                               ctx.radii[static_cast<std::size_t>(i - 1)];
                tails.push_back(std::move(base));
            }
            out.rhs = run_batches(nsamples, seed, m, [&](const std::vector<Quaternion>& xi) {
                Quaternion g;
                Quaternion diff_bar = Quaternion::real(1.0);  // (conj(xi) - conj(x))_{1..j}
                double rprod = 1.0;
                for (int j = 0; j < m; ++j) {
                    g += (rprod * kernel_product(xi, j + 1)) *
                         (diff_bar * ctx.empty_chain[static_cast<std::size_t>(j)].eval(shifted(
                                         tails[static_cast<std::size_t>(j)], ctx.radii, xi, j + 1)));
                    diff_bar = diff_bar * (xi[static_cast<std::size_t>(j)].conj() -
                                           interior[static_cast<std::size_t>(j)].conj());
                    rprod *= ctx.radii[static_cast<std::size_t>(j)];
                }
                g += (rprod * kernel_product(xi, m)) *
                     (diff_bar * ctx.empty_chain[static_cast<std::size_t>(m)].eval(
                                     shifted_center(ctx, xi, m)));
                return g;
            });
            break;
        }
    }
    return out;
}

}  // namespace almansi
