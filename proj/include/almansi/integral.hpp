#pragma once

// Uniform sampling on the unit sphere of H and seeded Monte Carlo
// verification of the mean-value and Poisson formulas. Estimates are
// deterministic for a given seed: the generator sequence is pinned, and
// sampling is partitioned into fixed-size batches whose accumulators
// combine associatively, so the result does not depend on how batches are
// grouped or scheduled.

#include <cstdint>
#include <random>
#include <vector>

#include "almansi/poly.hpp"
#include "almansi/quaternion.hpp"
#include "almansi/slice.hpp"

namespace almansi {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // [0,1), from the top 53 bits
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // explicit Box-Muller; cached second value keeps draw counts deterministic
    double gaussian();

    // uniform w.r.t. the normalized surface measure of S^3
    Quaternion sample_s3();

    // uniform unit imaginary (square root of -1)
    Quaternion random_unit_imaginary();

private:
    std::mt19937_64 eng_;
    double cached_{0.0};
    bool has_cached_{false};
};

struct MCEstimate {
    Quaternion value;
    double stderr_est{0.0};  // componentwise max standard error
    long long samples{0};
    std::uint64_t seed{0};
};

// componentwise running mean and sum of squared deviations; partial
// accumulators combine associatively (parallel-variance form), and constant
// streams keep an exactly zero variance
struct MCAccumulator {
    long long count{0};
    double mean[4]{0, 0, 0, 0};
    double m2[4]{0, 0, 0, 0};

    void add(const Quaternion& q) {
        count += 1;
        const double c[4] = {q.w, q.x, q.y, q.z};
        for (int i = 0; i < 4; ++i) {
            const double delta = c[i] - mean[i];
            mean[i] += delta / static_cast<double>(count);
            m2[i] += delta * (c[i] - mean[i]);
        }
    }
    MCAccumulator& operator+=(const MCAccumulator& o) {
        if (o.count == 0) return *this;
        if (count == 0) {
            *this = o;
            return *this;
        }
        const double total = static_cast<double>(count + o.count);
        for (int i = 0; i < 4; ++i) {
            const double delta = o.mean[i] - mean[i];
            mean[i] += delta * static_cast<double>(o.count) / total;
            m2[i] += o.m2[i] +
                     delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
        }
        count += o.count;
        return *this;
    }
    MCEstimate estimate(std::uint64_t seed) const;
};

// Poisson kernel of the unit ball of R^4 against the normalized sphere
// measure; xi is taken to lie on the sphere, so |x - xi|^2 is computed as
// |x|^2 - 2<x,xi> + 1 (exactly 1 at x = 0, which makes the x = 0 reduction
// to the mean-value estimator bit-identical).
double poisson_kernel(const Quaternion& x, const Quaternion& xi);

enum class MeanValueFormula { Components, First, Second };
enum class PoissonFormula { First, Second };

struct FormulaCheck {
    Quaternion lhs;   // exact side
    MCEstimate rhs;   // Monte Carlo side
};

// Components: center value of the K = empty component of order m against
//   its spherical mean over (S^3)^m.
// First: f(a) against the signed conj(a)-weighted component means.
// Second: f(a) against the telescoping conj(lambda)-weighted means of the
//   K = empty components of orders 0..m.
// Noncommutative integrands keep their left factors in order per sample.
FormulaCheck mean_value_check(const QPolynomial& P, const QPoint& a,
                              const std::vector<double>& radii, int m, MeanValueFormula formula,
                              long long nsamples, std::uint64_t seed);

// Same assemblies with the product Poisson kernel; interior points x_h must
// satisfy |x_h| < 1. x = 0 reduces to the matching mean-value estimator.
FormulaCheck poisson_check(const QPolynomial& P, const QPoint& a,
                           const std::vector<double>& radii,
                           const std::vector<Quaternion>& interior, int m, PoissonFormula formula,
                           long long nsamples, std::uint64_t seed);

}  // namespace almansi
