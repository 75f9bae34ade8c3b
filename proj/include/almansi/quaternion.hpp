#pragma once

// Quaternion arithmetic over double, plus the alpha + J*beta polar split
// used throughout slice analysis.

#include <cmath>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace almansi {

struct Quaternion {
    double w{0.0};  // scalar part
    double x{0.0};  // i coefficient
    double y{0.0};  // j coefficient
    double z{0.0};  // k coefficient

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    // Hamilton product; noncommutative.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    // |imaginary part|
    double im_norm() const { return std::sqrt(x * x + y * y + z * z); }

    constexpr Quaternion im() const { return {0.0, x, y, z}; }

    constexpr bool is_finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    // max |component|, cheaper than norm for residual bookkeeping
    double max_abs() const {
        double m = std::fabs(w);
        m = std::fmax(m, std::fabs(x));
        m = std::fmax(m, std::fabs(y));
        return std::fmax(m, std::fabs(z));
    }
};

inline constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
}

inline Quaternion qpow(Quaternion q, int n) {
    if (n < 0) throw std::domain_error("qpow: negative exponent");
    Quaternion r = Quaternion::real(1.0);
    while (n > 0) {
        if (n & 1) r = r * q;
        q = q * q;
        n >>= 1;
    }
    return r;
}

// q = alpha + j*beta with beta >= 0 and j*j = -1 (j canonical at real points).
struct SplitForm {
    double alpha{0.0};
    double beta{0.0};
    Quaternion j{Quaternion::unit_i()};

    Quaternion join() const { return Quaternion::real(alpha) + j * beta; }
};

// beta = |Im q|; at real points (beta == 0) the unit imaginary is fixed to i
// so the split is total and deterministic.
inline SplitForm split(const Quaternion& q) {
    SplitForm s;
    s.alpha = q.w;
    s.beta = q.im_norm();
    if (s.beta > 0.0) {
        s.j = q.im() / s.beta;
    } else {
        s.j = Quaternion::unit_i();
    }
    return s;
}

// Ordered product q_{k1} * ... * q_{kp} over the 1-based indices selected by
// `mask` (bit h-1 <-> index h), taken in increasing index order; empty mask
// gives 1.
inline Quaternion ordered_product(std::span<const Quaternion> qs, std::uint32_t mask) {
    Quaternion r = Quaternion::real(1.0);
    for (std::size_t h = 0; mask != 0; ++h, mask >>= 1) {
        if (mask & 1u) {
            if (h >= qs.size()) throw std::domain_error("ordered_product: index out of range");
            r = r * qs[h];
        }
    }
    return r;
}

}  // namespace almansi
