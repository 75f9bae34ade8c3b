#include "almansi/poly_map.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>

namespace almansi {

namespace {

constexpr int kMaxTotalDegree = 32;
constexpr double kCoeffWarnThreshold = 1e12;

bool exactly_zero(const Quaternion& q) {
    return q.w == 0.0 && q.x == 0.0 && q.y == 0.0 && q.z == 0.0;
}

int degree_of(const PolyMap::Exponents& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

void warn_large_coeff(const Quaternion& q) {
    static std::atomic<bool> warned{false};
    if (q.max_abs() > kCoeffWarnThreshold && !warned.exchange(true)) {
        std::fprintf(stderr,
                     "almansi: polynomial coefficient magnitude exceeded %.0e; "
                     "results may lose precision\n",
                     kCoeffWarnThreshold);
    }
}

}  // namespace

PolyMap PolyMap::constant(int nvars, const Quaternion& c) {
    PolyMap p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

PolyMap PolyMap::variable(int nvars, int var) {
    if (var < 0 || var >= nvars) throw std::domain_error("PolyMap: variable index out of range");
    PolyMap p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    p.add_term(e, Quaternion::real(1.0));
    return p;
}

void PolyMap::add_term(const Exponents& e, const Quaternion& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::domain_error("PolyMap: exponent arity mismatch");
    if (exactly_zero(c)) return;
    warn_large_coeff(c);
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (exactly_zero(it->second)) terms_.erase(it);
    }
}

void PolyMap::check_compatible(const PolyMap& o) const {
    if (nvars_ != o.nvars_) throw std::domain_error("PolyMap: variable count mismatch");
}

PolyMap PolyMap::operator+(const PolyMap& o) const {
    check_compatible(o);
    PolyMap r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

PolyMap PolyMap::operator-(const PolyMap& o) const {
    check_compatible(o);
    PolyMap r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

PolyMap PolyMap::scaled(double s) const {
    PolyMap r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

PolyMap PolyMap::left_mul(const Quaternion& q) const {
    PolyMap r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, q * c);
    return r;
}

PolyMap PolyMap::right_mul(const Quaternion& q) const {
    PolyMap r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * q);
    return r;
}

PolyMap PolyMap::operator*(const PolyMap& o) const {
    check_compatible(o);
    PolyMap r(nvars_);
    Exponents e(static_cast<std::size_t>(nvars_), 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            int deg = 0;
            for (std::size_t v = 0; v < e.size(); ++v) {
                e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
                deg += e[v];
            }
            if (deg > kMaxTotalDegree) throw std::domain_error("PolyMap: degree overflow");
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

PolyMap PolyMap::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::domain_error("PolyMap: variable index out of range");
    PolyMap r(nvars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents de = e;
        de[v] -= 1;
        r.add_term(de, c * static_cast<double>(e[v]));
    }
    return r;
}

PolyMap PolyMap::divide_by_var(int var) const {
    if (var < 0 || var >= nvars_) throw std::domain_error("PolyMap: variable index out of range");
    PolyMap r(nvars_);
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) throw std::domain_error("PolyMap: term not divisible by variable");
        Exponents de = e;
        de[v] -= 1;
        r.add_term(de, c);
    }
    return r;
}

PolyMap PolyMap::substitute_square(int var, const PolyMap& replacement) const {
    check_compatible(replacement);
    const auto v = static_cast<std::size_t>(var);
    PolyMap r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] % 2 != 0) throw std::domain_error("PolyMap: odd exponent in square substitution");
        int half = e[v] / 2;
        Exponents base = e;
        base[v] = 0;
        PolyMap term(nvars_);
        term.add_term(base, c);
        for (int t = 0; t < half; ++t) term = term * replacement;
        r = r + term;
    }
    return r;
}

Quaternion PolyMap::eval(std::span<const double> coords) const {
    if (static_cast<int>(coords.size()) != nvars_) throw std::domain_error("PolyMap: evaluation arity mismatch");
    Quaternion acc;
    for (const auto& [e, c] : terms_) {
        double m = 1.0;
        for (std::size_t v = 0; v < e.size(); ++v) {
            for (int t = 0; t < e[v]; ++t) m *= coords[v];
        }
        acc += c * m;
    }
    return acc;
}

double PolyMap::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::fmax(m, c.max_abs());
    return m;
}

double PolyMap::max_imag_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) {
        m = std::fmax(m, std::fabs(c.x));
        m = std::fmax(m, std::fabs(c.y));
        m = std::fmax(m, std::fabs(c.z));
    }
    return m;
}

int PolyMap::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

}  // namespace almansi
