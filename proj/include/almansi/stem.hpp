#pragma once

// Stem functions F: D in C^n -> H (x) R^(2^n), the signed tensor product,
// spherical value / spherical derivative, and a numeric holomorphy check.
//
// Components are indexed by subsets of {1,...,n} (bitmask, bit h-1 for
// variable h) and stored densely; n <= 6.
//
// Two evaluation paths coexist: polynomial-backed stems carry their
// components as exact polynomials in (alpha_h, beta_h) and stay exact under
// every operation here (in particular the spherical derivative divides out
// beta_h exactly, so it extends to beta_h = 0); everything else evaluates
// through closures and is singular where a derivative divided by beta_h = 0.

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "almansi/errors.hpp"
#include "almansi/index_set.hpp"
#include "almansi/poly_map.hpp"
#include "almansi/quaternion.hpp"

namespace almansi {

inline constexpr int kMaxVariables = 6;

// n slice coordinates alpha_h + i*beta_h
struct ComplexPoint {
    std::vector<std::complex<double>> coords;

    ComplexPoint() = default;
    explicit ComplexPoint(std::vector<std::complex<double>> c) : coords(std::move(c)) {}

    int n() const { return static_cast<int>(coords.size()); }
    double alpha(int h) const { return coords[static_cast<std::size_t>(h - 1)].real(); }
    double beta(int h) const { return coords[static_cast<std::size_t>(h - 1)].imag(); }

    // conjugate the h-th coordinate only
    ComplexPoint conj_at(int h) const {
        ComplexPoint p = *this;
        p.coords[static_cast<std::size_t>(h - 1)] = std::conj(p.coords[static_cast<std::size_t>(h - 1)]);
        return p;
    }

    // flat [alpha_1, beta_1, alpha_2, beta_2, ...]
    std::vector<double> flat() const {
        std::vector<double> out;
        out.reserve(coords.size() * 2);
        for (const auto& z : coords) {
            out.push_back(z.real());
            out.push_back(z.imag());
        }
        return out;
    }
};

// one value of a stem function: 2^n quaternion components
struct StemValue {
    int n{0};
    std::vector<Quaternion> comps;

    explicit StemValue(int n_ = 0) : n(n_), comps(std::size_t{1} << n_) {}

    Quaternion& operator[](Mask k) { return comps[k]; }
    const Quaternion& operator[](Mask k) const { return comps[k]; }

    StemValue& operator+=(const StemValue& o) {
        for (std::size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
        return *this;
    }
    StemValue operator-(const StemValue& o) const {
        StemValue r = *this;
        for (std::size_t i = 0; i < comps.size(); ++i) r.comps[i] -= o.comps[i];
        return r;
    }
    StemValue scaled(double s) const {
        StemValue r = *this;
        for (auto& c : r.comps) c = c * s;
        return r;
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& c : comps) m = std::fmax(m, c.max_abs());
        return m;
    }
};

// exact stem: every component a polynomial in (alpha_1,beta_1,...,alpha_n,beta_n)
struct StemPoly {
    int n{0};
    std::vector<PolyMap> comps;  // size 2^n, each over 2n variables

    explicit StemPoly(int n_);

    static int var_alpha(int h) { return 2 * (h - 1); }
    static int var_beta(int h) { return 2 * (h - 1) + 1; }

    StemValue eval(const ComplexPoint& z) const;
};

enum class StemProvenance { PolynomialBacked, Builtin, Derived };

class StemFunction {
public:
    StemFunction() = default;

    static StemFunction from_poly(StemPoly p);
    static StemFunction from_closure(int n, StemProvenance prov, Mask domain_excludes,
                                     std::function<StemValue(const ComplexPoint&)> eval,
                                     std::optional<std::vector<Mask>> support = std::nullopt);

    int nvars() const { return n_; }
    StemProvenance provenance() const { return prov_; }
    Mask domain_excludes() const { return domain_excludes_; }
    bool polynomial_backed() const { return poly_ != nullptr; }
    const StemPoly& poly() const;

    // component support (set of masks K with F_K not identically zero);
    // known exactly for polynomial-backed and builtin stems only
    const std::optional<std::vector<Mask>>& support() const { return support_; }

    // throws SingularPointError when beta_h = 0 for an excluded variable
    StemValue operator()(const ComplexPoint& z) const;

private:
    int n_{0};
    StemProvenance prov_{StemProvenance::Derived};
    Mask domain_excludes_{0};
    std::shared_ptr<const StemPoly> poly_;
    std::function<StemValue(const ComplexPoint&)> eval_;
    std::optional<std::vector<Mask>> support_;
};

enum class BuiltinStemKind { Monomial, ConjMonomial, Constant, Exp };

// Z_j : e_0 -> alpha_j, e_{j} -> beta_j (induces the coordinate monomial)
StemFunction make_monomial_stem(int n, int j);
// conj(Z_j) : e_0 -> alpha_j, e_{j} -> -beta_j
StemFunction make_conj_monomial_stem(int n, int j);
StemFunction make_constant_stem(int n, const Quaternion& a);
// e_0 -> e^alpha_j cos beta_j, e_{j} -> e^alpha_j sin beta_j
StemFunction make_exp_stem(int n, int j);
// Im(z_h) : e_{h} -> beta_h
StemFunction make_im_stem(int n, int h);

// variable kinds only; Constant goes through make_constant_stem
StemFunction make_builtin_stem(BuiltinStemKind kind, int n, int j);

// signed tensor product: (F(x)G)_M = sum over K^H = M of (-1)^|K&H| F_K G_H
StemFunction stem_tensor(const StemFunction& f, const StemFunction& g);

// keep only components with K disjoint from H; idempotent
StemFunction stem_spherical_value(const StemFunction& f, IndexSet H);

// (F'_H)_K = beta_H^-1 F_{K u H} for K disjoint from H
StemFunction stem_spherical_derivative(const StemFunction& f, IndexSet H);

StemFunction stem_add(const StemFunction& f, const StemFunction& g);
StemFunction stem_scale(const StemFunction& f, double s);

// Max residual of the Cauchy-Riemann system in variable h at z, with the
// global 1/2 operator normalization; near zero iff F is h-holomorphic at z.
// Partials by 4th-order central differences with one Richardson level.
// step <= 0 selects 1e-3 * (1 + |coordinate|); step < 1e-8 is rejected.
double stem_cr_residual(const StemFunction& f, int h, const ComplexPoint& z, double step = 0.0);

}  // namespace almansi
