#include "almansi/stem.hpp"

#include <cmath>
#include <stdexcept>

namespace almansi {

namespace {

void check_nvars(int n) {
    if (n < 1 || n > kMaxVariables) throw std::domain_error("stem: variable count must be in [1,6]");
}

void check_var(int n, int j) {
    if (j < 1 || j > n) throw std::domain_error("stem: variable index out of range");
}

void check_same_n(const StemFunction& f, const StemFunction& g) {
    if (f.nvars() != g.nvars()) throw std::domain_error("stem: variable count mismatch");
}

double tensor_sign(Mask k, Mask h) { return (std::popcount(k & h) & 1) ? -1.0 : 1.0; }

std::vector<Mask> poly_support(const StemPoly& p) {
    std::vector<Mask> s;
    for (Mask m = 0; m < (Mask{1} << p.n); ++m)
        if (!p.comps[m].empty()) s.push_back(m);
    return s;
}

}  // namespace

StemPoly::StemPoly(int n_) : n(n_) {
    check_nvars(n_);
    comps.assign(std::size_t{1} << n_, PolyMap(2 * n_));
}

StemValue StemPoly::eval(const ComplexPoint& z) const {
    StemValue v(n);
    const auto coords = z.flat();
    for (Mask m = 0; m < (Mask{1} << n); ++m)
        if (!comps[m].empty()) v[m] = comps[m].eval(coords);
    return v;
}

StemFunction StemFunction::from_poly(StemPoly p) {
    StemFunction f;
    f.n_ = p.n;
    f.prov_ = StemProvenance::PolynomialBacked;
    f.domain_excludes_ = 0;
    f.support_ = poly_support(p);
    auto shared = std::make_shared<const StemPoly>(std::move(p));
    f.poly_ = shared;
    f.eval_ = [shared](const ComplexPoint& z) { return shared->eval(z); };
    return f;
}

StemFunction StemFunction::from_closure(int n, StemProvenance prov, Mask domain_excludes,
                                        std::function<StemValue(const ComplexPoint&)> eval,
                                        std::optional<std::vector<Mask>> support) {
    check_nvars(n);
    StemFunction f;
    f.n_ = n;
    f.prov_ = prov;
    f.domain_excludes_ = domain_excludes;
    f.eval_ = std::move(eval);
    f.support_ = std::move(support);
    return f;
}

const StemPoly& StemFunction::poly() const {
    if (!poly_) throw CapabilityError("stem: not polynomial-backed");
    return *poly_;
}

StemValue StemFunction::operator()(const ComplexPoint& z) const {
    if (z.n() != n_) throw std::domain_error("stem: evaluation point arity mismatch");
    for (int h = 1; h <= n_; ++h) {
        if (mask_contains(domain_excludes_, h) && z.beta(h) == 0.0)
            throw SingularPointError("stem: spherical derivative undefined at beta_" +
                                     std::to_string(h) + " = 0");
    }
    return eval_(z);
}

StemFunction make_monomial_stem(int n, int j) {
    check_nvars(n);
    check_var(n, j);
    StemPoly p(n);
    p.comps[0] = PolyMap::variable(2 * n, StemPoly::var_alpha(j));
    p.comps[mask_bit(j)] = PolyMap::variable(2 * n, StemPoly::var_beta(j));
    return StemFunction::from_poly(std::move(p));
}

StemFunction make_conj_monomial_stem(int n, int j) {
    check_nvars(n);
    check_var(n, j);
    StemPoly p(n);
    p.comps[0] = PolyMap::variable(2 * n, StemPoly::var_alpha(j));
    p.comps[mask_bit(j)] = PolyMap::variable(2 * n, StemPoly::var_beta(j)).scaled(-1.0);
    return StemFunction::from_poly(std::move(p));
}

StemFunction make_constant_stem(int n, const Quaternion& a) {
    check_nvars(n);
    StemPoly p(n);
    p.comps[0] = PolyMap::constant(2 * n, a);
    return StemFunction::from_poly(std::move(p));
}

StemFunction make_im_stem(int n, int h) {
    check_nvars(n);
    check_var(n, h);
    StemPoly p(n);
    p.comps[mask_bit(h)] = PolyMap::variable(2 * n, StemPoly::var_beta(h));
    return StemFunction::from_poly(std::move(p));
}

StemFunction make_exp_stem(int n, int j) {
    check_nvars(n);
    check_var(n, j);
    auto eval = [n, j](const ComplexPoint& z) {
        StemValue v(n);
        const double ea = std::exp(z.alpha(j));
        v[0] = Quaternion::real(ea * std::cos(z.beta(j)));
        v[mask_bit(j)] = Quaternion::real(ea * std::sin(z.beta(j)));
        return v;
    };
    return StemFunction::from_closure(n, StemProvenance::Builtin, 0, eval,
                                      std::vector<Mask>{0, mask_bit(j)});
}

StemFunction make_builtin_stem(BuiltinStemKind kind, int n, int j) {
    switch (kind) {
        case BuiltinStemKind::Monomial: return make_monomial_stem(n, j);
        case BuiltinStemKind::ConjMonomial: return make_conj_monomial_stem(n, j);
        case BuiltinStemKind::Exp: return make_exp_stem(n, j);
        case BuiltinStemKind::Constant:
            throw std::domain_error("make_builtin_stem: constant kind takes a coefficient");
    }
    throw std::domain_error("make_builtin_stem: unknown kind");
}

StemFunction stem_tensor(const StemFunction& f, const StemFunction& g) {
    check_same_n(f, g);
    const int n = f.nvars();
    const Mask count = Mask{1} << n;

    if (f.polynomial_backed() && g.polynomial_backed()) {
        const StemPoly& a = f.poly();
        const StemPoly& b = g.poly();
        StemPoly out(n);
        for (Mask k = 0; k < count; ++k) {
            if (a.comps[k].empty()) continue;
            for (Mask h = 0; h < count; ++h) {
                if (b.comps[h].empty()) continue;
                PolyMap prod = a.comps[k] * b.comps[h];
                out.comps[k ^ h] = out.comps[k ^ h] + prod.scaled(tensor_sign(k, h));
            }
        }
        return StemFunction::from_poly(std::move(out));
    }

    auto eval = [f, g, n, count](const ComplexPoint& z) {
        const StemValue a = f(z);
        const StemValue b = g(z);
        StemValue v(n);
        for (Mask k = 0; k < count; ++k)
            for (Mask h = 0; h < count; ++h)
                v[k ^ h] += (a[k] * b[h]) * tensor_sign(k, h);
        return v;
    };
    return StemFunction::from_closure(n, StemProvenance::Derived,
                                      f.domain_excludes() | g.domain_excludes(), eval);
}

StemFunction stem_spherical_value(const StemFunction& f, IndexSet H) {
    if (H.n != f.nvars()) throw std::domain_error("stem: index set arity mismatch");
    const int n = f.nvars();
    const Mask hmask = H.bits;

    if (f.polynomial_backed()) {
        StemPoly out(n);
        for (Mask k = 0; k < (Mask{1} << n); ++k)
            if ((k & hmask) == 0) out.comps[k] = f.poly().comps[k];
        return StemFunction::from_poly(std::move(out));
    }

    auto eval = [f, n, hmask](const ComplexPoint& z) {
        const StemValue a = f(z);
        StemValue v(n);
        for (Mask k = 0; k < (Mask{1} << n); ++k)
            if ((k & hmask) == 0) v[k] = a[k];
        return v;
    };
    return StemFunction::from_closure(n, StemProvenance::Derived, f.domain_excludes(), eval);
}

StemFunction stem_spherical_derivative(const StemFunction& f, IndexSet H) {
    if (H.n != f.nvars()) throw std::domain_error("stem: index set arity mismatch");
    const int n = f.nvars();
    const Mask hmask = H.bits;

    if (f.polynomial_backed()) {
        // components indexed by K u H are odd in each beta_h, h in H, so the
        // division is exact and the result extends to beta_h = 0
        StemPoly out(n);
        for (Mask k = 0; k < (Mask{1} << n); ++k) {
            if ((k & hmask) != 0) continue;
            PolyMap c = f.poly().comps[k | hmask];
            for (int h : H.members()) {
                if (c.empty()) break;
                c = c.divide_by_var(StemPoly::var_beta(h));
            }
            out.comps[k] = std::move(c);
        }
        return StemFunction::from_poly(std::move(out));
    }

    auto eval = [f, n, hmask, H](const ComplexPoint& z) {
        double beta_prod = 1.0;
        for (int h : H.members()) beta_prod *= z.beta(h);
        const StemValue a = f(z);
        StemValue v(n);
        for (Mask k = 0; k < (Mask{1} << n); ++k)
            if ((k & hmask) == 0) v[k] = a[k | hmask] / beta_prod;
        return v;
    };
    return StemFunction::from_closure(n, StemProvenance::Derived,
                                      f.domain_excludes() | hmask, eval);
}

StemFunction stem_add(const StemFunction& f, const StemFunction& g) {
    check_same_n(f, g);
    const int n = f.nvars();
    if (f.polynomial_backed() && g.polynomial_backed()) {
        StemPoly out(n);
        for (Mask k = 0; k < (Mask{1} << n); ++k)
            out.comps[k] = f.poly().comps[k] + g.poly().comps[k];
        return StemFunction::from_poly(std::move(out));
    }
    auto eval = [f, g](const ComplexPoint& z) {
        StemValue v = f(z);
        v += g(z);
        return v;
    };
    return StemFunction::from_closure(n, StemProvenance::Derived,
                                      f.domain_excludes() | g.domain_excludes(), eval);
}

StemFunction stem_scale(const StemFunction& f, double s) {
    const int n = f.nvars();
    if (f.polynomial_backed()) {
        StemPoly out(n);
        for (Mask k = 0; k < (Mask{1} << n); ++k) out.comps[k] = f.poly().comps[k].scaled(s);
        return StemFunction::from_poly(std::move(out));
    }
    auto eval = [f, s](const ComplexPoint& z) { return f(z).scaled(s); };
    return StemFunction::from_closure(n, StemProvenance::Derived, f.domain_excludes(), eval);
}

namespace {

// 4th-order central difference of a StemValue-valued function along one
// real coordinate, with one Richardson level
StemValue central_diff(const std::function<StemValue(double)>& g, double s) {
    auto d4 = [&](double step) {
        StemValue v = g(2.0 * step).scaled(-1.0);
        v += g(step).scaled(8.0);
        v += g(-step).scaled(-8.0);
        v += g(-2.0 * step);
        return v.scaled(1.0 / (12.0 * step));
    };
    StemValue coarse = d4(s);
    StemValue fine = d4(s / 2.0);
    return (fine.scaled(16.0) - coarse).scaled(1.0 / 15.0);
}

}  // namespace

double stem_cr_residual(const StemFunction& f, int h, const ComplexPoint& z, double step) {
    check_var(f.nvars(), h);
    if (step == 0.0 || step < 0.0) {
        const double mag = std::fmax(std::fabs(z.alpha(h)), std::fabs(z.beta(h)));
        step = 1e-3 * (1.0 + mag);
    }
    if (step < 1e-8) throw std::domain_error("stem_cr_residual: step too small");

    const std::size_t idx = static_cast<std::size_t>(h - 1);
    auto shifted_alpha = [&](double d) {
        ComplexPoint p = z;
        p.coords[idx] += std::complex<double>(d, 0.0);
        return f(p);
    };
    auto shifted_beta = [&](double d) {
        ComplexPoint p = z;
        p.coords[idx] += std::complex<double>(0.0, d);
        return f(p);
    };
    const StemValue da = central_diff(shifted_alpha, step);
    const StemValue db = central_diff(shifted_beta, step);

    const Mask hb = mask_bit(h);
    double res = 0.0;
    for (Mask k = 0; k < (Mask{1} << f.nvars()); ++k) {
        if (k & hb) continue;
        const Quaternion r1 = (da[k] - db[k | hb]) * 0.5;
        const Quaternion r2 = (db[k] + da[k | hb]) * 0.5;
        res = std::fmax(res, r1.norm());
        res = std::fmax(res, r2.norm());
    }
    return res;
}

}  // namespace almansi
