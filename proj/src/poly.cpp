#include "almansi/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace almansi {

namespace {

bool exactly_zero(const Quaternion& q) {
    return q.w == 0.0 && q.x == 0.0 && q.y == 0.0 && q.z == 0.0;
}

void check_alpha(int n, const std::vector<int>& alpha) {
    if (static_cast<int>(alpha.size()) != n)
        throw std::domain_error("QPolynomial: exponent arity mismatch");
    for (int a : alpha)
        if (a < 0) throw std::domain_error("QPolynomial: negative exponent");
}

std::string format_real(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string format_coeff(const Quaternion& c) {
    if (c.x == 0.0 && c.y == 0.0 && c.z == 0.0) return format_real(c.w);
    std::ostringstream os;
    os << '[' << c.w << ',' << c.x << ',' << c.y << ',' << c.z << ']';
    return os.str();
}

}  // namespace

QPolynomial::QPolynomial(int n) : n_(n) {
    if (n < 1 || n > kMaxVariables) throw std::domain_error("QPolynomial: variable count must be in [1,6]");
}

void QPolynomial::add_term(std::vector<int> alpha, const Quaternion& coeff) {
    check_alpha(n_, alpha);
    if (exactly_zero(coeff)) return;
    for (auto& t : terms_) {
        if (t.alpha == alpha) {
            t.coeff += coeff;
            if (exactly_zero(t.coeff)) {
                t = terms_.back();
                terms_.pop_back();
            }
            return;
        }
    }
    terms_.push_back({std::move(alpha), coeff});
}

Quaternion QPolynomial::eval(const QPoint& x) const {
    if (x.n() != n_) throw std::domain_error("QPolynomial: point arity mismatch");
    Quaternion acc;
    for (const auto& t : terms_) {
        Quaternion m = Quaternion::real(1.0);
        for (int h = 1; h <= n_; ++h) {
            const int e = t.alpha[static_cast<std::size_t>(h - 1)];
            if (e > 0) m = m * qpow(x[h], e);
        }
        acc += m * t.coeff;
    }
    return acc;
}

int QPolynomial::total_degree() const {
    int d = 0;
    for (const auto& t : terms_) {
        int td = 0;
        for (int a : t.alpha) td += a;
        d = std::max(d, td);
    }
    return d;
}

bool QPolynomial::has_real_coefficients() const {
    for (const auto& t : terms_)
        if (t.coeff.x != 0.0 || t.coeff.y != 0.0 || t.coeff.z != 0.0) return false;
    return true;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    if (n_ != o.n_) throw std::domain_error("QPolynomial: variable count mismatch");
    QPolynomial r = *this;
    for (const auto& t : o.terms_) r.add_term(t.alpha, t.coeff);
    return r;
}

QPolynomial QPolynomial::scaled(double s) const {
    QPolynomial r(n_);
    for (const auto& t : terms_) r.add_term(t.alpha, t.coeff * s);
    return r;
}

QPolynomial QPolynomial::monomial(int n, std::vector<int> alpha, const Quaternion& coeff) {
    QPolynomial p(n);
    p.add_term(std::move(alpha), coeff);
    return p;
}

QPolynomial QPolynomial::constant(int n, const Quaternion& c) {
    return monomial(n, std::vector<int>(static_cast<std::size_t>(n), 0), c);
}

QPolynomial poly_slice_product(const QPolynomial& p, const QPolynomial& q) {
    if (p.nvars() != q.nvars()) throw std::domain_error("poly_slice_product: variable count mismatch");
    QPolynomial r(p.nvars());
    for (const auto& a : p.terms()) {
        for (const auto& b : q.terms()) {
            std::vector<int> e(a.alpha.size());
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = a.alpha[v] + b.alpha[v];
            r.add_term(std::move(e), a.coeff * b.coeff);
        }
    }
    return r;
}

double zonal_tilde_ab(int k, double alpha, double beta_sq) {
    if (k < -1) throw std::domain_error("zonal_tilde: degree below -1");
    if (k == -1) return 0.0;
    const double norm_sq = alpha * alpha + beta_sq;
    double prev = 0.0;  // s_{-1}
    double cur = 1.0;   // s_0
    for (int m = 1; m <= k; ++m) {
        const double next = 2.0 * alpha * cur - norm_sq * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double zonal_tilde(int k, const Quaternion& q) {
    const double beta_sq = q.x * q.x + q.y * q.y + q.z * q.z;
    return zonal_tilde_ab(k, q.w, beta_sq);
}

Quaternion QComponentExpr::eval(const QPoint& x) const {
    if (x.n() != n) throw std::domain_error("QComponentExpr: point arity mismatch");
    Quaternion acc;
    for (const auto& t : terms) {
        double scale = 1.0;
        for (const auto& zf : t.zonals) scale *= zonal_tilde(zf.degree, x[zf.var]);
        Quaternion m = Quaternion::real(scale);
        for (const auto& [var, exp] : t.monomials) m = m * qpow(x[var], exp);
        acc += m * t.coeff;
    }
    return acc;
}

std::string QComponentExpr::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& t : terms) {
        if (!first_term) os << " + ";
        first_term = false;
        std::vector<std::string> factors;
        for (const auto& zf : t.zonals) {
            if (zf.degree == 0) continue;  // zt_0 = 1
            if (zf.degree == 1) {
                factors.push_back("2*a" + std::to_string(zf.var));
            } else {
                factors.push_back("Zt" + std::to_string(zf.degree) + "(x" + std::to_string(zf.var) + ")");
            }
        }
        for (const auto& [var, exp] : t.monomials) {
            std::string f = "x" + std::to_string(var);
            if (exp > 1) f += "^" + std::to_string(exp);
            factors.push_back(f);
        }
        const bool unit_coeff = (t.coeff.w == 1.0 && t.coeff.x == 0.0 && t.coeff.y == 0.0 && t.coeff.z == 0.0);
        if (!unit_coeff || factors.empty()) factors.push_back(format_coeff(t.coeff));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << '*';
            os << factors[i];
        }
    }
    return os.str();
}

QComponentExpr poly_component_closed_form(const QPolynomial& P, IndexSet H, IndexSet K) {
    const int n = P.nvars();
    if (H.n != n || K.n != n) throw std::domain_error("poly_component_closed_form: arity mismatch");
    if (!K.subset_of(H)) throw std::domain_error("poly_component_closed_form: K must be a subset of H");

    QComponentExpr expr;
    expr.n = n;
    for (const auto& t : P.terms()) {
        ComponentTerm ct;
        ct.coeff = t.coeff;
        bool vanishes = false;
        for (int h = 1; h <= n; ++h) {
            const int a = t.alpha[static_cast<std::size_t>(h - 1)];
            if (H.contains(h)) {
                const int deg = a - 1 + (K.contains(h) ? 1 : 0);
                if (deg < 0) {
                    vanishes = true;
                    break;
                }
                ct.zonals.push_back({h, deg});
            } else if (a > 0) {
                ct.monomials.push_back({h, a});
            }
        }
        if (!vanishes) expr.terms.push_back(std::move(ct));
    }
    return expr;
}

namespace {

// Re and Im of z_h^m as exact polynomials in (alpha_h, beta_h), built by
// repeated complex multiplication
std::pair<PolyMap, PolyMap> complex_power_stem_maps(int n, int h, int m) {
    const int nv = 2 * n;
    PolyMap re = PolyMap::constant(nv, Quaternion::real(1.0));
    PolyMap im(nv);
    const PolyMap a = PolyMap::variable(nv, StemPoly::var_alpha(h));
    const PolyMap b = PolyMap::variable(nv, StemPoly::var_beta(h));
    for (int t = 0; t < m; ++t) {
        PolyMap re_next = re * a - im * b;
        PolyMap im_next = re * b + im * a;
        re = std::move(re_next);
        im = std::move(im_next);
    }
    return {re, im};
}

}  // namespace

StemFunction poly_to_stem(const QPolynomial& P) {
    const int n = P.nvars();
    StemPoly stem(n);
    for (const auto& t : P.terms()) {
        Mask supp = 0;
        std::vector<std::pair<PolyMap, PolyMap>> re_im;
        re_im.reserve(static_cast<std::size_t>(n));
        for (int h = 1; h <= n; ++h) {
            const int a = t.alpha[static_cast<std::size_t>(h - 1)];
            re_im.push_back(complex_power_stem_maps(n, h, a));
            if (a > 0) supp |= mask_bit(h);
        }
        for (Mask k : subsets_of(supp)) {
            PolyMap comp = PolyMap::constant(2 * n, Quaternion::real(1.0));
            for (int h = 1; h <= n; ++h) {
                const auto& [re, im] = re_im[static_cast<std::size_t>(h - 1)];
                comp = comp * (mask_contains(k, h) ? im : re);
            }
            stem.comps[k] = stem.comps[k] + comp.right_mul(t.coeff);
        }
    }
    return StemFunction::from_poly(std::move(stem));
}

SliceFunction slice_from_polynomial(const QPolynomial& P) {
    return SliceFunction(poly_to_stem(P), std::make_shared<const QPolynomial>(P));
}

PolyMap real_coordinate_map(int n, int h) {
    const int nv = RealCoords::count(n);
    PolyMap m = PolyMap::variable(nv, RealCoords::alpha(h));
    m = m + PolyMap::variable(nv, RealCoords::beta(h)).left_mul(Quaternion::unit_i());
    m = m + PolyMap::variable(nv, RealCoords::gamma(h)).left_mul(Quaternion::unit_j());
    m = m + PolyMap::variable(nv, RealCoords::delta(h)).left_mul(Quaternion::unit_k());
    return m;
}

PolyMap real_conj_coordinate_map(int n, int h) {
    const int nv = RealCoords::count(n);
    PolyMap m = PolyMap::variable(nv, RealCoords::alpha(h));
    m = m - PolyMap::variable(nv, RealCoords::beta(h)).left_mul(Quaternion::unit_i());
    m = m - PolyMap::variable(nv, RealCoords::gamma(h)).left_mul(Quaternion::unit_j());
    m = m - PolyMap::variable(nv, RealCoords::delta(h)).left_mul(Quaternion::unit_k());
    return m;
}

std::vector<double> real_coords_of(const QPoint& x) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(x.n()) * 4);
    for (const auto& q : x.coords) {
        out.push_back(q.w);
        out.push_back(q.x);
        out.push_back(q.y);
        out.push_back(q.z);
    }
    return out;
}

namespace {

PolyMap real_power_map(int n, int h, int m) {
    PolyMap acc = PolyMap::constant(RealCoords::count(n), Quaternion::real(1.0));
    const PolyMap coord = real_coordinate_map(n, h);
    for (int t = 0; t < m; ++t) acc = acc * coord;
    return acc;
}

// zt_k(x_h) over the real coordinates: the recurrence with
// beta^2 -> beta_h^2 + gamma_h^2 + delta_h^2
PolyMap zonal_real_map(int n, int h, int k) {
    const int nv = RealCoords::count(n);
    if (k == -1) return PolyMap(nv);
    const PolyMap a = PolyMap::variable(nv, RealCoords::alpha(h));
    PolyMap norm_sq = a * a;
    for (int c = 1; c <= 3; ++c) {
        const PolyMap v = PolyMap::variable(nv, RealCoords::alpha(h) + c);
        norm_sq = norm_sq + v * v;
    }
    PolyMap prev(nv);                                              // s_{-1}
    PolyMap cur = PolyMap::constant(nv, Quaternion::real(1.0));    // s_0
    for (int m = 1; m <= k; ++m) {
        PolyMap next = a.scaled(2.0) * cur - norm_sq * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

PolyMap to_real_poly_map(const QPolynomial& P) {
    const int n = P.nvars();
    PolyMap acc(RealCoords::count(n));
    for (const auto& t : P.terms()) {
        PolyMap term = PolyMap::constant(RealCoords::count(n), Quaternion::real(1.0));
        for (int h = 1; h <= n; ++h) {
            const int a = t.alpha[static_cast<std::size_t>(h - 1)];
            if (a > 0) term = term * real_power_map(n, h, a);
        }
        acc = acc + term.right_mul(t.coeff);
    }
    return acc;
}

PolyMap to_real_poly_map(const QComponentExpr& expr) {
    const int n = expr.n;
    PolyMap acc(RealCoords::count(n));
    for (const auto& t : expr.terms) {
        PolyMap term = PolyMap::constant(RealCoords::count(n), Quaternion::real(1.0));
        for (const auto& zf : t.zonals) term = term * zonal_real_map(n, zf.var, zf.degree);
        for (const auto& [var, exp] : t.monomials) term = term * real_power_map(n, var, exp);
        acc = acc + term.right_mul(t.coeff);
    }
    return acc;
}

}  // namespace almansi
