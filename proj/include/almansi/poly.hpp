#pragma once

// Right-coefficient quaternionic polynomials, zonal harmonics, the
// closed-form decomposition components (product of zonal factors and
// ordered monomials), and exact expansion into polynomial maps over the 4n
// real coordinates of H^n.

#include <string>
#include <utility>
#include <vector>

#include "almansi/index_set.hpp"
#include "almansi/poly_map.hpp"
#include "almansi/quaternion.hpp"
#include "almansi/slice.hpp"
#include "almansi/stem.hpp"

namespace almansi {

struct QPolyTerm {
    std::vector<int> alpha;  // exponent per variable
    Quaternion coeff;        // right coefficient
};

// sum over terms of x_1^a1 * ... * x_n^an * coeff (ordered product)
class QPolynomial {
public:
    explicit QPolynomial(int n);

    int nvars() const { return n_; }
    const std::vector<QPolyTerm>& terms() const { return terms_; }

    // accumulates into an existing exponent vector; zero coefficients drop
    void add_term(std::vector<int> alpha, const Quaternion& coeff);

    Quaternion eval(const QPoint& x) const;
    int total_degree() const;
    bool has_real_coefficients() const;

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial scaled(double s) const;

    static QPolynomial monomial(int n, std::vector<int> alpha, const Quaternion& coeff);
    static QPolynomial constant(int n, const Quaternion& c);

private:
    int n_;
    std::vector<QPolyTerm> terms_;
};

// (x^a c) (.) (x^b d) = x^(a+b) (c d), extended bilinearly
QPolynomial poly_slice_product(const QPolynomial& p, const QPolynomial& q);

// zt_k = sum_{j<=k} q^j conj(q)^(k-j); real-valued, harmonic, and equal to
// the spherical derivative of the power q^(k+1). Evaluated by the real
// recurrence s_k = 2 Re(q) s_{k-1} - |q|^2 s_{k-2}, s_0 = 1, s_{-1} = 0;
// zt_{-1} = 0.
double zonal_tilde(int k, const Quaternion& q);
double zonal_tilde_ab(int k, double alpha, double beta_sq);

struct ZonalFactor {
    int var;     // 1-based variable
    int degree;  // zt degree, >= 0 (degree -1 terms are dropped entirely)
};

struct ComponentTerm {
    std::vector<ZonalFactor> zonals;            // variables in H, ascending
    std::vector<std::pair<int, int>> monomials; // (variable, exponent), ascending
    Quaternion coeff;
};

// product form of a decomposition component: kept factored for display and
// evaluation, expanded only on demand
struct QComponentExpr {
    int n{0};
    std::vector<ComponentTerm> terms;

    Quaternion eval(const QPoint& x) const;
    std::string to_string() const;
};

// termwise zonal/monomial component of P for the split (H, K), K subset of H
QComponentExpr poly_component_closed_form(const QPolynomial& P, IndexSet H, IndexSet K);

// exact stem of P: F_K = prod_{j in K} Im(z_j^aj) * prod_{j not in K} Re(z_j^aj) * coeff
StemFunction poly_to_stem(const QPolynomial& P);

// slice function carrying both the exact stem and the generating polynomial
SliceFunction slice_from_polynomial(const QPolynomial& P);

// --- real-coordinate maps (4 coordinates per variable) ---

struct RealCoords {
    static int count(int n) { return 4 * n; }
    static int alpha(int h) { return 4 * (h - 1); }
    static int beta(int h) { return 4 * (h - 1) + 1; }
    static int gamma(int h) { return 4 * (h - 1) + 2; }
    static int delta(int h) { return 4 * (h - 1) + 3; }
};

// x_h and conj(x_h) as quaternion-valued coordinate maps
PolyMap real_coordinate_map(int n, int h);
PolyMap real_conj_coordinate_map(int n, int h);

std::vector<double> real_coords_of(const QPoint& x);

PolyMap to_real_poly_map(const QPolynomial& P);
PolyMap to_real_poly_map(const QComponentExpr& expr);

}  // namespace almansi
