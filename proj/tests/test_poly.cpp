#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "almansi/integral.hpp"
#include "almansi/poly.hpp"

using namespace almansi;

namespace {

QPoint random_point(Rng& rng, int n, double beta_lo = 0.1, double beta_hi = 2.0) {
    QPoint x;
    for (int h = 0; h < n; ++h)
        x.coords.push_back(Quaternion::real(rng.uniform(-1.0, 1.0)) +
                           rng.random_unit_imaginary() * rng.uniform(beta_lo, beta_hi));
    return x;
}

}  // namespace

TEST_CASE("zonal values") {
    const Quaternion q(0.8, 0.1, -0.5, 0.3);
    const double b2 = q.x * q.x + q.y * q.y + q.z * q.z;
    CHECK(zonal_tilde(-1, q) == 0.0);
    CHECK(zonal_tilde(0, q) == 1.0);
    CHECK(zonal_tilde(1, q) == doctest::Approx(2.0 * q.w));
    CHECK(zonal_tilde(2, q) == doctest::Approx(3.0 * q.w * q.w - b2));
    CHECK(zonal_tilde(3, q) == doctest::Approx(4.0 * q.w * (q.w * q.w - b2)));
}

TEST_CASE("zonal equals the power sum of conjugate pairs") {
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const Quaternion q(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                           rng.uniform(-1, 1));
        for (int k = 0; k <= 6; ++k) {
            Quaternion sum;
            for (int j = 0; j <= k; ++j) sum += qpow(q, j) * qpow(q.conj(), k - j);
            CHECK(sum.im_norm() < 1e-12);
            CHECK(std::fabs(sum.w - zonal_tilde(k, q)) <= 1e-12 * (1.0 + std::fabs(sum.w)));
        }
    }
}

TEST_CASE("zonal is J-independent") {
    Rng rng(32);
    for (int t = 0; t < 100; ++t) {
        const double alpha = rng.uniform(-1, 1);
        const double beta = rng.uniform(0.1, 2.0);
        const double ref = zonal_tilde_ab(5, alpha, beta * beta);
        const Quaternion q = Quaternion::real(alpha) + rng.random_unit_imaginary() * beta;
        CHECK(std::fabs(zonal_tilde(5, q) - ref) <= 1e-13 * (1.0 + std::fabs(ref)));
    }
}

TEST_CASE("zonal equals the spherical derivative of the next power") {
    Rng rng(33);
    for (int k = 0; k <= 8; ++k) {
        QPolynomial p(1);
        p.add_term({k + 1}, Quaternion::real(1.0));
        const StemFunction d = stem_spherical_derivative(poly_to_stem(p), IndexSet::full(1));
        for (int t = 0; t < 30; ++t) {
            const QPoint x = random_point(rng, 1);
            const Quaternion got = SliceFunction(d)(x);
            const double want = zonal_tilde(k, x[1]);
            CHECK((got - Quaternion::real(want)).norm() <= 1e-10 * (1.0 + std::fabs(want)));
        }
    }
}

TEST_CASE("closed form components of the paper cases") {
    QPolynomial p(2);
    p.add_term({1, 1}, Quaternion::real(1.0));  // x1 x2
    Rng rng(34);
    const QPoint x = random_point(rng, 2);
    const double a1 = x[1].w;
    const double a2 = x[2].w;

    const QComponentExpr full =
        poly_component_closed_form(p, IndexSet::full(2), IndexSet::full(2));
    CHECK(full.eval(x).w == doctest::Approx(4.0 * a1 * a2));

    const QComponentExpr k2 =
        poly_component_closed_form(p, IndexSet::full(2), IndexSet::of({2}, 2));
    CHECK(k2.eval(x).w == doctest::Approx(2.0 * a2));

    QPolynomial cube(1);
    cube.add_term({3}, Quaternion::real(1.0));
    const QComponentExpr zt2 =
        poly_component_closed_form(cube, IndexSet::full(1), IndexSet::empty(1));
    const double b2 = x[1].x * x[1].x + x[1].y * x[1].y + x[1].z * x[1].z;
    CHECK(zt2.eval(QPoint({x[1]})).w == doctest::Approx(3.0 * a1 * a1 - b2));
}

TEST_CASE("component expressions print the factored form") {
    QPolynomial p(2);
    p.add_term({1, 1}, Quaternion::real(1.0));
    CHECK(poly_component_closed_form(p, IndexSet::of({1}, 2), IndexSet::of({1}, 2)).to_string() ==
          "2*a1*x2");
    CHECK(poly_component_closed_form(p, IndexSet::of({1}, 2), IndexSet::empty(2)).to_string() ==
          "x2");
    CHECK(poly_component_closed_form(p, IndexSet::full(2), IndexSet::full(2)).to_string() ==
          "2*a1*2*a2");
    QPolynomial cube(1);
    cube.add_term({3}, Quaternion::real(1.0));
    CHECK(poly_component_closed_form(cube, IndexSet::full(1), IndexSet::empty(1)).to_string() ==
          "Zt2(x1)");
    QPolynomial c(1);
    c.add_term({0}, Quaternion::real(2.5));
    CHECK(poly_component_closed_form(c, IndexSet::full(1), IndexSet::empty(1)).to_string() == "0");
}

TEST_CASE("polynomial stems") {
    {
        QPolynomial p(1);
        p.add_term({1}, Quaternion::real(1.0));
        const StemFunction f = poly_to_stem(p);
        ComplexPoint z;
        z.coords.emplace_back(0.4, 1.2);
        const StemValue v = f(z);
        CHECK(v[0].w == doctest::Approx(0.4));
        CHECK(v[1].w == doctest::Approx(1.2));
    }
    {
        QPolynomial p(1);
        p.add_term({2}, Quaternion::real(1.0));
        const StemFunction f = poly_to_stem(p);
        ComplexPoint z;
        z.coords.emplace_back(0.4, 1.2);
        const StemValue v = f(z);
        CHECK(v[0].w == doctest::Approx(0.4 * 0.4 - 1.2 * 1.2));
        CHECK(v[1].w == doctest::Approx(2 * 0.4 * 1.2));
    }
    {
        QPolynomial p(2);
        p.add_term({1, 1}, Quaternion::unit_j());
        const StemFunction f = poly_to_stem(p);
        ComplexPoint z;
        z.coords.emplace_back(0.3, 0.9);
        z.coords.emplace_back(-0.2, 1.7);
        const StemValue v = f(z);
        // components of x1 x2, right-multiplied by j
        CHECK((v[0b00] - Quaternion::real(0.3 * -0.2) * Quaternion::unit_j()).max_abs() < 1e-15);
        CHECK((v[0b11] - Quaternion::real(0.9 * 1.7) * Quaternion::unit_j()).max_abs() < 1e-15);
    }
}

TEST_CASE("polynomial stem evaluation matches ordered pointwise evaluation") {
    Rng rng(35);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng.uniform() * 3);
        QPolynomial p(n);
        for (int term = 0; term < 3; ++term) {
            std::vector<int> alpha(static_cast<std::size_t>(n), 0);
            int total = 5;
            while (total > 4) {
                total = 0;
                for (int v = 0; v < n; ++v) {
                    alpha[static_cast<std::size_t>(v)] = static_cast<int>(rng.uniform() * 5);
                    total += alpha[static_cast<std::size_t>(v)];
                }
            }
            p.add_term(alpha, Quaternion(rng.uniform(-1, 1), rng.uniform(-1, 1),
                                         rng.uniform(-1, 1), rng.uniform(-1, 1)));
        }
        const SliceFunction f = slice_from_polynomial(p);
        for (int pt = 0; pt < 10; ++pt) {
            const QPoint x = random_point(rng, n);
            const Quaternion via_stem = f(x);
            const Quaternion direct = p.eval(x);
            CHECK((via_stem - direct).norm() <= 1e-11 * (1.0 + direct.norm()));
        }
    }
}

TEST_CASE("slice product of polynomials") {
    QPolynomial pi(1);
    pi.add_term({1}, Quaternion::unit_i());
    QPolynomial pj(1);
    pj.add_term({1}, Quaternion::unit_j());
    const QPolynomial prod = poly_slice_product(pi, pj);
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.terms()[0].alpha == std::vector<int>{2});
    CHECK((prod.terms()[0].coeff - Quaternion::unit_k()).max_abs() == 0.0);

    QPolynomial one(1);
    one.add_term({0}, Quaternion::real(1.0));
    const QPolynomial same = poly_slice_product(pi, one);
    CHECK(same.terms().size() == 1);
    CHECK((same.terms()[0].coeff - Quaternion::unit_i()).max_abs() == 0.0);

    QPolynomial x1(2), x2(2);
    x1.add_term({1, 0}, Quaternion::real(1.0));
    x2.add_term({0, 1}, Quaternion::real(1.0));
    const QPolynomial p12 = poly_slice_product(x1, x2);
    REQUIRE(p12.terms().size() == 1);
    CHECK(p12.terms()[0].alpha == (std::vector<int>{1, 1}));
}

TEST_CASE("slice product of polynomials agrees with the stem route") {
    Rng rng(36);
    for (int t = 0; t < 40; ++t) {
        const int n = 2;
        QPolynomial a(n), b(n);
        a.add_term({static_cast<int>(rng.uniform() * 3), static_cast<int>(rng.uniform() * 3)},
                   Quaternion(rng.uniform(-1, 1), rng.uniform(-1, 1), 0, rng.uniform(-1, 1)));
        b.add_term({static_cast<int>(rng.uniform() * 3), static_cast<int>(rng.uniform() * 3)},
                   Quaternion(rng.uniform(-1, 1), 0, rng.uniform(-1, 1), rng.uniform(-1, 1)));
        const SliceFunction via_poly = slice_from_polynomial(poly_slice_product(a, b));
        const SliceFunction via_stem(stem_tensor(poly_to_stem(a), poly_to_stem(b)));
        for (int pt = 0; pt < 10; ++pt) {
            const QPoint x = random_point(rng, n);
            CHECK((via_poly(x) - via_stem(x)).norm() <= 1e-11 * (1.0 + via_poly(x).norm()));
        }
    }
}

TEST_CASE("real coordinate expansion of the square") {
    QPolynomial p(1);
    p.add_term({2}, Quaternion::real(1.0));
    const PolyMap m = to_real_poly_map(p);
    const int nv = RealCoords::count(1);
    const PolyMap a = PolyMap::variable(nv, RealCoords::alpha(1));
    const PolyMap b = PolyMap::variable(nv, RealCoords::beta(1));
    const PolyMap g = PolyMap::variable(nv, RealCoords::gamma(1));
    const PolyMap d = PolyMap::variable(nv, RealCoords::delta(1));
    PolyMap want = a * a - b * b - g * g - d * d;
    want = want + (a * b).scaled(2.0).left_mul(Quaternion::unit_i());
    want = want + (a * g).scaled(2.0).left_mul(Quaternion::unit_j());
    want = want + (a * d).scaled(2.0).left_mul(Quaternion::unit_k());
    CHECK((m - want).max_abs_coeff() == 0.0);
}

TEST_CASE("real coordinate expansion of a constant") {
    QPolynomial p(2);
    const Quaternion c(1, -2, 3, 4);
    p.add_term({0, 0}, c);
    const PolyMap m = to_real_poly_map(p);
    REQUIRE(m.terms().size() == 1);
    CHECK((m.terms().begin()->second - c).max_abs() == 0.0);
}

TEST_CASE("real maps evaluate like the functions they expand") {
    Rng rng(37);
    for (int t = 0; t < 25; ++t) {
        const int n = 1 + static_cast<int>(rng.uniform() * 3);
        QPolynomial p(n);
        for (int term = 0; term < 3; ++term) {
            std::vector<int> alpha(static_cast<std::size_t>(n), 0);
            int total = 5;
            while (total > 4) {
                total = 0;
                for (int v = 0; v < n; ++v) {
                    alpha[static_cast<std::size_t>(v)] = static_cast<int>(rng.uniform() * 5);
                    total += alpha[static_cast<std::size_t>(v)];
                }
            }
            p.add_term(alpha, Quaternion(rng.uniform(-1, 1), rng.uniform(-1, 1),
                                         rng.uniform(-1, 1), rng.uniform(-1, 1)));
        }
        const PolyMap m = to_real_poly_map(p);
        for (int pt = 0; pt < 40; ++pt) {
            const QPoint x = random_point(rng, n);
            const Quaternion direct = p.eval(x);
            const Quaternion via_map = m.eval(real_coords_of(x));
            CHECK((direct - via_map).norm() <= 1e-12 * (1.0 + direct.norm()));
        }
    }
}

TEST_CASE("degree guard") {
    QPolynomial p(1);
    p.add_term({20}, Quaternion::real(1.0));
    const QPolynomial sq = poly_slice_product(p, p);  // degree 40
    CHECK_THROWS_AS((void)to_real_poly_map(sq), std::domain_error);
}
