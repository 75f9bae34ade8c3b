#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "almansi/integral.hpp"
#include "almansi/poly.hpp"
#include "almansi/slice.hpp"

using namespace almansi;

namespace {

QPoint random_point(Rng& rng, int n, double beta_lo = 0.1, double beta_hi = 2.0) {
    QPoint x;
    for (int h = 0; h < n; ++h)
        x.coords.push_back(Quaternion::real(rng.uniform(-1.0, 1.0)) +
                           rng.random_unit_imaginary() * rng.uniform(beta_lo, beta_hi));
    return x;
}

QPolynomial random_poly(Rng& rng, int n, int max_deg = 4) {
    QPolynomial p(n);
    const int nterms = 1 + static_cast<int>(rng.uniform() * 4);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> alpha(static_cast<std::size_t>(n), 0);
        int total = max_deg + 1;
        while (total > max_deg) {
            total = 0;
            for (int v = 0; v < n; ++v) {
                alpha[static_cast<std::size_t>(v)] = static_cast<int>(rng.uniform() * (max_deg + 1));
                total += alpha[static_cast<std::size_t>(v)];
            }
        }
        p.add_term(alpha, Quaternion(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                                     rng.uniform(-1, 1)));
    }
    return p;
}

}  // namespace

TEST_CASE("evaluation of the product monomial at unit imaginaries") {
    const SliceFunction f(stem_tensor(make_monomial_stem(2, 1), make_monomial_stem(2, 2)));
    QPoint x;
    x.coords = {Quaternion::unit_i(), Quaternion::unit_j()};
    CHECK((f(x) - Quaternion::unit_k()).max_abs() < 1e-15);
}

TEST_CASE("evaluation of constants and the identity coordinate") {
    Rng rng(21);
    const Quaternion a(0.3, -1, 0.5, 2);
    const SliceFunction c(make_constant_stem(2, a));
    CHECK((c(random_point(rng, 2)) - a).max_abs() == 0.0);

    const SliceFunction id(make_monomial_stem(1, 1));
    QPoint x;
    x.coords = {Quaternion(3, 4, 0, 0)};
    CHECK((id(x) - Quaternion(3, 4, 0, 0)).max_abs() < 1e-14);
}

TEST_CASE("slice product of swapped monomials is the reordered pointwise product") {
    Rng rng(22);
    const SliceFunction x1(make_monomial_stem(2, 1));
    const SliceFunction x2bar(make_conj_monomial_stem(2, 2));
    const SliceFunction prod = slice_product(x2bar, x1);
    for (int t = 0; t < 50; ++t) {
        const QPoint x = random_point(rng, 2);
        const Quaternion want = x[1] * x[2].conj();  // operands swap into variable order
        CHECK((prod(x) - want).max_abs() < 1e-12);
    }
}

TEST_CASE("slice product agrees pointwise for same-variable powers and constants") {
    Rng rng(23);
    const SliceFunction x1(make_monomial_stem(1, 1));
    const SliceFunction sq = slice_product(x1, x1);
    for (int t = 0; t < 50; ++t) {
        const QPoint x = random_point(rng, 1);
        CHECK((sq(x) - x[1] * x[1]).max_abs() < 1e-12);
    }
    const Quaternion a(1, 2, 0, 1), b(0, 1, -1, 3);
    const SliceFunction ca(make_constant_stem(1, a));
    const SliceFunction cb(make_constant_stem(1, b));
    CHECK((slice_product(ca, cb)(random_point(rng, 1)) - a * b).max_abs() < 1e-14);
}

TEST_CASE("slice product with a real-coefficient ordered left factor is pointwise") {
    Rng rng(24);
    QPolynomial left(2);
    left.add_term({2, 0}, Quaternion::real(0.7));
    QPolynomial right(2);
    right.add_term({0, 1}, Quaternion(0.2, -1, 0.4, 1));
    const SliceFunction fl = slice_from_polynomial(left);
    const SliceFunction fr = slice_from_polynomial(right);
    const SliceFunction prod = slice_product(fl, fr);
    for (int t = 0; t < 100; ++t) {
        const QPoint x = random_point(rng, 2);
        CHECK((prod(x) - fl(x) * fr(x)).max_abs() <= 1e-11 * (1.0 + prod(x).norm()));
    }
}

TEST_CASE("circularity residual") {
    Rng rng(25);
    const SliceFunction x2(make_monomial_stem(2, 2));
    const QPoint x = random_point(rng, 2);
    CHECK(circularity_residual(x2, 1, x, Quaternion::unit_j()) == 0.0);

    const SliceFunction x1(make_monomial_stem(2, 1));
    QPoint p;
    p.coords = {Quaternion::unit_i(), Quaternion(1, 0, 0, 0)};
    CHECK(circularity_residual(x1, 1, p, Quaternion::unit_j()) ==
          doctest::Approx(std::sqrt(2.0)));

    // the order-one component 2 a1 x2 of x1 x2 is circular in x1
    const StemFunction F = stem_tensor(make_monomial_stem(2, 1), make_monomial_stem(2, 2));
    const StemFunction comp = stem_spherical_derivative(
        stem_tensor(make_monomial_stem(2, 1), F), IndexSet::of({1}, 2));
    const SliceFunction g(comp);
    for (int t = 0; t < 20; ++t)
        CHECK(circularity_residual(g, 1, random_point(rng, 2), rng.random_unit_imaginary()) <=
              1e-12);
}

TEST_CASE("circularity residual validates jprime") {
    Rng rng(26);
    const SliceFunction x1(make_monomial_stem(1, 1));
    CHECK_THROWS_AS(
        (void)circularity_residual(x1, 1, random_point(rng, 1), Quaternion(1, 1, 0, 0)),
        std::domain_error);
}

TEST_CASE("sliceness check on exact supports") {
    QPolynomial p12(2);
    p12.add_term({1, 1}, Quaternion::real(1.0));  // x1 x2
    const StemFunction f12 = poly_to_stem(p12);
    CHECK_FALSE(sliceness_check(f12, IndexSet::of({2}, 2), StemShape::Slice));
    CHECK(sliceness_check(f12, IndexSet::of({1}, 2), StemShape::Slice));

    QPolynomial p2(2);
    p2.add_term({0, 3}, Quaternion::real(1.0));  // x2^3
    const StemFunction f2 = poly_to_stem(p2);
    CHECK(sliceness_check(f2, IndexSet::of({2}, 2), StemShape::Slice));
    CHECK_FALSE(sliceness_check(f2, IndexSet::of({2}, 2), StemShape::Circular));
    CHECK(sliceness_check(f2, IndexSet::of({1}, 2), StemShape::Circular));

    // 2 a1 x2 is circular w.r.t. x1
    const StemFunction comp = stem_spherical_derivative(
        stem_tensor(make_monomial_stem(2, 1), poly_to_stem(p12)), IndexSet::of({1}, 2));
    CHECK(sliceness_check(comp, IndexSet::of({1}, 2), StemShape::Circular));
}

TEST_CASE("sliceness check requires known support") {
    const StemFunction derived =
        stem_spherical_value(stem_tensor(make_exp_stem(2, 1), make_monomial_stem(2, 2)),
                             IndexSet::of({1}, 2));
    CHECK_THROWS_AS((void)sliceness_check(derived, IndexSet::of({1}, 2), StemShape::Slice),
                    CapabilityError);
}

TEST_CASE("representation formula at the slice level") {
    Rng rng(27);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + static_cast<int>(rng.uniform() * 3);
        const QPolynomial p = random_poly(rng, n);
        const SliceFunction f = slice_from_polynomial(p);
        for (int h = 1; h <= n; ++h) {
            const IndexSet hs = IndexSet::of({h}, n);
            const SliceFunction sval(stem_spherical_value(f.stem(), hs));
            const SliceFunction im_times_der(
                stem_tensor(make_im_stem(n, h), stem_spherical_derivative(f.stem(), hs)));
            for (int pt = 0; pt < 25; ++pt) {
                const QPoint x = random_point(rng, n);
                const Quaternion lhs = f(x);
                const Quaternion rhs = sval(x) + im_times_der(x);
                CHECK((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()));
            }
        }
    }
}

TEST_CASE("spherical derivatives are circular in their variables") {
    Rng rng(28);
    for (int t = 0; t < 20; ++t) {
        const int n = 2;
        const QPolynomial p = random_poly(rng, n);
        const StemFunction d = stem_spherical_derivative(poly_to_stem(p), IndexSet::full(n));
        const SliceFunction g(d);
        for (int pt = 0; pt < 10; ++pt) {
            const QPoint x = random_point(rng, n);
            for (int h = 1; h <= n; ++h)
                CHECK(circularity_residual(g, h, x, rng.random_unit_imaginary()) <=
                      1e-11 * (1.0 + g(x).norm()));
        }
    }
}
