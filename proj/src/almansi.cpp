#include "almansi/almansi.hpp"

#include <stdexcept>

#include "almansi/calculus.hpp"
#include "almansi/poly.hpp"

namespace almansi {

namespace {

void check_hk(int n, IndexSet H, IndexSet K) {
    if (H.n != n || K.n != n) throw std::domain_error("almansi: index set arity mismatch");
    if (!K.subset_of(H)) throw std::domain_error("almansi: K must be a subset of H");
}

// ordered tensor of coordinate monomial stems over `mask` (ascending)
StemFunction monomial_product_stem(int n, Mask mask, bool conjugated) {
    StemFunction acc = make_constant_stem(n, Quaternion::real(1.0));
    for (int h = 1; h <= n; ++h) {
        if (!mask_contains(mask, h)) continue;
        StemFunction z = conjugated ? make_conj_monomial_stem(n, h) : make_monomial_stem(n, h);
        acc = stem_tensor(acc, z);
    }
    return acc;
}

}  // namespace

StemFunction almansi_component_stem(const StemFunction& F, IndexSet H, IndexSet K) {
    check_hk(F.nvars(), H, K);
    if (H.bits == 0) return F;
    StemFunction g = F;
    if (K.bits != 0) g = stem_tensor(monomial_product_stem(F.nvars(), K.bits, false), F);
    return stem_spherical_derivative(g, H);
}

SliceFunction almansi_component(const SliceFunction& f, IndexSet H, IndexSet K) {
    return SliceFunction(almansi_component_stem(f.stem(), H, K));
}

StemValue almansi_component_explicit(const StemFunction& F, IndexSet H, IndexSet K,
                                     const ComplexPoint& z) {
    check_hk(F.nvars(), H, K);
    const int n = F.nvars();
    for (int h : H.members()) {
        if (z.beta(h) == 0.0)
            throw SingularPointError("almansi_component_explicit: beta_" + std::to_string(h) +
                                     " = 0");
    }
    const StemValue v = F(z);
    StemValue out(n);
    const Mask hc = mask_full(n) & ~H.bits;
    for (Mask t : subsets_of(hc)) {
        Quaternion acc;
        for (Mask l : subsets_of(K.bits)) {
            double coef = 1.0;
            for (int j = 1; j <= n; ++j) {
                if (mask_contains(K.bits & ~l, j)) coef *= z.alpha(j);
                if (mask_contains(H.bits & ~l, j)) coef /= z.beta(j);
            }
            acc += v[(t | H.bits) & ~l] * coef;
        }
        out[t] = acc;
    }
    return out;
}

AlmansiDecomposition almansi_decompose(const SliceFunction& f, IndexSet H) {
    if (H.n != f.nvars()) throw std::domain_error("almansi_decompose: index set arity mismatch");
    AlmansiDecomposition dec;
    dec.H = H;
    dec.source = f;
    for (Mask k : subsets_of(H.bits)) {
        const IndexSet K(k, H.n);
        SliceFunction comp = almansi_component(f, H, K);
        const Mask rest = H.bits & ~k;
        StemFunction term = (rest == 0)
                                ? comp.stem()
                                : stem_tensor(monomial_product_stem(f.nvars(), rest, true),
                                              comp.stem());
        dec.term_stems.emplace(k, std::move(term));
        dec.components.emplace(k, std::move(comp));
    }
    return dec;
}

Quaternion almansi_reconstruct(const AlmansiDecomposition& dec, const QPoint& x,
                               ReconstructMode mode) {
    if (x.n() != dec.source.nvars())
        throw std::domain_error("almansi_reconstruct: point arity mismatch");
    if (mode == ReconstructMode::OrderedPointwise && !dec.H.is_interval())
        throw std::domain_error("almansi_reconstruct: ordered mode requires H = {1,...,m}");

    Quaternion acc;
    for (const auto& [k, comp] : dec.components) {
        const Mask rest = dec.H.bits & ~k;
        const double sign = (mask_size(rest) & 1) ? -1.0 : 1.0;
        if (mode == ReconstructMode::Slice) {
            acc += SliceFunction(dec.term_stems.at(k))(x) * sign;
        } else {
            Quaternion left = Quaternion::real(1.0);
            for (int h = 1; h <= dec.H.n; ++h)
                if (mask_contains(rest, h)) left = left * x[h].conj();
            acc += left * comp(x) * sign;
        }
    }
    return acc;
}

Quaternion crf_component(const SliceFunction& f, int m, IndexSet K, const QPoint& x) {
    const int n = f.nvars();
    if (m < 1 || m > n) throw std::domain_error("crf_component: bad order");
    check_hk(n, IndexSet::interval(m, n), K);
    if (!f.source_poly())
        throw CapabilityError("crf_component: function does not carry a generating polynomial");

    PolyMap M = to_real_poly_map(*f.source_poly());
    for (int h = 1; h <= m; ++h) {
        if (K.contains(h)) M = real_coordinate_map(n, h) * M;
        M = crf_apply(M, h, true);
    }
    if (m & 1) M = M.scaled(-1.0);
    return M.eval(real_coords_of(x));
}

}  // namespace almansi
