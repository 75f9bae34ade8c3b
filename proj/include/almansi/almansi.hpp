#pragma once

// The 2^n decompositions of a slice function: components obtained by slice
// multiplication with ordered coordinate monomials followed by the joint
// spherical derivative, their explicit evaluation, reconstruction in slice
// and ordered-pointwise form, and the iterated-CRF route for polynomial
// inputs.

#include <map>

#include "almansi/index_set.hpp"
#include "almansi/quaternion.hpp"
#include "almansi/slice.hpp"
#include "almansi/stem.hpp"

namespace almansi {

// component S(H,K) of f: slice-multiply by x_K on the left, then take the
// spherical derivative over H; S(empty, empty) is f itself. K subset of H.
SliceFunction almansi_component(const SliceFunction& f, IndexSet H, IndexSet K);
StemFunction almansi_component_stem(const StemFunction& F, IndexSet H, IndexSet K);

// direct evaluation of the explicit component formula
//   sum over T in H^c of e_T ( sum over L subset K of
//     alpha_{K\L} * beta_{H\L}^-1 * F_{(T u H)\L}(z) );
// requires beta_h != 0 for h in H
StemValue almansi_component_explicit(const StemFunction& F, IndexSet H, IndexSet K,
                                     const ComplexPoint& z);

struct AlmansiDecomposition {
    IndexSet H;
    std::map<Mask, SliceFunction> components;  // K -> S(H,K)
    SliceFunction source;
    // K -> stem of conj(x)_{H\K} (.) S(H,K), for slice-mode reconstruction
    std::map<Mask, StemFunction> term_stems;
};

AlmansiDecomposition almansi_decompose(const SliceFunction& f, IndexSet H);

enum class ReconstructMode { Slice, OrderedPointwise };

// sum over K subset H of (-1)^|H\K| conj(x)_{H\K} (.) S(H,K)(x); the ordered
// mode replaces the slice product with the pointwise product, which is valid
// only for H = {1,...,m}
Quaternion almansi_reconstruct(const AlmansiDecomposition& dec, const QPoint& x,
                               ReconstructMode mode);

// ordered component S(m,K) via iterated CRF operators,
//   (-1)^m delbar_m ( x_m^[m in K] ... delbar_1 ( x_1^[1 in K] f ) ... ),
// evaluated exactly; requires f to carry its generating polynomial
Quaternion crf_component(const SliceFunction& f, int m, IndexSet K, const QPoint& x);

}  // namespace almansi
