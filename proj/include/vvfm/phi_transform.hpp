#pragma once

#include "vvfm/fields.hpp"
#include "vvfm/frames.hpp"

namespace vvfm {

/// U_Q(F) = |Q|^{1/2} f_k(x_Q) for every Q in D_k inside the torus, k in range.
CubeCoefficients analyze(const VectorField& F);

/// V_k(b) = sum_{Q in D_k} b_Q Psi^Q, one spectral convolution per scale of
/// the coefficient comb with Psi_k. The result is tagged A = 1/2 (band 2^k).
VectorField synthesize(const PsiFamily& fam, const CubeCoefficients& b);

/// synthesize(analyze(F)); refuses unless every f_k is band-limited to 2^{k-2}.
VectorField roundtrip(const PsiFamily& fam, const VectorField& F);

/// Riemann sum of sum_k f_k V_k(b) (bilinear, no conjugation).
cplx duality_pairing(const PsiFamily& fam, const VectorField& F, const CubeCoefficients& b);

/// Coefficient side of the duality identity: sum_Q U_Q(F) b_Q.
cplx coefficient_pairing(const VectorField& F, const CubeCoefficients& b);

}  // namespace vvfm
