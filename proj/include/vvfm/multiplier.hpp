#pragma once

#include <functional>

#include "vvfm/fields.hpp"
#include "vvfm/frames.hpp"
#include "vvfm/multiplier_family.hpp"

namespace vvfm {

/// {(m_k f_k_hat)^vee}: one spectral product per scale. Every populated scale
/// of F needs an m_k.
VectorField apply_family(const MultiplierFamily& M, const VectorField& F);

/// m_k -> m_k Psi_k_hat, i.e. each profile times Psi0_hat; certifies the support.
MultiplierFamily support_normalize(const MultiplierFamily& M, const PsiFamily& psi);

/// sup_l ||m(2^l .) phi_hat||_{L^r_s} for a symbol sampled on the signal grid.
/// Scale l reads the samples of m in the annulus around 2^l, so its profile
/// lives on a grid of n points with half-width Nyquist * 2^-l.
double localized_hormander_norm(const Spectrum& m, const LPFamily& lp, double s, double r);

/// Same functional for an analytic symbol, with every profile sampled on
/// `profile_grid`.
double localized_hormander_norm(const std::function<cplx(std::span<const double>)>& m, const LPFamily& lp,
                                const GridSpec& profile_grid, double s, double r);

/// The profile eta -> m(2^l eta) phi_hat(eta) used by the functional above.
SampledFunction localized_profile(const std::function<cplx(std::span<const double>)>& m, int l,
                                  const GridSpec& profile_grid);

/// m(xi) = |xi|^{i beta} (c0 + c1 sgn xi_1), with m(0) = 0.
std::function<cplx(std::span<const double>)> imaginary_power_symbol(double beta, cplx c0, cplx c1);

}  // namespace vvfm
