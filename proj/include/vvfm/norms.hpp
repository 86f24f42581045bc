#pragma once

#include "vvfm/fields.hpp"
#include "vvfm/multiplier_family.hpp"

namespace vvfm {

/// || ||{f_k(x)}||_{l^q} ||_{L^p}; sup norms are grid maxima. An empty field
/// gives 0 and sets *empty_range when provided.
double lp_lq_norm(const VectorField& F, double p, double q, bool* empty_range = nullptr);

/// sup over dyadic P with side <= 2^-mu (down to one grid cell) of
/// ((1/|P|) int_P sum_{k >= -log2 side(P)} |f_k|^q)^{1/q}, k capped at kmax.
double finfty_q_norm(const VectorField& F, double q, int mu);

/// The same two functionals on arbitrary per-scale arrays (component i is
/// scale kmin + i), e.g. maximal functions of a field, which are not band-limited.
double lp_lq_norm(std::span<const SampledFunction> components, double p, double q);
double finfty_q_norm(std::span<const SampledFunction> components, int kmin, double q, int mu);

/// g^q(b)(x) = || { |b_Q| |Q|^{-1/2} chi_Q(x) } ||_{l^q} sampled on a grid.
SampledFunction gq_function(const CubeCoefficients& b, double q, const GridSpec& grid);

/// ||g^q(b)||_{L^p}, evaluated exactly on the finest cubes of b (no grid).
double fpq_discrete_norm(const CubeCoefficients& b, double p, double q);
/// Same quantity by grid quadrature of gq_function.
double fpq_discrete_norm(const CubeCoefficients& b, double p, double q, const GridSpec& grid);

/// sup over P with side <= 2^-mu of ((1/|P|) sum_{Q in P} (|b_Q||Q|^{-1/2})^q |Q|)^{1/q};
/// integer-indexed summation only.
double finfty_discrete_norm(const CubeCoefficients& b, double q, int mu);
/// Same quantity from grid averages of the painted per-scale functions.
double finfty_discrete_norm_quadrature(const CubeCoefficients& b, double q, int mu, const GridSpec& grid);

/// ||(I - Delta)^{s/2} f||_{L^r}.
double sobolev_norm(const SampledFunction& f, double s, double r);

/// ||m||_{L^{r0}_s} / (B^{d/r0 - d/r1} ||m||_{L^{r1}_s}) for m supported in |x| <= B:
/// the constant of the compact-support embedding. Refuses m with samples beyond B.
double embedding_ratio(const SampledFunction& m, double B, double s, double r0, double r1);

/// sup_l ||m_l(2^l .)||_{L^r_s} over the scales of the family.
double multiplier_functional(const MultiplierFamily& M, double s, double r);

/// {2^{alpha k} f_k}: reduces the alpha-weighted spaces to the alpha = 0 case.
VectorField alpha_weighted(const VectorField& F, double alpha);

}  // namespace vvfm
