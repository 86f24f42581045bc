#pragma once

#include <vector>

#include "vvfm/fields.hpp"

namespace vvfm {

/// Coefficients r supported on cubes inside Q0, normalised so that
/// ||g^q(r)||_inf <= |Q0|^{-1/p}.
struct InfinityAtom {
    DyadicCube support;
    CubeCoefficients coefficients;
    double p = 1.0;
    double q = 2.0;
};

/// ||g^q(b)||_{L^inf}, exact on the finest cubes of b.
double gq_sup(const CubeCoefficients& b, double q);

/// Both atom conditions. The size bound is compared with a relative slack of
/// 1e-14, which only absorbs rounding in the q-th power round trip.
bool verify_atom(const InfinityAtom& a);

struct AtomicDecomposition {
    std::vector<double> lambdas;
    std::vector<InfinityAtom> atoms;

    /// (sum_j |lambda_j|^p)^{1/p}.
    double lambda_lp(double p) const;
    /// sum_j lambda_j a_j, coefficientwise.
    CubeCoefficients reconstruct(int dim) const;
};

/// Stopping-time decomposition b = sum_j lambda_j a_j into infinity-atoms for
/// f_p^{0,q}, p in (0, 1], q in [p, inf]. Levels are Omega_j = {g^q(b) > 2^j};
/// each nonzero b_Q joins the bucket (j, J) where j is the largest level with
/// |Q cap Omega_j| > |Q|/2 and J the largest dyadic ancestor of Q with the
/// same density property. Each lambda is a power of two, so the reconstruction
/// is exact in floating point.
AtomicDecomposition decompose_atoms(const CubeCoefficients& b, double p, double q);

}  // namespace vvfm
