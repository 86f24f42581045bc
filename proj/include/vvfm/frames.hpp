#pragma once

#include "vvfm/dyadic.hpp"
#include "vvfm/spectral.hpp"

namespace vvfm {

/// Smooth step: 1 for t <= a, 0 for t >= b, g(b-t)/(g(b-t)+g(t-a)) between,
/// with g(t) = exp(-1/t) for t > 0 and 0 otherwise.
double smooth_step(double t, double a, double b);

/// Littlewood-Paley family built from Phi0_hat(xi) = smooth_step(|xi|, 1, 2).
class LPFamily {
public:
    /// Refuses scale ranges whose top annulus (radius 2^{kmax+1}) passes Nyquist.
    LPFamily(const GridSpec& grid, int kmin, int kmax);

    const GridSpec& grid() const { return grid_; }
    int kmin() const { return kmin_; }
    int kmax() const { return kmax_; }

    static double phi0_hat(double xi_norm);
    /// Phi0_hat(2^-k xi) - Phi0_hat(2^{-k+1} xi).
    static double phi_hat(int k, double xi_norm);
    /// The annulus profile phi_hat = phi_hat(0, .).
    static double phi_profile(double xi_norm) { return phi_hat(0, xi_norm); }

    const Spectrum& phi0_spectrum() const { return phi0_; }
    Spectrum phi_spectrum(int k) const;
    /// Sum over the family's scales of phi_hat_k on the grid.
    Spectrum partition_sum() const;
    /// Largest |sum_k phi_hat_k - 1| over grid frequencies with 2^kmin <= |xi| <= 2^{kmax-1}.
    double partition_error() const;

private:
    GridSpec grid_;
    int kmin_;
    int kmax_;
    Spectrum phi0_;
};

/// Inner radius 1/2 and outer radius 3/4: Psi0_hat = 1 on |xi| <= 1/2 and
/// vanishes for |xi| >= 3/4, so supp Psi0_hat sits inside the unit ball.
inline constexpr double kPsiInner = 0.5;
inline constexpr double kPsiOuter = 0.75;

class PsiFamily {
public:
    /// Refuses ranges with 2^kmax above Nyquist.
    PsiFamily(const GridSpec& grid, int kmin, int kmax);

    const GridSpec& grid() const { return grid_; }
    int kmin() const { return kmin_; }
    int kmax() const { return kmax_; }

    static double psi0_hat(double xi_norm);
    static double psi_hat(int k, double xi_norm);

    const Spectrum& psi0_spectrum() const { return psi0_; }
    /// Psi_k_hat(xi) = Psi0_hat(2^-k xi).
    Spectrum psi_spectrum(int k) const;
    /// Psi_k(x) = 2^{kd} Psi0(2^k x), synthesised on the grid.
    SampledFunction psi_function(int k) const;

    void require_scale(int k) const;

private:
    GridSpec grid_;
    int kmin_;
    int kmax_;
    Spectrum psi0_;
};

/// Psi^Q(x) = |Q|^{1/2} Psi_k(x - x_Q), translated spectrally.
SampledFunction psi_translate(const PsiFamily& fam, const DyadicCube& q);

}  // namespace vvfm
