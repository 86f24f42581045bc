#include "vvfm/multiplier.hpp"

#include <cmath>
#include <sstream>

#include "vvfm/norms.hpp"

namespace vvfm {

VectorField apply_family(const MultiplierFamily& M, const VectorField& F) {
    require_same_grid(M.signal_grid(), F.grid(), "apply_family");
    VectorField out(F.grid(), F.kmin(), F.kmax(), F.band_constant());
    for (int k = F.kmin(); k <= F.kmax(); ++k) {
        if (!M.has_scale(k)) {
            std::ostringstream msg;
            msg << "apply_family: no multiplier for populated scale " << k;
            throw DomainError(msg.str());
        }
        out.set(k, fft_inverse(fft_forward(F[k]) * M.symbol(k)));
    }
    return out;
}

MultiplierFamily support_normalize(const MultiplierFamily& M, const PsiFamily& psi) {
    if (psi.grid().dim() != M.signal_grid().dim()) throw DimensionError("support_normalize: dimension mismatch");
    MultiplierFamily out = M;
    const GridSpec& pg = M.profile_grid();
    std::vector<double> cutoff(pg.size());
    for (std::size_t i = 0; i < cutoff.size(); ++i) cutoff[i] = PsiFamily::psi0_hat(pg.coordinate_norm(i));
    for (int k = M.kmin(); k <= M.kmax(); ++k) {
        const auto src = M.profile(k).samples();
        std::vector<cplx> v(src.begin(), src.end());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= cutoff[i];
        out.set_profile(k, SampledFunction(pg, std::move(v)));
    }
    if (!out.certify_support()) throw DomainError("support_normalize: certification failed");
    return out;
}

double localized_hormander_norm(const Spectrum& m, const LPFamily& lp, double s, double r) {
    const GridSpec& grid = m.grid();
    require_same_grid(grid, lp.grid(), "localized_hormander_norm");
    double best = 0.0;
    for (int l = lp.kmin(); l <= lp.kmax(); ++l) {
        // eta = 2^-l xi: the spectrum samples, re-read on a torus of half-width Nyquist 2^-l.
        const GridSpec pg(grid.dim(), grid.n(), std::ldexp(grid.nyquist(), -l));
        const std::size_t n = grid.n();
        std::vector<cplx> samples(grid.size());
        for (std::size_t flat = 0; flat < samples.size(); ++flat) {
            const auto idx = grid.unflatten(flat);
            const std::size_t a = (idx[0] + n / 2) % n;
            const std::size_t b = grid.dim() == 2 ? (idx[1] + n / 2) % n : 0;
            samples[flat] = m[grid.flatten(a, b)] * LPFamily::phi_profile(pg.coordinate_norm(flat));
        }
        best = std::max(best, sobolev_norm(SampledFunction(pg, std::move(samples)), s, r));
    }
    return best;
}

SampledFunction localized_profile(const std::function<cplx(std::span<const double>)>& m, int l,
                                  const GridSpec& profile_grid) {
    const double scale = std::ldexp(1.0, l);
    return SampledFunction::from_function(profile_grid, [&](std::span<const double> eta) {
        const double phi = LPFamily::phi_profile(eta.size() == 1 ? std::abs(eta[0]) : std::hypot(eta[0], eta[1]));
        if (phi == 0.0) return cplx{};
        std::array<double, 2> x{eta[0] * scale, eta.size() == 2 ? eta[1] * scale : 0.0};
        return m(std::span<const double>(x.data(), eta.size())) * phi;
    });
}

double localized_hormander_norm(const std::function<cplx(std::span<const double>)>& m, const LPFamily& lp,
                                const GridSpec& profile_grid, double s, double r) {
    if (profile_grid.half_width() < 2.0) throw DomainError("localized profile grid must contain the annulus |eta| <= 2");
    double best = 0.0;
    for (int l = lp.kmin(); l <= lp.kmax(); ++l) best = std::max(best, sobolev_norm(localized_profile(m, l, profile_grid), s, r));
    return best;
}

std::function<cplx(std::span<const double>)> imaginary_power_symbol(double beta, cplx c0, cplx c1) {
    return [beta, c0, c1](std::span<const double> xi) {
        const double norm = xi.size() == 1 ? std::abs(xi[0]) : std::hypot(xi[0], xi[1]);
        if (norm == 0.0) return cplx{};
        const double sgn = xi[0] > 0.0 ? 1.0 : (xi[0] < 0.0 ? -1.0 : 0.0);
        return std::polar(1.0, beta * std::log(norm)) * (c0 + c1 * sgn);
    };
}

}  // namespace vvfm
