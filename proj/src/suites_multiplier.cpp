#include <algorithm>
#include <cmath>

#include "suite_util.hpp"
#include "vvfm/frames.hpp"
#include "vvfm/multiplier.hpp"
#include "vvfm/norms.hpp"
#include "vvfm/random.hpp"

namespace vvfm {
namespace {

using detail::safe_ratio;

// Profiles live on |eta| < 3/4; half-width 2 leaves room for the Bessel tails.
constexpr double kProfileHalfWidth = 2.0;

ExperimentReport start(const ExperimentConfig& c) {
    ExperimentReport rep;
    rep.suite = c.suite;
    rep.config = c;
    rep.notes.push_back("multiplier model: " + c.multiplier +
                        (c.multiplier == "random" ? " (envelope a = " + std::to_string(c.envelope) + ")" : ""));
    return rep;
}

double radial(std::span<const double> x) { return x.size() == 1 ? std::abs(x[0]) : std::hypot(x[0], x[1]); }

SampledFunction draw_profile(const ExperimentConfig& c, const GridSpec& pg, TrialRng& rng) {
    if (c.multiplier == "identity")
        return SampledFunction::from_function(pg, [](std::span<const double> e) { return cplx(PsiFamily::psi0_hat(radial(e))); });
    if (c.multiplier == "zero") return SampledFunction::zeros(pg);
    return random_profile(pg, c.envelope, c.cutoff, rng);
}

// f(2^j x) on the torus with n 2^j points per axis: an exact index map.
SampledFunction dilate(const SampledFunction& f, int j) {
    const GridSpec& g0 = f.grid();
    const std::size_t n0 = g0.n();
    const GridSpec gk(g0.dim(), n0 << j, g0.half_width());
    const std::size_t shift = ((std::size_t{1} << j) - 1) * (n0 / 2) % n0;
    auto src = [&](std::size_t i) { return (i + n0 - shift % n0) % n0; };
    std::vector<cplx> out(gk.size());
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        const auto idx = gk.unflatten(flat);
        out[flat] = g0.dim() == 1 ? f[src(idx[0])] : f[g0.flatten(src(idx[0]), src(idx[1]))];
    }
    return SampledFunction(gk, std::move(out));
}

MultiplierFamily draw_family(const ExperimentConfig& c, const GridSpec& g, TrialRng& rng) {
    MultiplierFamily M(g, matching_profile_grid(g, c.kmax, kProfileHalfWidth), c.kmin, c.kmax);
    for (int k = c.kmin; k <= c.kmax; ++k) M.set_profile(k, draw_profile(c, M.profile_grid(), rng));
    M.certify_support();
    return M;
}

}  // namespace

ExperimentReport run_lemma61_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    const GridSpec g0(c.dim, c.n, c.half_width);
    const GridSpec pg = matching_profile_grid(g0, c.kmax, kProfileHalfWidth);

    // Ratio at scale k for the dyadic rescaling (P(2^-k .), f0(2^{k-kmin} .)).
    auto ratio_at = [&](const SampledFunction& profile, double normaliser, const SampledFunction& f0, int k) {
        const auto fk = dilate(f0, k - c.kmin);
        MultiplierFamily M(fk.grid(), pg, k, k);
        M.set_profile(k, profile);
        const auto out = apply_symbol(fk, M.symbol(k));
        return safe_ratio(lp_norm(out, c.p), normaliser * lp_norm(fk, c.p));
    };

    std::vector<double> fine;
    double spread = 0.0;
    TrendSeries by_k{"ensemble_max_by_k", "k", {}, {}};
    std::vector<double> kmax_ratio(static_cast<std::size_t>(c.kmax - c.kmin + 1), 0.0);
    for (int t = 0; t < c.trials; ++t) {
        TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
        const auto profile = draw_profile(c, pg, rng);
        const double normaliser = sobolev_norm(profile, c.s, c.r);
        TrialRng frng(c.seed ^ 0xf00dULL, static_cast<std::uint64_t>(t));
        const double radius = std::ldexp(1.0, c.kmin - 2);
        const auto f0 = random_band_limited(g0, radius, frng);
        double lo = kInfinity, hi = 0.0;
        for (int k = c.kmin; k <= c.kmax; ++k) {
            const double r = ratio_at(profile, normaliser, f0, k);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            auto& slot = kmax_ratio[static_cast<std::size_t>(k - c.kmin)];
            slot = std::max(slot, r);
            if (k == c.kmin) rep.ratios.push_back(r);
        }
        if (hi > 0.0) spread = std::max(spread, (hi - lo) / hi);

        TrialRng frng_fine(c.seed ^ 0xf00dULL, static_cast<std::uint64_t>(t));
        const auto f0_fine = random_band_limited(GridSpec(c.dim, 2 * c.n, c.half_width), radius, frng_fine);
        fine.push_back(ratio_at(profile, normaliser, f0_fine, c.kmin));
    }
    for (int k = c.kmin; k <= c.kmax; ++k) {
        by_k.x.push_back(k);
        by_k.y.push_back(kmax_ratio[static_cast<std::size_t>(k - c.kmin)]);
    }
    rep.trends.push_back(std::move(by_k));
    rep.summarize();
    rep.metrics["scale_spread"] = spread;
    rep.checks["ratio invariant under dyadic rescaling (1e-6)"] = spread <= 1e-6;
    if (c.trials > 0) {
        RefinementBlock b;
        b.n_coarse = c.n;
        b.n_fine = 2 * c.n;
        b.max_coarse = rep.ensemble_max;
        b.max_fine = detail::max_of(fine);
        b.relative_change = detail::relative_change(b.max_coarse, b.max_fine);
        b.tolerance = 0.10;
        b.stable = b.relative_change <= b.tolerance;
        rep.refinement = b;
        rep.checks["ratios finite"] = detail::all_finite(rep.ratios) && detail::all_finite(fine);
        rep.checks["ensemble max refinement-stable"] = b.stable;
    }
    rep.notes.push_back("ratios are ||m_k^vee * f_k||_p / (||m_k(2^k .)||_{L^r_s} ||f_k||_p) at k = kmin");
    return rep;
}

ExperimentReport run_theorem11_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    detail::with_refinement(rep, c, 0.10, [&](std::size_t n, int t) {
        const GridSpec g(c.dim, n, c.half_width);
        TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
        const auto F = random_field(g, c.kmin, c.kmax, rng);
        const auto M = draw_family(c, g, rng);
        const double lhs = lp_lq_norm(apply_family(M, F), c.p, c.q);
        return safe_ratio(lhs, multiplier_functional(M, c.s, c.r) * lp_lq_norm(F, c.p, c.q));
    });
    rep.notes.push_back("ratios are ||{T_k f_k}||_{L^p(l^q)} / (L^r_s[m] ||{f_k}||_{L^p(l^q)})");
    return rep;
}

ExperimentReport run_theorem12_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    const std::size_t nmu = c.mu.size();
    std::vector<double> per_mu(nmu, 0.0), per_mu_fine(nmu, 0.0);
    std::vector<double> fine;
    auto trial = [&](std::size_t n, int t, std::vector<double>& slots) {
        const GridSpec g(c.dim, n, c.half_width);
        TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
        const auto F = random_field(g, c.kmin, c.kmax, rng);
        const auto M = draw_family(c, g, rng);
        const auto TF = apply_family(M, F);
        const double norm_m = multiplier_functional(M, c.s, c.r);
        double best = 0.0;
        for (std::size_t i = 0; i < nmu; ++i) {
            const double r = safe_ratio(finfty_q_norm(TF, c.q, c.mu[i]), norm_m * finfty_q_norm(F, c.q, c.mu[i]));
            slots[i] = std::max(slots[i], r);
            best = std::max(best, r);
        }
        return best;
    };
    for (int t = 0; t < c.trials; ++t) {
        rep.ratios.push_back(trial(c.n, t, per_mu));
        fine.push_back(trial(2 * c.n, t, per_mu_fine));
    }
    rep.summarize();
    TrendSeries s{"ensemble_max_by_mu", "mu", {}, {}};
    for (std::size_t i = 0; i < nmu; ++i) {
        s.x.push_back(c.mu[i]);
        s.y.push_back(per_mu[i]);
    }
    if (c.trials > 0) {
        const double spread = detail::sweep_spread(per_mu);
        rep.metrics["mu_spread"] = spread;
        rep.checks["ensemble max uniform in mu (15%)"] = spread <= 0.15;
        RefinementBlock b;
        b.n_coarse = c.n;
        b.n_fine = 2 * c.n;
        b.max_coarse = rep.ensemble_max;
        b.max_fine = detail::max_of(fine);
        b.relative_change = detail::relative_change(b.max_coarse, b.max_fine);
        b.tolerance = 0.10;
        b.stable = b.relative_change <= b.tolerance;
        rep.refinement = b;
        rep.checks["ratios finite"] = detail::all_finite(rep.ratios) && detail::all_finite(fine);
        rep.checks["ensemble max refinement-stable"] = b.stable;
    }
    rep.trends.push_back(std::move(s));
    rep.notes.push_back("ratios are max over mu of the F_infty^{0,q} ratio with side <= 2^-mu");
    return rep;
}

ExperimentReport run_corollary13_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    const GridSpec pg(c.dim, c.dim == 1 ? 1024 : 128, 4.0);
    auto symbol_for = [&](TrialRng& rng) -> std::function<cplx(std::span<const double>)> {
        if (c.multiplier == "identity") return [](std::span<const double>) { return cplx(1.0); };
        if (c.multiplier == "zero") return [](std::span<const double>) { return cplx{}; };
        const double beta = 2.0 * rng.uniform() - 1.0;
        const cplx c0 = rng.complex_normal(), c1 = rng.complex_normal();
        return imaginary_power_symbol(beta, c0, c1);
    };
    detail::with_refinement(rep, c, 0.10, [&](std::size_t n, int t) {
        const GridSpec g(c.dim, n, c.half_width);
        const LPFamily lp(g, c.kmin, c.kmax);
        TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
        const auto f = random_band_limited(g, std::ldexp(1.0, c.kmax), rng);
        const auto m = symbol_for(rng);
        const Spectrum fhat = fft_forward(f);
        const Spectrum mhat = Spectrum::from_symbol(g, m);
        std::vector<SampledFunction> lhs, rhs;
        for (int k = c.kmin; k <= c.kmax; ++k) {
            Spectrum piece = fhat * lp.phi_spectrum(k);
            for (auto& v : piece.values()) v *= std::pow(2.0, c.alpha * k);
            rhs.push_back(fft_inverse(piece));
            lhs.push_back(fft_inverse(piece * mhat));
        }
        const double norm_m = localized_hormander_norm(m, lp, pg, c.s, c.r);
        return safe_ratio(lp_lq_norm(lhs, c.p, c.q), norm_m * lp_lq_norm(rhs, c.p, c.q));
    });
    rep.notes.push_back("ratios are ||T_m f||_{F_p^{alpha,q}} / (sup_l ||m(2^l .) phi_hat||_{L^r_s} ||f||_{F_p^{alpha,q}})");
    return rep;
}

}  // namespace vvfm
