#include <algorithm>
#include <cmath>

#include "suite_util.hpp"
#include "vvfm/atoms.hpp"
#include "vvfm/frames.hpp"
#include "vvfm/maximal.hpp"
#include "vvfm/multiplier.hpp"
#include "vvfm/norms.hpp"
#include "vvfm/phi_transform.hpp"
#include "vvfm/random.hpp"

namespace vvfm {
namespace {

using detail::safe_ratio;

ExperimentReport start(const ExperimentConfig& c) {
    ExperimentReport rep;
    rep.suite = c.suite;
    rep.config = c;
    return rep;
}

GridSpec grid_of(const ExperimentConfig& c, std::size_t n) { return GridSpec(c.dim, n, c.half_width); }

double field_max_abs_diff(const VectorField& a, const VectorField& b) {
    double worst = 0.0;
    for (int k = a.kmin(); k <= a.kmax(); ++k)
        for (std::size_t i = 0; i < a.grid().size(); ++i) worst = std::max(worst, std::abs(a[k][i] - b[k][i]));
    return worst;
}

double field_max_abs(const VectorField& a) {
    double worst = 0.0;
    for (int k = a.kmin(); k <= a.kmax(); ++k) worst = std::max(worst, lp_norm(a[k], kInfinity));
    return worst;
}

}  // namespace

ExperimentReport run_partition_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    const LPFamily lp(grid_of(c, c.n), c.kmin, c.kmax);
    const double err = lp.partition_error();
    rep.metrics["partition_error"] = err;
    rep.metrics["band_low"] = std::ldexp(1.0, c.kmin);
    rep.metrics["band_high"] = std::ldexp(1.0, c.kmax - 1);
    rep.checks["sum of phi_hat_k equals 1 on the covered band (1e-10)"] = err <= 1e-10;

    // Error profile along the first axis, one point per grid frequency.
    const Spectrum sum = lp.partition_sum();
    TrendSeries t{"partition_deviation", "xi", {}, {}};
    const GridSpec& g = lp.grid();
    for (std::size_t i = 1; i <= g.n() / 2; ++i) {
        const double xi = g.frequency(i);
        if (xi < std::ldexp(1.0, c.kmin) || xi > std::ldexp(1.0, c.kmax - 1)) continue;
        t.x.push_back(xi);
        t.y.push_back(std::abs(sum[g.flatten(i, 0)] - 1.0));
    }
    rep.trends.push_back(std::move(t));
    rep.summarize();
    return rep;
}

ExperimentReport run_roundtrip_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    const GridSpec g = grid_of(c, c.n);
    const PsiFamily fam(g, c.kmin, c.kmax);
    MultiplierFamily identity(g, matching_profile_grid(g, c.kmax, 1.0), c.kmin, c.kmax);
    identity.set_all([](std::span<const double> eta) {
        return cplx(PsiFamily::psi0_hat(eta.size() == 1 ? std::abs(eta[0]) : std::hypot(eta[0], eta[1])));
    });
    double identity_err = 0.0;
    for (int t = 0; t < c.trials; ++t) {
        TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
        const auto F = random_field(g, c.kmin, c.kmax, rng);
        const double scale = field_max_abs(F);
        rep.ratios.push_back(safe_ratio(field_max_abs_diff(roundtrip(fam, F), F), scale));
        identity_err = std::max(identity_err, safe_ratio(field_max_abs_diff(apply_family(identity, F), F), scale));
    }
    rep.summarize();
    rep.notes.push_back("ratios are relative reconstruction errors max|V(U(F)) - F| / max|F|");
    rep.metrics["max_roundtrip_error"] = rep.ensemble_max;
    rep.metrics["identity_multiplier_error"] = identity_err;
    rep.checks["roundtrip relative error <= 1e-8"] = rep.ensemble_max <= 1e-8;
    rep.checks["identity multiplier reproduces inputs within 1e-12"] = identity_err <= 1e-12;
    return rep;
}

ExperimentReport run_norms_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    // Discrete characterisation: ||U(F)||_{f_p^{0,q}} against ||F||_{L^p(l^q)}.
    detail::with_refinement(rep, c, 0.10, [&](std::size_t n, int t) {
        TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
        const auto F = random_field(grid_of(c, n), c.kmin, c.kmax, rng);
        return safe_ratio(fpq_discrete_norm(analyze(F), c.p, c.q), lp_lq_norm(F, c.p, c.q));
    });
    rep.notes.push_back("ratios are ||U(F)||_{f_p^{0,q}} / ||F||_{L^p(l^q)} for random fields");

    // Compact-support embedding across support radii B.
    const double r0 = c.r, r1 = 2.0 * c.r;
    const GridSpec eg = c.dim == 1 ? GridSpec(1, 1024, 16.0) : GridSpec(2, 256, 8.0);
    TrendSeries emb{"embedding_constant", "B", {}, {}};
    const int draws = std::max(c.trials, 1);
    for (double B : {1.0, 2.0, 4.0}) {
        double best = 0.0;
        for (int t = 0; t < draws; ++t) {
            TrialRng rng(c.seed ^ 0x5eedULL, static_cast<std::uint64_t>(t));
            best = std::max(best, embedding_ratio(random_compact(eg, B, 2.0, rng), B, c.s, r0, r1));
        }
        emb.x.push_back(B);
        emb.y.push_back(best);
    }
    const double spread = detail::sweep_spread(emb.y);
    rep.metrics["embedding_spread"] = spread;
    rep.checks["embedding constant stable across B (20%)"] = spread <= 0.20;
    rep.trends.push_back(std::move(emb));
    return rep;
}

ExperimentReport run_maximal_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    const double minpq = std::min(c.p, c.q);
    const double t_power = minpq / 2.0;
    const double sigma = c.dim / minpq + 0.5;
    rep.metrics["t"] = t_power;
    rep.metrics["sigma"] = sigma;

    auto field = [&](std::size_t n, int t) {
        TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
        return random_field(grid_of(c, n), c.kmin, c.kmax, rng);
    };
    // Fefferman-Stein: ||{M_t f_k}||_{L^p(l^q)} / ||{f_k}||_{L^p(l^q)}.
    detail::with_refinement(rep, c, 0.10, [&](std::size_t n, int t) {
        const auto F = field(n, t);
        return safe_ratio(lp_lq_norm(power_maximal_field(F, t_power), c.p, c.q), lp_lq_norm(F, c.p, c.q));
    });
    rep.notes.push_back("ratios are Fefferman-Stein ratios with t = min(p,q)/2");

    // Peetre in L^p(l^q), and in the F_infty form when q < inf.
    std::vector<double> peetre_c, peetre_f, finf_c, finf_f;
    for (int t = 0; t < c.trials; ++t) {
        for (std::size_t n : {c.n, 2 * c.n}) {
            const auto F = field(n, t);
            const auto P = peetre_maximal_field(F, sigma);
            (n == c.n ? peetre_c : peetre_f).push_back(safe_ratio(lp_lq_norm(P, c.p, c.q), lp_lq_norm(F, c.p, c.q)));
            if (!std::isinf(c.q))
                (n == c.n ? finf_c : finf_f)
                    .push_back(safe_ratio(finfty_q_norm(P, c.kmin, c.q, c.kmin), finfty_q_norm(F, c.q, c.kmin)));
        }
    }
    if (c.trials > 0) {
        const double pc = detail::relative_change(detail::max_of(peetre_c), detail::max_of(peetre_f));
        rep.metrics["peetre_max"] = detail::max_of(peetre_c);
        rep.metrics["peetre_refinement_change"] = pc;
        rep.checks["Peetre ensemble max refinement-stable"] = pc <= 0.10 && detail::all_finite(peetre_f);
        if (!finf_c.empty()) {
            const double fc = detail::relative_change(detail::max_of(finf_c), detail::max_of(finf_f));
            rep.metrics["peetre_finfty_max"] = detail::max_of(finf_c);
            rep.metrics["peetre_finfty_refinement_change"] = fc;
            rep.checks["F_infty Peetre ensemble max refinement-stable"] = fc <= 0.10 && detail::all_finite(finf_f);
        }
    }
    return rep;
}

ExperimentReport run_atoms_suite(const ExperimentConfig& c) {
    auto rep = start(c);
    bool exact = true, atoms_ok = true;
    auto trial = [&](std::size_t n, int kmax, int t) {
        TrialRng rng(c.seed, static_cast<std::uint64_t>(t));
        const auto b = analyze(random_field(grid_of(c, n), c.kmin, kmax, rng));
        const auto dec = decompose_atoms(b, c.p, c.q);
        exact = exact && dec.reconstruct(c.dim).max_abs_difference(b) == 0.0;
        for (const auto& a : dec.atoms) atoms_ok = atoms_ok && verify_atom(a);
        return safe_ratio(dec.lambda_lp(c.p), fpq_discrete_norm(b, c.p, c.q));
    };
    // Doubling n adds one finer scale of coefficients.
    std::vector<double> fine;
    for (int t = 0; t < c.trials; ++t) {
        rep.ratios.push_back(trial(c.n, c.kmax, t));
        fine.push_back(trial(2 * c.n, c.kmax + 1, t));
    }
    rep.summarize();
    rep.notes.push_back("ratios are (sum |lambda_j|^p)^{1/p} / ||b||_{f_p^{0,q}}; the fine run has one more scale");
    rep.checks["reconstruction exact"] = exact;
    rep.checks["every atom satisfies the support and size conditions"] = atoms_ok;
    if (c.trials > 0) {
        RefinementBlock blk;
        blk.n_coarse = c.n;
        blk.n_fine = 2 * c.n;
        blk.max_coarse = rep.ensemble_max;
        blk.max_fine = detail::max_of(fine);
        blk.relative_change = detail::relative_change(blk.max_coarse, blk.max_fine);
        blk.tolerance = 0.20;
        blk.stable = blk.relative_change <= blk.tolerance;
        rep.refinement = blk;
        rep.checks["constant stable under n doubling (20%)"] = blk.stable;
    }
    return rep;
}

}  // namespace vvfm
