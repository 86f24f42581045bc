#include <cmath>

#include "suite_util.hpp"
#include "vvfm/counterexample.hpp"

namespace vvfm {

ExperimentReport run_counterexample_suite(const ExperimentConfig& c) {
    ExperimentReport rep;
    rep.suite = c.suite;
    rep.config = c;
    const CounterexampleParams params{c.dim, c.p, c.q, c.s, c.gamma};
    params.validate();

    std::vector<double> radii;
    for (int j = 0; j <= 10; ++j) radii.push_back(std::ldexp(1.0, j));

    const auto fin = check_L_finiteness(params, radii);
    const auto fin_boundary = check_L_finiteness(1.0, radii);
    const auto blow = check_blowup(params, radii);
    const auto blow_contrast = check_blowup(c.dim, 2.0, radii);

    auto add_trend = [&](const std::string& name, const IncrementTrend& t) {
        TrendSeries s{name, "R", {}, {}};
        for (std::size_t i = 0; i < t.increments.size(); ++i) {
            s.x.push_back(t.radii[i + 1]);
            s.y.push_back(t.increments[i]);
        }
        rep.trends.push_back(std::move(s));
    };
    add_trend("finiteness_increments", fin.quadrature);
    add_trend("finiteness_contrast_increments", fin_boundary.quadrature);
    add_trend("blowup_increments", blow.quadrature);
    add_trend("blowup_contrast_increments", blow_contrast.quadrature);

    const std::size_t tail = 5;
    rep.metrics["t"] = params.t();
    rep.metrics["tau"] = params.tau();
    rep.metrics["finiteness_exponent"] = fin.exponent;
    rep.metrics["blowup_exponent"] = blow.exponent;
    rep.metrics["finiteness_log_slope"] = fin.quadrature.log_slope(tail);
    rep.metrics["finiteness_contrast_log_slope"] = fin_boundary.quadrature.log_slope(tail);
    rep.metrics["blowup_log_slope"] = blow.quadrature.log_slope(tail);
    rep.metrics["blowup_contrast_log_slope"] = blow_contrast.quadrature.log_slope(tail);

    // Literal desk-scale thresholds; the README explains why neither can hold.
    double inc_at_256 = 0.0, min_blow = kInfinity;
    for (std::size_t i = 0; i < fin.quadrature.increments.size(); ++i)
        if (fin.quadrature.radii[i + 1] == 256.0) inc_at_256 = fin.quadrature.increments[i];
    for (double v : blow.quadrature.increments) min_blow = std::min(min_blow, v);
    rep.metrics["finiteness_increment_at_256"] = inc_at_256;
    rep.metrics["blowup_min_increment_to_1024"] = min_blow;

    double closed_err = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double ref = fin.closed_form[i];
        if (ref != 0.0) closed_err = std::max(closed_err, std::abs(fin.quadrature.values[i] - ref) / ref);
    }
    rep.metrics["closed_form_relative_error"] = closed_err;
    double torus_err = 0.0;
    for (std::size_t i = 0; i < blow.torus_radii.size(); ++i) {
        const double ref = blowup_integral(c.dim, blow.exponent, blow.torus_radii[i]);
        torus_err = std::max(torus_err, std::abs(blow.torus_values[i] - ref) / ref);
    }
    rep.metrics["torus_vs_quadrature_relative_error"] = torus_err;

    rep.checks["finiteness increments summable (log-slope < -1)"] = fin.quadrature.log_slope(tail) < -1.0;
    rep.checks["blowup increments not summable (log-slope > -1)"] = blow.quadrature.log_slope(tail) > -1.0;
    rep.checks["contrast exponent 1 flips finiteness"] = fin_boundary.quadrature.log_slope(tail) > -1.0;
    rep.checks["contrast exponent 2 flips blowup"] = blow_contrast.quadrature.log_slope(tail) < -1.0;
    rep.checks["quadrature matches closed form (1e-8)"] = closed_err <= 1e-8;
    rep.checks["torus sums match quadrature (1e-4)"] = torus_err <= 1e-4;

    const GridSpec g(c.dim, c.n, c.half_width);
    if (c.dim == 1) {
        const auto dc = check_decay_estimate(params, g);
        rep.metrics["decay_fitted_c"] = dc.fitted_c;
        rep.metrics["decay_worst_small_ratio"] = dc.worst_small_ratio;
        rep.metrics["decay_worst_large_ratio"] = dc.worst_large_ratio;
        rep.checks["decay estimate holds for 0 < |xi| <= 1"] = dc.small_pass;
        rep.checks["decay estimate holds for |xi| > 1"] = dc.large_pass;
    }
    const auto K = build_K(params, g);
    const auto nn = necessary_condition_norms(K, c.p, c.q);
    rep.metrics["K_l1"] = nn.l1;
    rep.metrics["K_fourier_at_zero"] = nn.fourier_at_zero;
    rep.metrics["K_norm_r_min"] = nn.norm_r_min;
    rep.metrics["K_norm_min1pq"] = nn.norm_min1pq;
    rep.checks["K nonnegative with ||K||_1 = K_hat(0)"] = nn.nonnegative && nn.l1_matches;
    rep.checks["m_k independent of k"] = [&] {
        const auto m0 = build_mk(K, 0), m2 = build_mk(K, 2);
        double d = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < m0.size(); ++i) {
            d = std::max(d, std::abs(m0[i] - m2[i]));
            scale = std::max(scale, std::abs(m0[i]));
        }
        return d <= 1e-10 * std::max(scale, 1.0);
    }();
    rep.notes.push_back("increments are over doubling radii; log-slopes are fitted against ln ln R over the last 5");
    rep.summarize();
    return rep;
}

}  // namespace vvfm
