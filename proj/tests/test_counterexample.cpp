#include <cmath>

#include "doctest.h"
#include "vvfm/counterexample.hpp"
#include "vvfm/frames.hpp"
#include "vvfm/random.hpp"

using namespace vvfm;

namespace {

const CounterexampleParams kBase{1, 1.0, 1.0, 0.6, 1.6};

std::vector<double> doublings(int lo, int hi) {
    std::vector<double> r;
    for (int j = lo; j <= hi; ++j) r.push_back(std::ldexp(1.0, j));
    return r;
}

}  // namespace

TEST_SUITE("counterexample_lab") {

TEST_CASE("parameters") {
    CHECK(kBase.violations().empty());
    CHECK(kBase.t() == 1.0);
    CHECK(kBase.tau() == doctest::Approx(5.0 / 3.0));
    CHECK(kBase.finiteness_exponent() == doctest::Approx(4.0 / 3.0));
    CHECK(kBase.blowup_exponent() == doctest::Approx(0.8));
    CHECK_FALSE(CounterexampleParams{1, 1.0, 1.0, 0.6, 1.1}.violations().empty());  // gamma <= 2/tau = 1.2
    CHECK_FALSE(CounterexampleParams{1, 1.0, 1.0, 0.6, 2.0}.violations().empty());  // gamma >= 2/min
    CHECK_FALSE(CounterexampleParams{1, 1.0, 1.0, 1.0, 1.6}.violations().empty());  // s not below d/min
    CHECK_THROWS_AS(CounterexampleParams({1, 0.5, 1.0, 0.9, 3.0}).validate(), DomainError);
    CHECK(CounterexampleParams{1, 0.5, 0.5, 1.2, 1.0}.violations().empty());
}

TEST_CASE("H function") {
    const GridSpec g(1, 256, 8.0);
    const auto H = h_function(kBase, g);
    CHECK(H[128].real() == 1.0);
    for (std::size_t i = 129; i < 256; ++i) CHECK(H[i].real() < H[i - 1].real());
    for (std::size_t i = 1; i < 128; ++i) CHECK(H[i].real() < H[i + 1].real());

    // t = 2, gamma = 1 at |x| = 1.
    const CounterexampleParams p2{1, 0.5, 0.5, 1.2, 1.0};
    const double w = 1.0 + 4.0 * kPi * kPi;
    CHECK(h_value(p2, 1.0) == doctest::Approx(1.0 / (w * std::sqrt(1.0 + std::log(w)))).epsilon(1e-15));

    // H(x - y) >= H(x) H(y) on random pairs.
    TrialRng rng(60, 0);
    for (int i = 0; i < 2000; ++i) {
        const double x = (rng.uniform() - 0.5) * 200.0, y = (rng.uniform() - 0.5) * 200.0;
        CHECK(h_value(kBase, std::abs(x - y)) >= h_value(kBase, std::abs(x)) * h_value(kBase, std::abs(y)));
        CHECK(h_value(p2, std::abs(x - y)) >= h_value(p2, std::abs(x)) * h_value(p2, std::abs(y)));
    }

    const GridSpec g2(2, 32, 4.0);
    const CounterexampleParams p3{2, 1.0, 1.0, 1.2, 1.6};
    REQUIRE(p3.violations().empty());
    const auto H2 = h_function(p3, g2);
    CHECK(H2[16 * 32 + 16].real() == 1.0);
    CHECK_THROWS_AS(h_function(kBase, g2), DimensionError);
}

TEST_CASE("eta") {
    const GridSpec g(1, 1 << 14, 64.0);  // h = 1/128, frequency spacing 1/128
    const auto eta = build_eta(g);
    for (auto z : eta.samples()) {
        CHECK(z.real() >= 0.0);
        CHECK(z.imag() == 0.0);
    }
    const auto E = fft_forward(eta);
    double peak = 0.0, beyond = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) {
        peak = std::max(peak, std::abs(E[i]));
        if (g.frequency_norm(i) > 0.1) beyond = std::max(beyond, std::abs(E[i]));
    }
    CHECK(beyond <= 1e-14 * peak);
    CHECK(std::abs(E.at_signed(static_cast<std::int64_t>(0.2 / g.frequency_spacing()))) <= 1e-14 * peak);
    double low = 1e300;
    for (std::size_t i = 0; i < g.n(); ++i)
        if (std::abs(g.coordinate(i)) <= 0.01) low = std::min(low, eta[i].real());
    CHECK(eta[g.n() / 2].real() > 0.0);
    CHECK(low > 0.5 * eta[g.n() / 2].real());

    CHECK_THROWS_AS(build_eta(GridSpec(1, 1 << 12, 64.0)), DomainError);  // h = 1/32
    CHECK_THROWS_AS(build_eta(GridSpec(1, 1 << 12, 8.0)), DomainError);   // rho spans < 4 cells
    const GridSpec g2(2, 256, 8.0);
    const auto eta2 = build_eta(g2);
    double low2 = 1e300;
    for (std::size_t i = 0; i < g2.size(); ++i)
        if (g2.coordinate_norm(i) <= 0.125) low2 = std::min(low2, eta2[i].real());
    CHECK(low2 > 0.0);
}

TEST_CASE("K and m_k") {
    const GridSpec g(1, 1 << 14, 64.0);
    const auto K = build_K(kBase, g);
    double kmax = 0.0;
    for (auto z : K.samples()) kmax = std::max(kmax, std::abs(z));
    for (auto z : K.samples()) CHECK(z.real() >= -1e-13 * kmax);

    // K at a few points against a direct circular sum h sum_j H(x - y_j) eta(y_j).
    const auto H = h_function(kBase, g);
    const auto eta = build_eta(g);
    const std::size_t n = g.n();
    for (std::size_t i : {n / 2, n / 2 + 100, std::size_t{7}}) {
        cplx acc{};
        for (std::size_t j = 0; j < n; ++j) acc += H[(i + n + n / 2 - j) % n] * eta[j];
        CHECK(std::abs(K[i] - acc * g.spacing()) <= 1e-10 * kmax);
    }

    const auto m0 = build_mk(K, 0);
    for (int k : {-2, 1, 3}) {
        const auto mk = build_mk(K, k);
        double d = 0.0;
        for (std::size_t i = 0; i < m0.size(); ++i) d = std::max(d, std::abs(mk[i] - m0[i]));
        CHECK(d <= 1e-10);
    }

    // m_0 = H_hat eta_hat with eta_hat = g_hat * g_hat as a direct discrete convolution.
    const double dxi = g.frequency_spacing();
    const auto Hs = fft_forward(H);
    const int reach = static_cast<int>(std::ceil(0.05 / dxi)) + 1;
    std::vector<double> ghat(static_cast<std::size_t>(2 * reach + 1));
    for (int m = -reach; m <= reach; ++m) ghat[static_cast<std::size_t>(m + reach)] = smooth_step(std::abs(m * dxi), 0.025, 0.05);
    double err = 0.0, scale = 0.0;
    for (int m = -2 * reach; m <= 2 * reach; ++m) {
        double conv = 0.0;
        for (int a = -reach; a <= reach; ++a) {
            const int b = m - a;
            if (b < -reach || b > reach) continue;
            conv += ghat[static_cast<std::size_t>(a + reach)] * ghat[static_cast<std::size_t>(b + reach)];
        }
        conv *= dxi;
        const cplx expect = Hs.at_signed(m) * conv;
        const cplx got = m0[static_cast<std::size_t>(static_cast<std::int64_t>(n / 2) + m)];
        err = std::max(err, std::abs(got - expect));
        scale = std::max(scale, std::abs(expect));
    }
    CHECK(err <= 1e-8 * scale);
}

TEST_CASE("convergent integral") {
    for (double R : {1.0, 2.0, 17.0, 1024.0, 1e6}) {
        CHECK(conv_integral(2.0, R) == doctest::Approx(0.5 * (1.0 - 1.0 / (1.0 + 2.0 * std::log(R)))).epsilon(1e-9));
        CHECK(conv_integral(1.0, R) == doctest::Approx(0.5 * std::log(1.0 + 2.0 * std::log(R))).epsilon(1e-9));
        CHECK(conv_integral(4.0 / 3.0, R) == doctest::Approx(conv_integral_closed(4.0 / 3.0, R)).epsilon(1e-9));
    }
    CHECK(conv_integral(2.0, 1.0) == 0.0);
    const auto rep = check_L_finiteness(kBase, doublings(0, 11));
    CHECK(rep.exponent == doctest::Approx(4.0 / 3.0));
    for (std::size_t i = 1; i < rep.quadrature.increments.size(); ++i)
        CHECK(rep.quadrature.increments[i] < rep.quadrature.increments[i - 1]);
    // Summable (slope below -1) for the admissible exponent, not for the boundary one.
    CHECK(rep.quadrature.log_slope(5) < -1.0);
    CHECK(check_L_finiteness(1.0, doublings(0, 11)).quadrature.log_slope(5) > -1.0);
}

TEST_CASE("divergent integral") {
    CHECK(blowup_integral(1, 0.8, 0.5) > 0.0);
    const auto rep = check_blowup(kBase, doublings(0, 10));
    for (std::size_t i = 0; i < rep.quadrature.increments.size(); ++i) {
        const double R = rep.quadrature.radii[i];
        // Comparison: 2 int_R^{2R} (1/(2 pi x sqrt(1 + 1/(4 pi^2 R^2)))) (1 + ln(1 + 16 pi^2 R^2))^{-b} dx.
        const double lower = std::log(2.0) / kPi / std::sqrt(1.0 + 1.0 / (4.0 * kPi * kPi * R * R)) *
                             std::pow(1.0 + std::log(1.0 + 16.0 * kPi * kPi * R * R), -0.8);
        CHECK(rep.quadrature.increments[i] >= lower);
    }
    REQUIRE(rep.torus_values.size() >= 8);
    for (std::size_t i = 0; i < rep.torus_radii.size(); ++i) {
        const double J = blowup_integral(1, 0.8, rep.torus_radii[i]);
        CHECK(rep.torus_values[i] == doctest::Approx(J).epsilon(1e-4));
    }
    CHECK(rep.quadrature.log_slope(5) > -1.0);
    const auto contrast = check_blowup(1, 2.0, doublings(0, 10));
    CHECK(contrast.quadrature.log_slope(5) < -1.0);
    CHECK(contrast.quadrature.increments.back() < 1e-3);

    const double j2 = blowup_integral(2, 0.8, 4.0);
    CHECK(j2 > blowup_integral(2, 0.8, 2.0));
}

TEST_CASE("decay estimate and grid norm trend") {
    const GridSpec g(1, 1 << 16, 256.0);
    const auto dc = check_decay_estimate(kBase, g);
    CHECK(dc.fitted_c > 0.0);
    CHECK(dc.small_pass);
    CHECK(dc.large_pass);
    CHECK_THROWS_AS(check_decay_estimate(CounterexampleParams{2, 1.0, 1.0, 1.2, 1.6}, GridSpec(2, 32, 4.0)), DimensionError);

    const auto t = multiplier_norm_trend(kBase, {64.0, 128.0, 256.0}, 1.0 / 128);
    REQUIRE(t.norms.size() == 3);
    CHECK(std::abs(t.norms[2] - t.norms[1]) < std::abs(t.norms[1] - t.norms[0]));
}

TEST_CASE("necessary condition norms") {
    const GridSpec g(1, 1024, 32.0);
    // K = |g|^2 with g band-limited to radius 1: nonnegative and in E(1).
    TrialRng rng(61, 0);
    const auto f = random_band_limited(g, 0.9, rng);
    std::vector<cplx> sq(g.size());
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(f[i]);
    const SampledFunction K(g, sq);
    const auto nn = necessary_condition_norms(K, 1.5, 3.0);
    CHECK_FALSE(nn.projected);
    CHECK(nn.nonnegative);
    CHECK(nn.l1_matches);
    CHECK(nn.r_min == doctest::Approx(1.5));
    CHECK(nn.l1 == doctest::Approx(nn.fourier_at_zero).epsilon(1e-8));
    CHECK(nn.fourier_sup == doctest::Approx(nn.fourier_at_zero).epsilon(1e-12));

    const auto z = necessary_condition_norms(SampledFunction::zeros(g), 1.0, 1.0);
    CHECK(z.norm_r_min == 0.0);
    CHECK(z.norm_min1pq == 0.0);
    CHECK(z.fourier_sup == 0.0);

    // Young with the reproducing kernel Phi_hat(xi) = Phi0_hat(xi/2): ||f||_2 <= ||Phi||_2 ||f||_1 on E(1).
    const auto Phi = fft_inverse(Spectrum::from_radial(g, [](double r) { return LPFamily::phi0_hat(r / 2.0); }));
    const double C = lp_norm(Phi, 2.0);
    for (std::uint64_t t = 1; t < 20; ++t) {
        TrialRng r(61, t);
        const auto e = random_band_limited(g, 2.0, r);
        CHECK(lp_norm(e, 2.0) <= C * lp_norm(e, 1.0) * (1.0 + 1e-12));
    }

    // Out of band input is projected and reported.
    TrialRng r2(62, 0);
    const auto wide = random_band_limited(g, 6.0, r2);
    CHECK(necessary_condition_norms(wide, 1.0, 1.0).projected);
}

}
