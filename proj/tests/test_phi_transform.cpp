#include <cmath>

#include "doctest.h"
#include "vvfm/norms.hpp"
#include "vvfm/phi_transform.hpp"
#include "vvfm/random.hpp"

using namespace vvfm;

namespace {

// Unit-amplitude e^{2 pi i m dxi x}, built on the spectral side so it is exactly band-limited.
SampledFunction plane_wave(const GridSpec& g, std::int64_t m) {
    auto S = Spectrum::zeros(g);
    S[static_cast<std::size_t>((m + static_cast<std::int64_t>(g.n())) % static_cast<std::int64_t>(g.n()))] =
        1.0 / g.frequency_spacing();
    return fft_inverse(S);
}

// |Q|^{1/2} Psi_k(x - x_Q) by an explicit trigonometric sum (1-D).
cplx psi_q_direct(const GridSpec& g, const DyadicCube& q, double x) {
    const double dxi = g.frequency_spacing();
    const int half = static_cast<int>(g.n() / 2);
    cplx acc{};
    for (int m = -half; m < half; ++m) {
        const double xi = m * dxi;
        acc += PsiFamily::psi0_hat(std::abs(std::ldexp(xi, -q.k))) * std::polar(1.0, 2.0 * kPi * (x - q.corner(0)) * xi);
    }
    return std::sqrt(q.volume()) * acc * dxi;
}

double max_rel_error(const VectorField& a, const VectorField& b) {
    double err = 0.0;
    for (int k = a.kmin(); k <= a.kmax(); ++k) {
        double diff = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < a.grid().size(); ++i) {
            diff = std::max(diff, std::abs(a[k][i] - b[k][i]));
            scale = std::max(scale, std::abs(a[k][i]));
        }
        if (scale > 0.0) err = std::max(err, diff / scale);
    }
    return err;
}

}  // namespace

TEST_SUITE("phi_transform") {

TEST_CASE("analyze") {
    const GridSpec g(1, 256, 8.0);
    VectorField F(g, -2, 3);
    for (const auto& [q, v] : analyze(F)) CHECK(v == cplx{});
    CHECK(analyze(F).size() == 4 + 8 + 16 + 32 + 64 + 128);

    VectorField C(g, 1, 1);
    C.set(1, SampledFunction::constant(g, 3.0));
    for (const auto& [q, v] : analyze(C)) CHECK(std::abs(v - std::pow(2.0, -0.5) * 3.0) < 1e-15);

    TrialRng rng(11, 0);
    const auto R = random_field(g, -2, 3, rng);
    const auto b = analyze(R);
    for (const auto& [q, v] : b) {
        // Corner index: n/2 + l 2^-k / h, integer arithmetic only.
        const std::int64_t cells = std::int64_t{1} << (4 - q.k);  // 2^-k / h with h = 1/16
        const auto i = static_cast<std::size_t>(static_cast<std::int64_t>(g.n() / 2) + q.l[0] * cells);
        CHECK(v == std::sqrt(q.volume()) * R[q.k][i]);
    }

    const GridSpec g2(2, 32, 2.0);
    TrialRng rng2(11, 1);
    const auto R2 = random_field(g2, -1, 1, rng2);
    const auto b2 = analyze(R2);
    CHECK(b2.size() == 4 + 16 + 64);
    const auto q = DyadicCube::make(2, 1, -1, 2);
    const std::size_t i0 = 16 - 4, i1 = 16 + 8;
    CHECK(b2.get(q) == 0.5 * R2[1][i0 * 32 + i1]);
}

TEST_CASE("synthesize") {
    const GridSpec g(1, 64, 2.0);
    const PsiFamily fam(g, -1, 2);
    CubeCoefficients one(1);
    one.set(DyadicCube::make(1, 0, 0), 1.0);
    const auto F = synthesize(fam, one);
    const auto psi0 = fam.psi_function(0);
    for (std::size_t i = 0; i < g.n(); ++i) CHECK(std::abs(F[0][i] - psi0[i]) < 1e-14);

    const auto Z = synthesize(fam, CubeCoefficients(1));
    for (int k = -1; k <= 2; ++k) CHECK(lp_norm(Z[k], kInfinity) == 0.0);

    TrialRng rng(12, 0);
    CubeCoefficients b(1);
    while (b.size() < 5) b.set(DyadicCube::make(1, 2, rng.uniform_int(-8, 7)), rng.complex_normal());
    const auto S = synthesize(fam, b);
    double err = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) {
        cplx direct{};
        for (const auto& [q, v] : b) direct += v * psi_q_direct(g, q, g.coordinate(i));
        err = std::max(err, std::abs(S[2][i] - direct));
    }
    CHECK(err < 1e-10);
    for (int k = -1; k <= 2; ++k) CHECK(is_band_limited(S[k], std::ldexp(1.0, k)));
}

TEST_CASE("roundtrip on E(2^{k-2})") {
    const GridSpec g(1, 512, 16.0);
    const PsiFamily fam(g, -3, 2);

    VectorField zero(g, -3, 2);
    const auto Z = roundtrip(fam, zero);
    for (int k = -3; k <= 2; ++k) CHECK(lp_norm(Z[k], kInfinity) == 0.0);

    VectorField G(g, -3, 2);
    const auto gauss = SampledFunction::from_radial(g, [](double r) { return std::exp(-kPi * r * r); });
    for (int k = -3; k <= 2; ++k) G.set(k, band_project(gauss, std::ldexp(1.0, k - 2)));
    CHECK(max_rel_error(G, roundtrip(fam, G)) < 1e-8);

    // Plane wave at |xi0| < 2^{k-2}: amplitude and phase come back.
    VectorField W(g, 2, 2);
    const auto wave = plane_wave(g, 25);  // xi0 = 25/32 < 1
    W.set(2, wave);
    const auto RW = roundtrip(fam, W);
    double err = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) err = std::max(err, std::abs(RW[2][i] - std::polar(1.0, 2.0 * kPi * g.coordinate(i) * 25.0 / 32.0)));
    CHECK(err < 1e-10);

    // Band condition violated: refuse.
    VectorField bad(g, 0, 1);
    TrialRng rng(13, 0);
    bad.set(1, random_band_limited(g, 0.9, rng));
    CHECK_THROWS_AS(roundtrip(fam, bad), DomainError);
}

TEST_CASE("reconstruction ensemble and coefficient stability") {
    const GridSpec g(1, 512, 16.0);
    const PsiFamily fam(g, -2, 2);
    double worst = 0.0, coeff = 0.0;
    for (std::uint64_t t = 0; t < 50; ++t) {
        TrialRng rng(14, t);
        const auto F = random_field(g, -2, 2, rng);
        const auto R = roundtrip(fam, F);
        worst = std::max(worst, max_rel_error(F, R));
        if (t < 5) {
            const auto b = analyze(F);
            const auto bb = analyze(synthesize(fam, b));
            double scale = 0.0;
            for (const auto& [q, v] : b) scale = std::max(scale, std::abs(v));
            coeff = std::max(coeff, b.max_abs_difference(bb) / scale);
        }
    }
    CHECK(worst <= 1e-8);
    CHECK(coeff <= 1e-8);
}

TEST_CASE("duality pairing") {
    const GridSpec g(1, 256, 8.0);
    const PsiFamily fam(g, -1, 2);
    TrialRng rng(15, 0);
    const auto F = random_field(g, -1, 2, rng);
    CHECK(duality_pairing(fam, F, CubeCoefficients(1)) == cplx{});

    // One plane wave, one coefficient: b_Q |Q|^{1/2} e^{2 pi i xi0 x_Q}.
    VectorField W(g, -1, 2);
    W.set(1, plane_wave(g, 5));  // xi0 = 5/16 < 2^{-1}
    CubeCoefficients single(1);
    const auto Q = DyadicCube::make(1, 1, 3);
    single.set(Q, cplx(0.5, -2.0));
    const cplx expect = cplx(0.5, -2.0) * std::sqrt(Q.volume()) * std::polar(1.0, 2.0 * kPi * 5.0 / 16.0 * Q.corner(0));
    CHECK(std::abs(duality_pairing(fam, W, single) - expect) < 1e-10);

    for (std::uint64_t t = 1; t < 6; ++t) {
        TrialRng r(15, t);
        const auto G = random_field(g, -1, 2, r);
        CubeCoefficients b(1);
        for (int i = 0; i < 40; ++i) {
            const int k = r.uniform_int(-1, 2);
            const int span = 1 << (k + 3);
            b.set(DyadicCube::make(1, k, r.uniform_int(-span, span - 1)), r.complex_normal());
        }
        const cplx lhs = duality_pairing(fam, G, b), rhs = coefficient_pairing(G, b);
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("Hoelder bound for the pairing") {
    const GridSpec g(1, 256, 8.0);
    const PsiFamily fam(g, -1, 2);
    const double p = 1.5, q = 2.0, pp = dual_exponent(p), qq = dual_exponent(q);
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng r(16, t);
        const auto F = random_field(g, -1, 2, r);
        const auto b = analyze(random_field(g, -1, 2, r));
        const double ratio = std::abs(duality_pairing(fam, F, b)) / (lp_lq_norm(F, pp, qq) * fpq_discrete_norm(b, p, q));
        worst = std::max(worst, ratio);
    }
    CHECK(worst < 1.0);
}

}
