#include "vvfm/quadrature.hpp"

#include <cmath>

#include "vvfm/grid.hpp"

namespace vvfm {
namespace {

struct Simpson {
    const std::function<double(double)>& f;
    double rel_tol;

    double run(double lo, double hi, double flo, double fmid, double fhi, double whole, int depth) const {
        const double mid = 0.5 * (lo + hi);
        const double flm = f(0.5 * (lo + mid)), frm = f(0.5 * (mid + hi));
        const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
        const double both = left + right;
        if (depth <= 0 || std::abs(both - whole) <= 15.0 * rel_tol * std::abs(both)) return both + (both - whole) / 15.0;
        return run(lo, mid, flo, flm, fmid, left, depth - 1) + run(mid, hi, fmid, frm, fhi, right, depth - 1);
    }
};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol, int max_depth) {
    if (!(rel_tol > 0.0)) throw DomainError("adaptive_simpson: tolerance must be positive");
    if (a == b) return 0.0;
    const Simpson s{f, rel_tol};
    // Four fixed panels first so a symmetric integrand cannot fool the first estimate.
    double acc = 0.0;
    const double w = (b - a) / 4.0;
    for (int i = 0; i < 4; ++i) {
        const double lo = a + i * w, hi = lo + w;
        const double flo = f(lo), fmid = f(0.5 * (lo + hi)), fhi = f(hi);
        acc += s.run(lo, hi, flo, fmid, fhi, w / 6.0 * (flo + 4.0 * fmid + fhi), max_depth);
    }
    return acc;
}

double dyadic_panel_integral(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
    if (!(lo >= 0.0) || hi < lo) throw DomainError("dyadic_panel_integral: need 0 <= lo <= hi");
    double acc = 0.0;
    double a = lo;
    while (a < hi) {
        const double b = std::min(hi, a < 1.0 ? 1.0 : 2.0 * std::exp2(std::floor(std::log2(a))));
        const double next = b > a ? b : std::min(hi, 2.0 * a);
        acc += adaptive_simpson(f, a, next, rel_tol);
        a = next;
    }
    return acc;
}

}  // namespace vvfm
