#pragma once

#include <functional>

namespace vvfm {

/// Adaptive Simpson on [a, b] with relative tolerance rel_tol (Richardson-corrected).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-9,
                        int max_depth = 40);

/// Adaptive Simpson on [0, 1] plus the dyadic panels [2^j, 2^{j+1}] up to R, which
/// keeps slowly decaying integrands (log-type tails) well resolved.
double dyadic_panel_integral(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-9);

}  // namespace vvfm
