#pragma once

#include <vector>

#include "vvfm/fields.hpp"

namespace vvfm {

enum class WindowFamily {
    /// Every axis-parallel periodic cube with grid-aligned corners and side a
    /// multiple of the grid spacing (up to the full torus).
    AllGridCubes,
    /// Dyadic cubes of side L down to one grid cell.
    Dyadic,
};

struct MaximalConfig {
    WindowFamily window = WindowFamily::AllGridCubes;
    double t_power = 1.0;
    double sigma = 1.0;

    void validate() const;
};

/// Mf(x) = sup over windows W containing x of the mean of |f| over W.
SampledFunction hl_maximal(const SampledFunction& f, const MaximalConfig& config = {});

/// M_t f = (M(|f|^t))^{1/t}.
SampledFunction power_maximal(const SampledFunction& f, double t, const MaximalConfig& config = {});

/// sup_y |f(x - y)| / (1 + 2^k |y|)^sigma over grid shifts y, periodic distance.
SampledFunction peetre_maximal(const SampledFunction& f, int k, double sigma);

/// Dyadic-window Hardy-Littlewood maximal function.
SampledFunction dyadic_maximal(const SampledFunction& f);

/// sup over dyadic P containing x of the mean of |f - f_P| over P.
SampledFunction dyadic_sharp(const SampledFunction& f);

/// || sup_{P dyadic, P contains x} ((1/|P|) int_P sum_{k >= -log2 side(P)} |f_k|^q)^{1/q} ||_{L^p}.
/// Refuses unless 0 < q < p < inf.
double sharp_vector_functional(const VectorField& F, double q, double p);

/// Pointwise function inside the L^p norm above.
SampledFunction sharp_vector_function(const VectorField& F, double q);

/// {M_t f_k} and {peetre_maximal(f_k, k, sigma)} for every scale of a field.
std::vector<SampledFunction> power_maximal_field(const VectorField& F, double t);
std::vector<SampledFunction> peetre_maximal_field(const VectorField& F, double sigma);

}  // namespace vvfm
