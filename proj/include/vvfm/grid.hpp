#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace vvfm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Raised when two objects that must share a grid (or a scale range) do not.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition on its numerical inputs fails
/// (radius above Nyquist, exponent outside its admissible window, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when dyadic cube corners do not land on grid points.
class GridCompatibilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Uniform periodic grid on the torus [-L, L)^d.
///
/// Sample i (per axis) sits at x_i = -L + i h with h = 2L / n, so the origin is
/// sample n/2. Frequency index i (FFT order) represents xi = m / (2L) where m is
/// the signed index in (-n/2, n/2]. The half-width must be an exact power of two
/// so that the torus is tiled by dyadic cubes of side <= L.
class GridSpec {
public:
    GridSpec(int dim, std::size_t n_per_axis, double half_width);

    int dim() const { return dim_; }
    std::size_t n() const { return n_; }
    double half_width() const { return half_width_; }

    /// Total number of samples, n^d.
    std::size_t size() const { return dim_ == 1 ? n_ : n_ * n_; }
    double spacing() const { return 2.0 * half_width_ / static_cast<double>(n_); }
    double cell_volume() const;
    double frequency_spacing() const { return 1.0 / (2.0 * half_width_); }
    double frequency_cell_volume() const;
    /// Largest representable |xi| along an axis: n / (4L).
    double nyquist() const { return static_cast<double>(n_) / (4.0 * half_width_); }

    /// J with L = 2^J.
    int dyadic_level() const { return level_; }
    /// Number of grid cells per unit length, as a power of two: 1/h = 2^{finest_scale}.
    int finest_scale() const;

    double coordinate(std::size_t axis_index) const;
    std::int64_t signed_frequency_index(std::size_t axis_index) const;
    double frequency(std::size_t axis_index) const;

    /// Euclidean |xi| at a flat (FFT-ordered) spectrum index.
    double frequency_norm(std::size_t flat) const;
    /// Euclidean |x| at a flat sample index.
    double coordinate_norm(std::size_t flat) const;
    std::array<std::size_t, 2> unflatten(std::size_t flat) const;
    std::size_t flatten(std::size_t i0, std::size_t i1 = 0) const { return dim_ == 1 ? i0 : i0 * n_ + i1; }

    /// Sample index along an axis of the point -L + j*h == x, if x is a grid point.
    std::size_t axis_index_of(double x) const;

    bool operator==(const GridSpec& other) const = default;

    std::string describe() const;

private:
    int dim_;
    std::size_t n_;
    double half_width_;
    int level_;
};

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

bool is_power_of_two(std::size_t v);

}  // namespace vvfm
