#include "vvfm/grid.hpp"

#include <cmath>
#include <sstream>

namespace vvfm {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

GridSpec::GridSpec(int dim, std::size_t n_per_axis, double half_width)
    : dim_(dim), n_(n_per_axis), half_width_(half_width), level_(0) {
    if (dim != 1 && dim != 2) {
        throw DomainError("grid dimension must be 1 or 2, got " + std::to_string(dim));
    }
    if (!is_power_of_two(n_per_axis) || n_per_axis < 8) {
        throw DomainError("n_per_axis must be a power of two >= 8, got " + std::to_string(n_per_axis));
    }
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw DomainError("half_width must be positive and finite");
    }
    int exponent = 0;
    const double mantissa = std::frexp(half_width, &exponent);
    if (mantissa != 0.5) {
        throw DomainError("half_width must be a power of two so the torus is tiled by dyadic cubes");
    }
    level_ = exponent - 1;
}

double GridSpec::cell_volume() const {
    const double h = spacing();
    return dim_ == 1 ? h : h * h;
}

double GridSpec::frequency_cell_volume() const {
    const double d = frequency_spacing();
    return dim_ == 1 ? d : d * d;
}

int GridSpec::finest_scale() const {
    int exponent = 0;
    std::frexp(1.0 / spacing(), &exponent);
    return exponent - 1;
}

double GridSpec::coordinate(std::size_t axis_index) const {
    return -half_width_ + static_cast<double>(axis_index) * spacing();
}

std::int64_t GridSpec::signed_frequency_index(std::size_t axis_index) const {
    const auto i = static_cast<std::int64_t>(axis_index);
    const auto n = static_cast<std::int64_t>(n_);
    return i <= n / 2 ? i : i - n;
}

double GridSpec::frequency(std::size_t axis_index) const {
    return static_cast<double>(signed_frequency_index(axis_index)) * frequency_spacing();
}

std::array<std::size_t, 2> GridSpec::unflatten(std::size_t flat) const {
    if (dim_ == 1) return {flat, 0};
    return {flat / n_, flat % n_};
}

double GridSpec::frequency_norm(std::size_t flat) const {
    const auto idx = unflatten(flat);
    if (dim_ == 1) return std::abs(frequency(idx[0]));
    return std::hypot(frequency(idx[0]), frequency(idx[1]));
}

double GridSpec::coordinate_norm(std::size_t flat) const {
    const auto idx = unflatten(flat);
    if (dim_ == 1) return std::abs(coordinate(idx[0]));
    return std::hypot(coordinate(idx[0]), coordinate(idx[1]));
}

std::size_t GridSpec::axis_index_of(double x) const {
    const double pos = (x + half_width_) / spacing();
    const double rounded = std::round(pos);
    if (std::abs(pos - rounded) > 1e-9 || rounded < 0.0 || rounded >= static_cast<double>(n_)) {
        std::ostringstream msg;
        msg << "coordinate " << x << " is not a grid point of " << describe();
        throw GridCompatibilityError(msg.str());
    }
    return static_cast<std::size_t>(rounded);
}

std::string GridSpec::describe() const {
    std::ostringstream os;
    os << "GridSpec(d=" << dim_ << ", n=" << n_ << ", L=" << half_width_ << ")";
    return os.str();
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b)) {
        throw DimensionError(std::string(what) + ": grid mismatch " + a.describe() + " vs " + b.describe());
    }
}

}  // namespace vvfm
