#pragma once

#include <cmath>
#include <cstddef>

#include "error.hpp"

namespace sodflux {

/// Uniform 1D grid of cells on [x_min, x_max].
class Grid1D
{
public:
  /// Smallest grid the four-point MUSCL stencil accepts.
  static constexpr std::size_t min_cells = 4;

  Grid1D(double x_min, double x_max, std::size_t n_cells)
    : x_min_(x_min), x_max_(x_max), n_cells_(n_cells)
  {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
      throw InvalidConfig("grid requires finite bounds with x_max > x_min");
    }
    if (n_cells < min_cells) {
      throw InvalidConfig("grid requires at least 4 cells");
    }
    dx_ = (x_max - x_min) / static_cast<double>(n_cells);
  }

  [[nodiscard]] double x_min() const { return x_min_; }
  [[nodiscard]] double x_max() const { return x_max_; }
  [[nodiscard]] std::size_t n_cells() const { return n_cells_; }
  [[nodiscard]] double dx() const { return dx_; }

  /// Center of cell i, zero-based.
  [[nodiscard]] double center(std::size_t i) const
  {
    return x_min_ + (static_cast<double>(i) + 0.5) * dx_;
  }

private:
  double x_min_;
  double x_max_;
  std::size_t n_cells_;
  double dx_;
};

} // namespace sodflux
