#pragma once

#include <cstddef>
#include <stdexcept>

namespace gprox {

/// Uniform M×M grid over [0,1]², spacing h = 1/M, samples at pixel
/// centers ((i+1/2)h, (j+1/2)h). Storage order is row-major: index
/// j*M + i with i the x column and j the y row.
struct GridSpec {
  int side = 0;

  GridSpec() = default;
  explicit GridSpec(int m) : side(m) {
    if (m < 2) throw std::invalid_argument("GridSpec: side must be >= 2");
  }

  double spacing() const { return 1.0 / side; }
  std::size_t cells() const { return static_cast<std::size_t>(side) * side; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * side + i; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace gprox
