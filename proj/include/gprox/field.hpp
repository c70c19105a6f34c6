#pragma once

#include <array>
#include <span>
#include <vector>

#include "gprox/grid.hpp"

// Scalar and 2-component vector fields on the uniform grid, plus the
// discrete calculus used everywhere else: forward-difference gradient with
// homogeneous Neumann closure, its exact negative adjoint as divergence,
// and h²-weighted norms so that energies and step sizes stay comparable
// across grid sizes. All operations are pure; fields are plain values and
// safe to move between threads.

namespace gprox {

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(GridSpec spec, double fill = 0.0)
      : spec_(spec), v_(spec.cells(), fill) {}
  ScalarField(GridSpec spec, std::vector<double> values);

  const GridSpec& spec() const { return spec_; }
  int side() const { return spec_.side; }
  double spacing() const { return spec_.spacing(); }
  std::size_t size() const { return v_.size(); }

  double operator()(int i, int j) const { return v_[spec_.index(i, j)]; }
  double& operator()(int i, int j) { return v_[spec_.index(i, j)]; }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  std::span<double> values() { return v_; }
  std::span<const double> values() const { return v_; }

 private:
  GridSpec spec_;
  std::vector<double> v_;
};

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(GridSpec spec, double fill = 0.0)
      : spec_(spec), x_(spec.cells(), fill), y_(spec.cells(), fill) {}

  const GridSpec& spec() const { return spec_; }
  int side() const { return spec_.side; }
  double spacing() const { return spec_.spacing(); }
  std::size_t size() const { return x_.size(); }

  double* x() { return x_.data(); }
  const double* x() const { return x_.data(); }
  double* y() { return y_.data(); }
  const double* y() const { return y_.data(); }

  double& x(int i, int j) { return x_[spec_.index(i, j)]; }
  double x(int i, int j) const { return x_[spec_.index(i, j)]; }
  double& y(int i, int j) { return y_[spec_.index(i, j)]; }
  double y(int i, int j) const { return y_[spec_.index(i, j)]; }

 private:
  GridSpec spec_;
  std::vector<double> x_, y_;
};

// ---- discrete calculus ----

/// Forward difference with zero closure on the last column/row, so that
/// grad matches the even-reflection Neumann convention.
VectorField grad(const ScalarField& u);

/// Exact negative adjoint of grad: (grad u, p)_Z = -(u, div p)_H for all
/// u, p under the h²-weighted inner products.
ScalarField div(const VectorField& p);

// ---- h²-weighted norms and inner products ----

double inner_l2(const ScalarField& a, const ScalarField& b);
double inner_l2(const VectorField& a, const VectorField& b);
double norm_l2(const ScalarField& a);
double norm_l2(const VectorField& a);
double norm_l1(const ScalarField& a);
double norm_l1(const VectorField& a);  // isotropic: h²·Σ √(px²+py²)
double norm_linf(const ScalarField& a);
double norm_linf(const VectorField& a);  // max over pixels of √(px²+py²)

/// h²·Σ u — the integral over [0,1]², which is also the mean.
double mean(const ScalarField& u);

/// ‖grad u‖_L¹ (isotropic).
double tv_seminorm(const ScalarField& u);

// ---- test images and measures ----

/// Indicator of a disc sampled at pixel centers; the disc must lie
/// strictly inside (0,1)². With mass_normalized, rescaled so h²·Σ = 1.
ScalarField rasterize_disc(GridSpec spec, std::array<double, 2> center, double radius,
                           bool mass_normalized = false);

/// Unit point mass: value 1/h² on the pixel containing the point
/// (half-open cells [kh,(k+1)h)); the point must lie in the open square.
ScalarField rasterize_delta(GridSpec spec, std::array<double, 2> point);

// ---- arithmetic helpers used by the solver loops ----

void scale(ScalarField& a, double s);
void scale(VectorField& a, double s);
void add_scaled(ScalarField& y, double a, const ScalarField& x);  // y += a·x
void add_scaled(VectorField& y, double a, const VectorField& x);
ScalarField lincomb(double a, const ScalarField& x, double b, const ScalarField& y);
VectorField lincomb(double a, const VectorField& x, double b, const VectorField& y);

}  // namespace gprox
