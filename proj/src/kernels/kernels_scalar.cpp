#include "gprox/kernels.hpp"

#include <algorithm>
#include <cmath>

// Scalar reference kernels. These define the semantics; the SIMD variants
// must agree with them up to floating-point reassociation.

namespace gprox::kernels {
namespace {

void scal(double a, double* x, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) x[k] *= a;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += a * x[k];
}

void lincomb2(double* out, double a, const double* x, double b, const double* y,
              std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k];
}

void lincomb3(double* out, double a, const double* x, double b, const double* y, double c,
              const double* z, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k] + c * z[k];
}

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
  return s;
}

double sum(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += a[k];
  return s;
}

double max_abs(const double* a, std::size_t n) {
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::fabs(a[k]));
  return m;
}

double iso_l1(const double* px, const double* py, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += std::sqrt(px[k] * px[k] + py[k] * py[k]);
  return s;
}

double iso_max_sq(const double* px, const double* py, std::size_t n) {
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, px[k] * px[k] + py[k] * py[k]);
  return m;
}

void ascent_project(double* px, double* py, const double* gx, const double* gy, double s,
                    std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double qx = px[k] + s * gx[k];
    const double qy = py[k] + s * gy[k];
    const double d = std::max(1.0, std::sqrt(qx * qx + qy * qy));
    px[k] = qx / d;
    py[k] = qy / d;
  }
}

void grad(const double* u, double* gx, double* gy, int m, double h) {
  const double invh = 1.0 / h;
  for (int j = 0; j < m; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * m;
    for (int i = 0; i + 1 < m; ++i) gx[row + i] = (u[row + i + 1] - u[row + i]) * invh;
    gx[row + m - 1] = 0.0;
  }
  for (int j = 0; j + 1 < m; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * m;
    for (int i = 0; i < m; ++i) gy[row + i] = (u[row + m + i] - u[row + i]) * invh;
  }
  const std::size_t last = static_cast<std::size_t>(m - 1) * m;
  for (int i = 0; i < m; ++i) gy[last + i] = 0.0;
}

void divergence(const double* px, const double* py, double* out, int m, double h) {
  const double invh = 1.0 / h;
  // x-part; the adjoint of the zero closure drops the last column of px
  for (int j = 0; j < m; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * m;
    out[row] = px[row] * invh;
    for (int i = 1; i + 1 < m; ++i) out[row + i] = (px[row + i] - px[row + i - 1]) * invh;
    out[row + m - 1] = -px[row + m - 2] * invh;
  }
  // y-part accumulates
  {
    const std::size_t lastrow = static_cast<std::size_t>(m - 1) * m;
    for (int i = 0; i < m; ++i) out[i] += py[i] * invh;
    for (int j = 1; j + 1 < m; ++j) {
      const std::size_t row = static_cast<std::size_t>(j) * m;
      for (int i = 0; i < m; ++i) out[row + i] += (py[row + i] - py[row - m + i]) * invh;
    }
    for (int i = 0; i < m; ++i) out[lastrow + i] += -py[lastrow - m + i] * invh;
  }
}

void helmholtz_scale(double* c, const double* lam, double a, double scale, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) c[k] = scale * c[k] / (a + lam[k]);
}

void poisson_scale(double* c, const double* lam, double scale, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) c[k] = -scale * c[k] / lam[k];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t = {
      .scal = scal,
      .axpy = axpy,
      .lincomb2 = lincomb2,
      .lincomb3 = lincomb3,
      .dot = dot,
      .sum = sum,
      .max_abs = max_abs,
      .iso_l1 = iso_l1,
      .iso_max_sq = iso_max_sq,
      .ascent_project = ascent_project,
      .grad = grad,
      .divergence = divergence,
      .helmholtz_scale = helmholtz_scale,
      .poisson_scale = poisson_scale,
  };
  return t;
}

}  // namespace gprox::kernels
