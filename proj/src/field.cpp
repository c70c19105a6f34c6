#include "gprox/field.hpp"

#include <cmath>
#include <stdexcept>

#include "gprox/kernels.hpp"

namespace gprox {

namespace {
const kernels::KernelTable& K() { return kernels::active(); }

void require_same(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw std::invalid_argument("field: grid specs do not match");
}
}  // namespace

ScalarField::ScalarField(GridSpec spec, std::vector<double> values)
    : spec_(spec), v_(std::move(values)) {
  if (v_.size() != spec_.cells())
    throw std::invalid_argument("ScalarField: values length must be M^2");
}

VectorField grad(const ScalarField& u) {
  VectorField g(u.spec());
  K().grad(u.data(), g.x(), g.y(), u.side(), u.spacing());
  return g;
}

ScalarField div(const VectorField& p) {
  ScalarField d(p.spec());
  K().divergence(p.x(), p.y(), d.data(), p.side(), p.spacing());
  return d;
}

double inner_l2(const ScalarField& a, const ScalarField& b) {
  require_same(a.spec(), b.spec());
  const double h = a.spacing();
  return h * h * K().dot(a.data(), b.data(), a.size());
}

double inner_l2(const VectorField& a, const VectorField& b) {
  require_same(a.spec(), b.spec());
  const double h = a.spacing();
  return h * h * (K().dot(a.x(), b.x(), a.size()) + K().dot(a.y(), b.y(), a.size()));
}

double norm_l2(const ScalarField& a) { return std::sqrt(inner_l2(a, a)); }
double norm_l2(const VectorField& a) { return std::sqrt(inner_l2(a, a)); }

double norm_l1(const ScalarField& a) {
  const double h = a.spacing();
  double s = 0.0;
  for (double v : a.values()) s += std::fabs(v);
  return h * h * s;
}

double norm_l1(const VectorField& a) {
  const double h = a.spacing();
  return h * h * K().iso_l1(a.x(), a.y(), a.size());
}

double norm_linf(const ScalarField& a) { return K().max_abs(a.data(), a.size()); }

double norm_linf(const VectorField& a) {
  return std::sqrt(K().iso_max_sq(a.x(), a.y(), a.size()));
}

double mean(const ScalarField& u) {
  const double h = u.spacing();
  return h * h * K().sum(u.data(), u.size());
}

double tv_seminorm(const ScalarField& u) { return norm_l1(grad(u)); }

ScalarField rasterize_disc(GridSpec spec, std::array<double, 2> center, double radius,
                           bool mass_normalized) {
  if (!(radius > 0.0) || center[0] - radius <= 0.0 || center[0] + radius >= 1.0 ||
      center[1] - radius <= 0.0 || center[1] + radius >= 1.0)
    throw std::invalid_argument("rasterize_disc: disc must lie strictly inside (0,1)^2");
  ScalarField out(spec);
  const double h = spec.spacing();
  const double r2 = radius * radius;
  for (int j = 0; j < spec.side; ++j) {
    const double y = (j + 0.5) * h - center[1];
    for (int i = 0; i < spec.side; ++i) {
      const double x = (i + 0.5) * h - center[0];
      if (x * x + y * y < r2) out(i, j) = 1.0;
    }
  }
  if (mass_normalized) {
    const double m = mean(out);
    if (m <= 0.0) throw std::invalid_argument("rasterize_disc: disc covers no pixel center");
    scale(out, 1.0 / m);
  }
  return out;
}

ScalarField rasterize_delta(GridSpec spec, std::array<double, 2> point) {
  if (point[0] <= 0.0 || point[0] >= 1.0 || point[1] <= 0.0 || point[1] >= 1.0)
    throw std::invalid_argument("rasterize_delta: point must lie in the open square");
  const double h = spec.spacing();
  auto cell = [&](double c) {
    int k = static_cast<int>(std::floor(c * spec.side));
    if (k >= spec.side) k = spec.side - 1;
    return k;
  };
  ScalarField out(spec);
  out(cell(point[0]), cell(point[1])) = 1.0 / (h * h);
  return out;
}

void scale(ScalarField& a, double s) { K().scal(s, a.data(), a.size()); }

void scale(VectorField& a, double s) {
  K().scal(s, a.x(), a.size());
  K().scal(s, a.y(), a.size());
}

void add_scaled(ScalarField& y, double a, const ScalarField& x) {
  require_same(y.spec(), x.spec());
  K().axpy(a, x.data(), y.data(), y.size());
}

void add_scaled(VectorField& y, double a, const VectorField& x) {
  require_same(y.spec(), x.spec());
  K().axpy(a, x.x(), y.x(), y.size());
  K().axpy(a, x.y(), y.y(), y.size());
}

ScalarField lincomb(double a, const ScalarField& x, double b, const ScalarField& y) {
  require_same(x.spec(), y.spec());
  ScalarField out(x.spec());
  K().lincomb2(out.data(), a, x.data(), b, y.data(), out.size());
  return out;
}

VectorField lincomb(double a, const VectorField& x, double b, const VectorField& y) {
  require_same(x.spec(), y.spec());
  VectorField out(x.spec());
  K().lincomb2(out.x(), a, x.x(), b, y.x(), out.size());
  K().lincomb2(out.y(), a, x.y(), b, y.y(), out.size());
  return out;
}

}  // namespace gprox
