#include "gprox/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <immintrin.h>

// AVX2+FMA kernels, 4 doubles per lane group. Unaligned loads throughout
// (field storage is std::vector). Scalar tails handle n % 4 and the stencil
// boundaries. Reductions keep 4 partial sums and fold once at the end, so
// results may differ from the scalar table by reassociation roundoff only.

namespace gprox::kernels {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void scal(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4)
    _mm256_storeu_pd(x + k, _mm256_mul_pd(va, _mm256_loadu_pd(x + k)));
  for (; k < n; ++k) x[k] *= a;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vy = _mm256_loadu_pd(y + k);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), vy);
    _mm256_storeu_pd(y + k, vy);
  }
  for (; k < n; ++k) y[k] += a * x[k];
}

void lincomb2(double* out, double a, const double* x, double b, const double* y,
              std::size_t n) {
  const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d r = _mm256_mul_pd(vb, _mm256_loadu_pd(y + k));
    r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), r);
    _mm256_storeu_pd(out + k, r);
  }
  for (; k < n; ++k) out[k] = a * x[k] + b * y[k];
}

void lincomb3(double* out, double a, const double* x, double b, const double* y, double c,
              const double* z, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b), vc = _mm256_set1_pd(c);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d r = _mm256_mul_pd(vc, _mm256_loadu_pd(z + k));
    r = _mm256_fmadd_pd(vb, _mm256_loadu_pd(y + k), r);
    r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + k), r);
    _mm256_storeu_pd(out + k, r);
  }
  for (; k < n; ++k) out[k] = a * x[k] + b * y[k] + c * z[k];
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + k), _mm256_loadu_pd(b + k), acc);
  double s = hsum(acc);
  for (; k < n; ++k) s += a[k] * b[k];
  return s;
}

double sum(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + k));
  double s = hsum(acc);
  for (; k < n; ++k) s += a[k];
  return s;
}

double max_abs(const double* a, std::size_t n) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4)
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(signmask, _mm256_loadu_pd(a + k)));
  double m = hmax(acc);
  for (; k < n; ++k) m = std::max(m, std::fabs(a[k]));
  return m;
}

double iso_l1(const double* px, const double* py, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vx = _mm256_loadu_pd(px + k);
    const __m256d vy = _mm256_loadu_pd(py + k);
    acc = _mm256_add_pd(acc, _mm256_sqrt_pd(_mm256_fmadd_pd(vx, vx, _mm256_mul_pd(vy, vy))));
  }
  double s = hsum(acc);
  for (; k < n; ++k) s += std::sqrt(px[k] * px[k] + py[k] * py[k]);
  return s;
}

double iso_max_sq(const double* px, const double* py, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vx = _mm256_loadu_pd(px + k);
    const __m256d vy = _mm256_loadu_pd(py + k);
    acc = _mm256_max_pd(acc, _mm256_fmadd_pd(vx, vx, _mm256_mul_pd(vy, vy)));
  }
  double m = hmax(acc);
  for (; k < n; ++k) m = std::max(m, px[k] * px[k] + py[k] * py[k]);
  return m;
}

void ascent_project(double* px, double* py, const double* gx, const double* gy, double s,
                    std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s), one = _mm256_set1_pd(1.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d qx = _mm256_fmadd_pd(vs, _mm256_loadu_pd(gx + k), _mm256_loadu_pd(px + k));
    const __m256d qy = _mm256_fmadd_pd(vs, _mm256_loadu_pd(gy + k), _mm256_loadu_pd(py + k));
    const __m256d nrm = _mm256_sqrt_pd(_mm256_fmadd_pd(qx, qx, _mm256_mul_pd(qy, qy)));
    const __m256d d = _mm256_max_pd(one, nrm);
    _mm256_storeu_pd(px + k, _mm256_div_pd(qx, d));
    _mm256_storeu_pd(py + k, _mm256_div_pd(qy, d));
  }
  for (; k < n; ++k) {
    const double qx = px[k] + s * gx[k];
    const double qy = py[k] + s * gy[k];
    const double d = std::max(1.0, std::sqrt(qx * qx + qy * qy));
    px[k] = qx / d;
    py[k] = qy / d;
  }
}

void grad(const double* u, double* gx, double* gy, int m, double h) {
  const double invh = 1.0 / h;
  const __m256d vinvh = _mm256_set1_pd(invh);
  for (int j = 0; j < m; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * m;
    int i = 0;
    for (; i + 4 <= m - 1; i += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(u + row + i + 1),
                                      _mm256_loadu_pd(u + row + i));
      _mm256_storeu_pd(gx + row + i, _mm256_mul_pd(d, vinvh));
    }
    for (; i + 1 < m; ++i) gx[row + i] = (u[row + i + 1] - u[row + i]) * invh;
    gx[row + m - 1] = 0.0;
  }
  for (int j = 0; j + 1 < m; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * m;
    int i = 0;
    for (; i + 4 <= m; i += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(u + row + m + i),
                                      _mm256_loadu_pd(u + row + i));
      _mm256_storeu_pd(gy + row + i, _mm256_mul_pd(d, vinvh));
    }
    for (; i < m; ++i) gy[row + i] = (u[row + m + i] - u[row + i]) * invh;
  }
  const std::size_t last = static_cast<std::size_t>(m - 1) * m;
  for (int i = 0; i < m; ++i) gy[last + i] = 0.0;
}

void divergence(const double* px, const double* py, double* out, int m, double h) {
  const double invh = 1.0 / h;
  const __m256d vinvh = _mm256_set1_pd(invh);
  for (int j = 0; j < m; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * m;
    out[row] = px[row] * invh;
    int i = 1;
    for (; i + 4 <= m - 1; i += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(px + row + i),
                                      _mm256_loadu_pd(px + row + i - 1));
      _mm256_storeu_pd(out + row + i, _mm256_mul_pd(d, vinvh));
    }
    for (; i + 1 < m; ++i) out[row + i] = (px[row + i] - px[row + i - 1]) * invh;
    out[row + m - 1] = -px[row + m - 2] * invh;
  }
  {
    int i = 0;
    for (; i + 4 <= m; i += 4) {
      __m256d r = _mm256_loadu_pd(out + i);
      r = _mm256_fmadd_pd(_mm256_loadu_pd(py + i), vinvh, r);
      _mm256_storeu_pd(out + i, r);
    }
    for (; i < m; ++i) out[i] += py[i] * invh;
  }
  for (int j = 1; j + 1 < m; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * m;
    int i = 0;
    for (; i + 4 <= m; i += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(py + row + i),
                                      _mm256_loadu_pd(py + row - m + i));
      __m256d r = _mm256_loadu_pd(out + row + i);
      r = _mm256_fmadd_pd(d, vinvh, r);
      _mm256_storeu_pd(out + row + i, r);
    }
    for (; i < m; ++i) out[row + i] += (py[row + i] - py[row - m + i]) * invh;
  }
  {
    const std::size_t lastrow = static_cast<std::size_t>(m - 1) * m;
    int i = 0;
    const __m256d vneg = _mm256_set1_pd(-invh);
    for (; i + 4 <= m; i += 4) {
      __m256d r = _mm256_loadu_pd(out + lastrow + i);
      r = _mm256_fmadd_pd(_mm256_loadu_pd(py + lastrow - m + i), vneg, r);
      _mm256_storeu_pd(out + lastrow + i, r);
    }
    for (; i < m; ++i) out[lastrow + i] += -py[lastrow - m + i] * invh;
  }
}

void helmholtz_scale(double* c, const double* lam, double a, double scale, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a), vsc = _mm256_set1_pd(scale);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d num = _mm256_mul_pd(vsc, _mm256_loadu_pd(c + k));
    const __m256d den = _mm256_add_pd(va, _mm256_loadu_pd(lam + k));
    _mm256_storeu_pd(c + k, _mm256_div_pd(num, den));
  }
  for (; k < n; ++k) c[k] = scale * c[k] / (a + lam[k]);
}

void poisson_scale(double* c, const double* lam, double scale, std::size_t n) {
  const __m256d vsc = _mm256_set1_pd(-scale);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d num = _mm256_mul_pd(vsc, _mm256_loadu_pd(c + k));
    _mm256_storeu_pd(c + k, _mm256_div_pd(num, _mm256_loadu_pd(lam + k)));
  }
  for (; k < n; ++k) c[k] = -scale * c[k] / lam[k];
}

}  // namespace

const KernelTable& avx2_table() {
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
