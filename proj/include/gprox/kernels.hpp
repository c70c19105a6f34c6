#pragma once

#include <cstddef>

// Data-parallel inner-loop kernels. Every entry has a scalar reference
// implementation and (on x86-64) an AVX2+FMA variant; the active table is
// selected once at startup from CPU capabilities, overridable with the
// environment variable GPROX_KERNELS=scalar|avx2|auto.
//
// Grid layout convention shared by the stencil kernels: values[j*m + i],
// i = x column, j = y row, spacing h = 1/m. grad is the forward difference
// with zero closure on the last column/row; divergence is its exact
// negative adjoint under the h²-weighted inner product.

namespace gprox::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  // elementwise, contiguous arrays of length n
  void (*scal)(double a, double* x, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  void (*lincomb2)(double* out, double a, const double* x, double b, const double* y,
                   std::size_t n);
  void (*lincomb3)(double* out, double a, const double* x, double b, const double* y,
                   double c, const double* z, std::size_t n);

  // reductions
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* a, std::size_t n);
  double (*max_abs)(const double* a, std::size_t n);
  double (*iso_l1)(const double* px, const double* py, std::size_t n);      // sum sqrt(px²+py²)
  double (*iso_max_sq)(const double* px, const double* py, std::size_t n);  // max (px²+py²)

  // p := (p + s·g) / max(1, |p + s·g|), pointwise on 2-vectors
  void (*ascent_project)(double* px, double* py, const double* gx, const double* gy,
                         double s, std::size_t n);

  // stencils on an m×m grid with spacing h
  void (*grad)(const double* u, double* gx, double* gy, int m, double h);
  void (*divergence)(const double* px, const double* py, double* out, int m, double h);

  // cosine-coefficient scalings; lam holds the spectrum of -div∘grad
  void (*helmholtz_scale)(double* c, const double* lam, double a, double scale,
                          std::size_t n);   // c = scale·c/(a+lam)
  void (*poisson_scale)(double* c, const double* lam, double scale,
                        std::size_t n);     // c = -scale·c/lam
};

// Table selected for this process (stable for its lifetime).
const KernelTable& active();
Isa active_isa();

// Named access for equivalence tests; throws if the ISA is unavailable.
const KernelTable& table(Isa isa);
bool available(Isa isa);
const char* isa_name(Isa isa);

}  // namespace gprox::kernels
