#pragma once

#include <span>
#include <string_view>

// Data-parallel inner loops.  Each kernel has a scalar reference version and,
// where the build and the CPU allow it, an AVX2 version.  The dispatching
// entry points pick the variant once at first use.
//
// Setting WEISSLER_LAB_SIMD=scalar in the environment forces the scalar path.

namespace weissler::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b) noexcept;

// True when the variant was compiled in and the running CPU supports it.
bool backend_available(Backend b) noexcept;

Backend active_backend() noexcept;

// Compensated sum (Ogita-Rump-Oishi Sum2): as accurate as summing in twice
// the working precision, then rounding once.
double sum(std::span<const double> x) noexcept;

// Compensated dot product (Dot2, error-free products via fma).
double dot(std::span<const double> x, std::span<const double> y) noexcept;

// out[k] = sum_j a[j] * b[k - j] for 0 <= k < out.size(); terms with an
// index outside a or b are zero.  Accumulation order is j-ascending for every
// k in both variants, so the results are bit-identical.
void convolve(std::span<const double> a, std::span<const double> b,
              std::span<double> out) noexcept;

namespace scalar {
double sum(std::span<const double> x) noexcept;
double dot(std::span<const double> x, std::span<const double> y) noexcept;
void convolve(std::span<const double> a, std::span<const double> b,
              std::span<double> out) noexcept;
}  // namespace scalar

#if defined(WEISSLER_HAVE_AVX2)
namespace avx2 {
double sum(std::span<const double> x) noexcept;
double dot(std::span<const double> x, std::span<const double> y) noexcept;
void convolve(std::span<const double> a, std::span<const double> b,
              std::span<double> out) noexcept;
}  // namespace avx2
#endif

}  // namespace weissler::kernels
