#include "weissler/kernels.hpp"

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace weissler::kernels::avx2 {

namespace {

// Lane-wise TwoSum: s <- s + x, c accumulates the rounding error.
inline void two_sum(__m256d& s, __m256d& c, __m256d x) noexcept {
    const __m256d t = _mm256_add_pd(s, x);
    const __m256d z = _mm256_sub_pd(t, s);
    const __m256d e = _mm256_add_pd(_mm256_sub_pd(s, _mm256_sub_pd(t, z)),
                                    _mm256_sub_pd(x, z));
    c = _mm256_add_pd(c, e);
    s = t;
}

struct Scalar {
    double s = 0.0;
    double c = 0.0;

    void add(double x) noexcept {
        const double t = s + x;
        const double z = t - s;
        c += (s - (t - z)) + (x - z);
        s = t;
    }
};

Scalar fold(__m256d s, __m256d c) noexcept {
    alignas(32) double sl[4];
    alignas(32) double cl[4];
    _mm256_store_pd(sl, s);
    _mm256_store_pd(cl, c);
    Scalar acc;
    for (int i = 0; i < 4; ++i) acc.add(sl[i]);
    acc.c += (cl[0] + cl[1]) + (cl[2] + cl[3]);
    return acc;
}

}  // namespace

double sum(std::span<const double> x) noexcept {
    const std::size_t n = x.size();
    const double* p = x.data();
    __m256d s = _mm256_setzero_pd();
    __m256d c = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) two_sum(s, c, _mm256_loadu_pd(p + i));
    Scalar acc = fold(s, c);
    for (; i < n; ++i) acc.add(p[i]);
    return acc.s + acc.c;
}

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    const std::size_t n = std::min(x.size(), y.size());
    const double* px = x.data();
    const double* py = y.data();
    __m256d s = _mm256_setzero_pd();
    __m256d c = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(px + i);
        const __m256d b = _mm256_loadu_pd(py + i);
        const __m256d prod = _mm256_mul_pd(a, b);
        c = _mm256_add_pd(c, _mm256_fmsub_pd(a, b, prod));
        two_sum(s, c, prod);
    }
    Scalar acc = fold(s, c);
    for (; i < n; ++i) {
        const double prod = px[i] * py[i];
        acc.c += std::fma(px[i], py[i], -prod);
        acc.add(prod);
    }
    return acc.s + acc.c;
}

void convolve(std::span<const double> a, std::span<const double> b,
              std::span<double> out) noexcept {
    std::fill(out.begin(), out.end(), 0.0);
    const std::size_t K = out.size();
    double* o = out.data();
    const double* pb = b.data();
    for (std::size_t j = 0; j < a.size() && j < K; ++j) {
        const double aj = a[j];
        const __m256d va = _mm256_set1_pd(aj);
        const std::size_t stop = std::min(K, j + b.size());
        std::size_t k = j;
        // mul + add (no fma) keeps every lane bit-identical to the scalar loop.
        for (; k + 4 <= stop; k += 4) {
            const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(pb + (k - j)));
            _mm256_storeu_pd(o + k, _mm256_add_pd(_mm256_loadu_pd(o + k), prod));
        }
        for (; k < stop; ++k) o[k] += aj * pb[k - j];
    }
}

}  // namespace weissler::kernels::avx2
