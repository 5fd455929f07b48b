#include "weissler/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace weissler::kernels::scalar {

namespace {

struct Accumulator {
    double s = 0.0;
    double c = 0.0;

    void add(double x) noexcept {
        const double t = s + x;
        const double z = t - s;
        c += (s - (t - z)) + (x - z);
        s = t;
    }
};

}  // namespace

double sum(std::span<const double> x) noexcept {
    Accumulator acc;
    for (double v : x) acc.add(v);
    return acc.s + acc.c;
}

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    const std::size_t n = std::min(x.size(), y.size());
    Accumulator acc;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = x[i] * y[i];
        acc.c += std::fma(x[i], y[i], -p);
        acc.add(p);
    }
    return acc.s + acc.c;
}

void convolve(std::span<const double> a, std::span<const double> b,
              std::span<double> out) noexcept {
    std::fill(out.begin(), out.end(), 0.0);
    const std::size_t K = out.size();
    for (std::size_t j = 0; j < a.size() && j < K; ++j) {
        const double aj = a[j];
        const std::size_t stop = std::min(K, j + b.size());
        for (std::size_t k = j; k < stop; ++k) out[k] += aj * b[k - j];
    }
}

}  // namespace weissler::kernels::scalar
