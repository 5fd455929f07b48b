#include "weissler/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace weissler::kernels {

namespace {

[[maybe_unused]] bool scalar_forced() noexcept {
    const char* v = std::getenv("WEISSLER_LAB_SIMD");
    return v != nullptr && std::string_view(v) == "scalar";
}

struct Table {
    Backend backend;
    double (*sum)(std::span<const double>) noexcept;
    double (*dot)(std::span<const double>, std::span<const double>) noexcept;
    void (*convolve)(std::span<const double>, std::span<const double>,
                     std::span<double>) noexcept;
};

Table select() noexcept {
#if defined(WEISSLER_HAVE_AVX2)
    if (!scalar_forced() && backend_available(Backend::Avx2))
        return {Backend::Avx2, &avx2::sum, &avx2::dot, &avx2::convolve};
#endif
    return {Backend::Scalar, &scalar::sum, &scalar::dot, &scalar::convolve};
}

const Table& table() noexcept {
    static const Table t = select();
    return t;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

bool backend_available(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if defined(WEISSLER_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() noexcept { return table().backend; }

double sum(std::span<const double> x) noexcept { return table().sum(x); }

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    return table().dot(x, y);
}

void convolve(std::span<const double> a, std::span<const double> b,
              std::span<double> out) noexcept {
    table().convolve(a, b, out);
}

}  // namespace weissler::kernels
