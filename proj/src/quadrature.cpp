#include "weissler/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "weissler/error.hpp"
#include "weissler/kernels.hpp"

namespace weissler {

namespace {

constexpr int kOrder = 15;

// |whole - halves| understates the error of the halves when the local
// convergence rate is poor (rho^-1/2 at an endpoint gives ratio 2^-1/2).
// Scaling by 4 keeps the estimate above the true error for rates down to
// about h^0.32.
constexpr double kSafety = 4.0;

struct Rule {
    std::array<double, kOrder> nodes{};
    std::array<double, kOrder> weights{};
};

// Newton iteration on P_15 in extended precision.
Rule build_rule() {
    Rule r;
    for (int i = 0; i < kOrder; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (kOrder + 0.5L));
        long double dp = 0;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1, p1 = x;
            for (int k = 2; k <= kOrder; ++k) {
                const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = kOrder * (x * p1 - p0) / (x * x - 1);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-30L) break;
        }
        r.nodes[i] = static_cast<double>(x);
        r.weights[i] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
    }
    return r;
}

const Rule& rule() {
    static const Rule r = build_rule();
    return r;
}

double panel_rule(const std::function<double(double)>& f, double a, double b) {
    const Rule& r = rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::array<double, kOrder> values;
    for (int i = 0; i < kOrder; ++i) {
        const double v = f(mid + half * r.nodes[i]);
        if (!std::isfinite(v)) throw InputError("integrate: integrand returned a non-finite value");
        values[i] = v;
    }
    return half * kernels::dot(r.weights, values);
}

struct Panel {
    double a, b;
    double left, right;  // rule on each half
    double error;

    double value() const { return left + right; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, double whole) {
    const double m = 0.5 * (a + b);
    Panel p{a, b, panel_rule(f, a, m), panel_rule(f, m, b), 0.0};
    p.error = kSafety * std::fabs(whole - p.value());
    return p;
}

bool by_error(const Panel& x, const Panel& y) { return x.error < y.error; }

}  // namespace

std::span<const double> gauss_legendre_nodes() { return rule().nodes; }
std::span<const double> gauss_legendre_weights() { return rule().weights; }

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, std::span<const double> breakpoints,
                           int max_panels) {
    if (!(abs_tol > 0.0)) throw InputError("integrate: tolerance must be positive");
    if (!(a < b)) throw InputError("integrate: empty interval");

    std::vector<double> cuts{a};
    for (double c : breakpoints)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Panel> heap;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        heap.push_back(make_panel(f, cuts[i], cuts[i + 1], panel_rule(f, cuts[i], cuts[i + 1])));
    std::make_heap(heap.begin(), heap.end(), by_error);

    // Panels too narrow to bisect keep their error for good.
    std::vector<Panel> frozen;

    auto totals = [&](double& value, double& error, double& magnitude) {
        std::vector<double> vals, errs;
        vals.reserve(heap.size() + frozen.size());
        errs.reserve(heap.size() + frozen.size());
        magnitude = 0.0;
        for (const auto* set : {&heap, &frozen})
            for (const Panel& p : *set) {
                vals.push_back(p.value());
                errs.push_back(p.error);
                magnitude += std::fabs(p.left) + std::fabs(p.right);
            }
        value = kernels::sum(vals);
        error = kernels::sum(errs);
    };

    double value = 0.0, error = 0.0, magnitude = 0.0;
    totals(value, error, magnitude);
    while (error > abs_tol) {
        if (heap.empty() || static_cast<int>(heap.size() + frozen.size()) >= max_panels) {
            throw NumericalError("integrate: no convergence within " + std::to_string(max_panels) +
                                     " panels",
                                 value, error);
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Panel worst = heap.back();
        heap.pop_back();
        const double m = 0.5 * (worst.a + worst.b);
        if (!(m > worst.a && m < worst.b) || (worst.b - worst.a) < 1e-15 * std::fabs(worst.a)) {
            frozen.push_back(worst);
        } else {
            heap.push_back(make_panel(f, worst.a, m, worst.left));
            std::push_heap(heap.begin(), heap.end(), by_error);
            heap.push_back(make_panel(f, m, worst.b, worst.right));
            std::push_heap(heap.begin(), heap.end(), by_error);
        }
        totals(value, error, magnitude);
    }

    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * magnitude;
    return {value, error + rounding, static_cast<int>(heap.size() + frozen.size())};
}

}  // namespace weissler
