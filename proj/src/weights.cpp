#include "weissler/weights.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "weissler/error.hpp"
#include "weissler/quadrature.hpp"
#include "weissler/special.hpp"

namespace weissler {

MomentValue raw_quadrature_moment(const RadialWeight& w, unsigned m, double tol);

namespace {

std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::optional<double> parse_double(std::string_view s) {
    double v = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
    if (first < last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
    return v;
}

// Classical-weight closed form, Gamma(alpha) Gamma(n+1) / Gamma(alpha+n)
// with n = m/2.  Past the double range of Gamma, switch to lgamma.
double classical_moment(double alpha, double m) {
    const double n = 0.5 * m;
    if (alpha + n <= 170.0) return gamma_function(alpha) * gamma_function(n + 1.0) / gamma_function(alpha + n);
    return std::exp(std::lgamma(alpha) + std::lgamma(n + 1.0) - std::lgamma(alpha + n));
}

}  // namespace

RadialWeight RadialWeight::classical(double alpha) {
    if (!std::isfinite(alpha) || !(alpha > 1.0))
        throw InputError("classical weight requires alpha > 1");
    RadialWeight w;
    w.kind_ = Kind::Classical;
    w.parameter_ = alpha;
    w.label_ = "classical:alpha=" + format_number(alpha);
    return w;
}

RadialWeight RadialWeight::power(double m) {
    if (!std::isfinite(m) || !(m >= 0.0)) throw InputError("power weight requires m >= 0");
    RadialWeight w;
    w.kind_ = Kind::Power;
    w.parameter_ = m;
    w.label_ = "power:m=" + format_number(m);
    return w;
}

RadialWeight RadialWeight::counterexample() {
    RadialWeight w;
    w.kind_ = Kind::Counterexample;
    w.parameter_ = 0.0;
    w.breakpoints_ = {0.5};
    w.label_ = "counterexample";
    return w;
}

RadialWeight RadialWeight::custom(std::function<double(double)> evaluator, bool singular_at_zero,
                                  std::vector<double> breakpoints, std::string label,
                                  double tol) {
    if (!evaluator) throw InputError("custom weight requires an evaluator");
    RadialWeight w;
    w.kind_ = Kind::Custom;
    w.parameter_ = 0.0;
    w.singular_at_zero_ = singular_at_zero;
    std::sort(breakpoints.begin(), breakpoints.end());
    w.breakpoints_ = std::move(breakpoints);
    w.evaluator_ = std::make_shared<const std::function<double(double)>>(std::move(evaluator));
    w.label_ = std::move(label);
    const MomentValue h0 = raw_quadrature_moment(w, 0, tol);
    if (!(h0.value > 0.0))
        throw InputError("custom weight has zero total mass (h_0 = 0)");
    w.norm_ = h0.value;
    w.norm_error_ = h0.provenance.error_bound;
    return w;
}

RadialWeight RadialWeight::from_table(std::vector<double> rho, std::vector<double> values,
                                      std::string label) {
    if (rho.empty() || rho.size() != values.size())
        throw InputError("weight table needs matching, nonempty rho and w columns");
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > 0.0 && rho[i] < 1.0))
            throw InputError("weight table: rho must lie in (0, 1)");
        if (i > 0 && !(rho[i] > rho[i - 1]))
            throw InputError("weight table: rho must be strictly increasing");
        if (!std::isfinite(values[i]) || values[i] < 0.0)
            throw InputError("weight table: w must be finite and nonnegative");
    }
    auto eval = [rho, values](double r) {
        if (r <= rho.front()) return values.front();
        if (r >= rho.back()) return values.back();
        const auto it = std::upper_bound(rho.begin(), rho.end(), r);
        const std::size_t i = static_cast<std::size_t>(it - rho.begin());
        const double t = (r - rho[i - 1]) / (rho[i] - rho[i - 1]);
        return values[i - 1] + t * (values[i] - values[i - 1]);
    };
    return custom(eval, false, rho, std::move(label));
}

double RadialWeight::raw(double rho) const {
    switch (kind_) {
        case Kind::Classical:
            return 2.0 * (parameter_ - 1.0) * std::pow((1.0 - rho) * (1.0 + rho), parameter_ - 2.0);
        case Kind::Power:
            return (parameter_ + 2.0) * std::pow(rho, parameter_);
        case Kind::Counterexample:
            return rho <= 0.5 ? 1.5 / rho : 0.5 / rho;
        case Kind::Custom: {
            const double v = (*evaluator_)(rho);
            if (!std::isfinite(v)) throw InputError("weight evaluator returned a non-finite value");
            if (v < 0.0) throw InputError("weight evaluator returned a negative value");
            return v;
        }
    }
    return 0.0;
}

double RadialWeight::operator()(double rho) const { return raw(rho) / norm_; }

MomentValue raw_quadrature_moment(const RadialWeight& w, unsigned m, double tol) {
    const double md = static_cast<double>(m);
    QuadratureResult q;
    if (w.kind() == RadialWeight::Kind::Classical && w.parameter() < 2.0) {
        // rho^2 = 1 - t^(1/(alpha-1)) removes the (1-rho^2)^(alpha-2) singularity:
        // h_m = int_0^1 (1 - t^(1/(alpha-1)))^(m/2) dt
        const double p = 1.0 / (w.parameter() - 1.0);
        q = integrate([p, md](double t) { return std::pow(1.0 - std::pow(t, p), 0.5 * md); }, 0.0,
                      1.0, tol);
    } else if (w.singular_at_zero()) {
        std::vector<double> cuts;
        for (double b : w.breakpoints()) cuts.push_back(std::sqrt(b));
        q = integrate(
            [&w, md](double x) {
                const double rho = x * x;
                return 2.0 * x * std::pow(rho, md + 1.0) * w.raw(rho);
            },
            0.0, 1.0, tol, cuts);
    } else {
        q = integrate([&w, md](double rho) { return std::pow(rho, md + 1.0) * w.raw(rho); }, 0.0,
                      1.0, tol, w.breakpoints());
    }
    return {q.value, {Provenance::Source::Quadrature, q.error_bound}};
}

std::optional<double> closed_form_moment(const RadialWeight& w, double m) {
    switch (w.kind()) {
        case RadialWeight::Kind::Classical: return classical_moment(w.parameter(), m);
        case RadialWeight::Kind::Power: return (2.0 + w.parameter()) / (2.0 + w.parameter() + m);
        case RadialWeight::Kind::Counterexample:
            return (1.0 + std::exp2(-m)) / (2.0 * (1.0 + m));
        case RadialWeight::Kind::Custom: return std::nullopt;
    }
    return std::nullopt;
}

MomentValue moment(const RadialWeight& w, unsigned m, double tol, MomentMethod method) {
    if (!(tol > 0.0)) throw InputError("moment: tolerance must be positive");
    if (method == MomentMethod::Auto) {
        if (auto v = closed_form_moment(w, m)) return {*v, {Provenance::Source::ClosedForm, 0.0}};
    }
    const double norm = w.normalization();
    if (w.kind() == RadialWeight::Kind::Custom && m == 0)
        return {1.0, {Provenance::Source::ClosedForm, 0.0}};
    const MomentValue raw = raw_quadrature_moment(w, m, tol * std::min(1.0, norm) / 2.0);
    const double value = raw.value / norm;
    const double bound = (raw.provenance.error_bound + value * w.normalization_error()) / norm;
    return {value, {Provenance::Source::Quadrature, bound}};
}

MomentSequence::MomentSequence(std::vector<double> values, std::vector<Provenance> provenance)
    : values_(std::move(values)), provenance_(std::move(provenance)) {
    if (values_.empty()) throw InputError("moment sequence must contain h_0");
    if (provenance_.size() != values_.size())
        throw InputError("moment sequence: provenance length mismatch");
    for (double v : values_)
        if (!std::isfinite(v) || v < 0.0)
            throw InputError("moment sequence entries must be finite and nonnegative");
    if (values_[0] != 1.0) throw InputError("moment sequence must be normalized (h_0 = 1)");
}

MomentSequence MomentSequence::from_values(std::vector<double> values) {
    if (values.empty()) throw InputError("moment sequence must contain h_0");
    const double h0 = values[0];
    if (!std::isfinite(h0) || !(h0 > 0.0)) throw InputError("h_0 must be positive");
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::isfinite(values[k]) || values[k] < 0.0)
            throw InputError("moment sequence entries must be finite and nonnegative");
        if (k > 0 && values[k] > values[k - 1] * (1.0 + 1e-12))
            throw InputError("moment sequence must be nonincreasing");
    }
    for (double& v : values) v /= h0;
    values[0] = 1.0;
    std::vector<Provenance> prov(values.size());
    return MomentSequence(std::move(values), std::move(prov));
}

double MomentSequence::max_error_bound() const noexcept {
    double e = 0.0;
    for (const auto& p : provenance_) e = std::max(e, p.error_bound);
    return e;
}

MomentSequence MomentSequence::prefix(std::size_t N) const {
    if (N > max_index()) throw InputError("prefix longer than the sequence");
    return MomentSequence(std::vector<double>(values_.begin(), values_.begin() + N + 1),
                          std::vector<Provenance>(provenance_.begin(), provenance_.begin() + N + 1));
}

MomentSequence moment_sequence(const RadialWeight& w, std::size_t N, double tol) {
    std::vector<double> values(N + 1);
    std::vector<Provenance> prov(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        const MomentValue mv = moment(w, static_cast<unsigned>(2 * k), tol);
        values[k] = mv.value;
        prov[k] = mv.provenance;
    }
    values[0] = 1.0;
    return MomentSequence(std::move(values), std::move(prov));
}

RadialWeight load_weight_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open weight table '" + path.string() + "'");
    std::vector<double> rho, w;
    std::string line;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[line.find_first_not_of(" \t")] == '#') continue;
        const auto comma = line.find(',');
        std::optional<double> r, v;
        if (comma != std::string::npos) {
            r = parse_double(std::string_view(line).substr(0, comma));
            v = parse_double(std::string_view(line).substr(comma + 1));
        }
        if (!r || !v) {
            if (first_data_line) {
                first_data_line = false;
                continue;
            }
            throw InputError("weight table: malformed row '" + line + "'");
        }
        first_data_line = false;
        rho.push_back(*r);
        w.push_back(*v);
    }
    return RadialWeight::from_table(std::move(rho), std::move(w), "table:" + path.string());
}

RadialWeight parse_weight_spec(std::string_view spec) {
    auto param = [&](std::string_view prefix) -> double {
        const auto v = parse_double(spec.substr(prefix.size()));
        if (!v) throw InputError("bad number in weight spec '" + std::string(spec) + "'");
        return *v;
    };
    if (spec == "counterexample") return RadialWeight::counterexample();
    if (spec.starts_with("classical:alpha=")) return RadialWeight::classical(param("classical:alpha="));
    if (spec.starts_with("power:m=")) return RadialWeight::power(param("power:m="));
    if (spec.starts_with("table:") && spec.size() > 6)
        return load_weight_table(std::filesystem::path(std::string(spec.substr(6))));
    throw InputError("unknown weight spec '" + std::string(spec) + "'");
}

}  // namespace weissler
