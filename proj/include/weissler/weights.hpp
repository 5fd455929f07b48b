#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weissler {

inline constexpr double kDefaultMomentTolerance = 1e-12;

// Where a moment value came from.  Closed-form values carry a zero bound.
struct Provenance {
    enum class Source { ClosedForm, Quadrature };
    Source source = Source::ClosedForm;
    double error_bound = 0.0;
};

struct MomentValue {
    double value = 0.0;
    Provenance provenance;
};

// A radial weight w(|z|) on the unit disk, normalized so that
// h_0 = int_0^1 rho w(rho) drho = 1.
//
//   Classical(alpha)   w(rho) = 2(alpha-1)(1-rho^2)^(alpha-2),  alpha > 1
//   Power(m)           w(rho) = (m+2) rho^m,                    m >= 0
//   Counterexample     w(rho) = 3/(2 rho) on [0, 1/2], 1/(2 rho) on (1/2, 1]
//   Custom             any nonnegative evaluator, rescaled at construction
//
// Instances are immutable and cheap to copy.
class RadialWeight {
public:
    enum class Kind { Classical, Power, Counterexample, Custom };

    static RadialWeight classical(double alpha);
    static RadialWeight power(double m);
    static RadialWeight counterexample();

    // The raw h_0 of the evaluator is computed here (to tol) and every moment
    // is divided by it.  singular_at_zero switches the integration variable to
    // rho = x^2, which tames integrable singularities like rho^(-3/2).
    // Breakpoints are interior points where w is not smooth.
    static RadialWeight custom(std::function<double(double)> evaluator,
                               bool singular_at_zero = false,
                               std::vector<double> breakpoints = {},
                               std::string label = "custom",
                               double tol = 1e-13);

    // Piecewise-linear weight through (rho[i], w[i]); constant outside
    // [rho.front(), rho.back()].  rho strictly increasing inside (0, 1).
    static RadialWeight from_table(std::vector<double> rho, std::vector<double> w,
                                   std::string label = "table");

    Kind kind() const noexcept { return kind_; }
    // alpha for Classical, m for Power, 0 otherwise.
    double parameter() const noexcept { return parameter_; }
    bool singular_at_zero() const noexcept { return singular_at_zero_; }
    std::span<const double> breakpoints() const noexcept { return breakpoints_; }
    bool has_closed_form() const noexcept { return kind_ != Kind::Custom; }

    // Raw h_0 before rescaling (1 for the built-in kinds) and its error bound.
    double normalization() const noexcept { return norm_; }
    double normalization_error() const noexcept { return norm_error_; }

    // Normalized weight value.
    double operator()(double rho) const;

    // Canonical spec string, e.g. "classical:alpha=2".
    const std::string& label() const noexcept { return label_; }

private:
    RadialWeight() = default;

    // Evaluator before normalization (Custom only).
    double raw(double rho) const;

    Kind kind_ = Kind::Classical;
    double parameter_ = 2.0;
    bool singular_at_zero_ = false;
    std::vector<double> breakpoints_;
    std::shared_ptr<const std::function<double(double)>> evaluator_;
    double norm_ = 1.0;
    double norm_error_ = 0.0;
    std::string label_;

    friend MomentValue raw_quadrature_moment(const RadialWeight&, unsigned, double);
};

enum class MomentMethod { Auto, Quadrature };

// h_m = int_0^1 rho^(m+1) w(rho) drho.  Closed form when the kind has one
// (unless Quadrature is requested), adaptive quadrature to abs tol otherwise.
MomentValue moment(const RadialWeight& w, unsigned m, double tol = kDefaultMomentTolerance,
                   MomentMethod method = MomentMethod::Auto);

// Closed-form h_m for the built-in kinds; m may be fractional.
std::optional<double> closed_form_moment(const RadialWeight& w, double m);

// Even moments h[k] = h_{2k}, k = 0..N, with h[0] = 1.
class MomentSequence {
public:
    // From raw values: all entries finite and nonnegative, values[0] > 0,
    // nonincreasing.  Divides everything by values[0].  Entries are tagged
    // closed-form with zero error.
    static MomentSequence from_values(std::vector<double> values);

    MomentSequence(std::vector<double> values, std::vector<Provenance> provenance);

    std::size_t max_index() const noexcept { return values_.size() - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const noexcept { return values_; }
    const Provenance& provenance(std::size_t k) const { return provenance_[k]; }
    double error_bound(std::size_t k) const { return provenance_[k].error_bound; }
    double max_error_bound() const noexcept;

    MomentSequence prefix(std::size_t N) const;

private:
    std::vector<double> values_;
    std::vector<Provenance> provenance_;
};

MomentSequence moment_sequence(const RadialWeight& w, std::size_t N,
                               double tol = kDefaultMomentTolerance);

// Grammar: classical:alpha=<float> | power:m=<float> | counterexample | table:<path>
// Throws InputError on anything else (including an unreadable table).
RadialWeight parse_weight_spec(std::string_view spec);

// CSV of (rho, w) rows.  Blank lines, '#' comments and a non-numeric header
// row are skipped.
RadialWeight load_weight_table(const std::filesystem::path& path);

}  // namespace weissler
