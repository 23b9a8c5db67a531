#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monometric {

/// A symmetric, normalized operator monotone function f (f(1) = 1,
/// f(t) = t f(1/t)) together with its Morozova-Chentsov function
/// c(x, y) = 1 / (y f(x / y)).
///
/// Catalog identifiers: sld, rld, km, sqrt:<a>, km-geo, km-sq, wyd:<a>.
class MonotoneFunctionKind {
 public:
  enum class Family { sld, rld, km, sqrt, km_geo, km_sq, wyd };

  static MonotoneFunctionKind sld() { return {Family::sld, std::nullopt}; }
  static MonotoneFunctionKind rld() { return {Family::rld, std::nullopt}; }
  static MonotoneFunctionKind km() { return {Family::km, std::nullopt}; }
  static MonotoneFunctionKind km_geo() { return {Family::km_geo, std::nullopt}; }
  static MonotoneFunctionKind km_sq() { return {Family::km_sq, std::nullopt}; }
  /// 2 t^{a+1/2} / (1 + t^{2a}), 0 <= a <= 1/2.
  static MonotoneFunctionKind sqrt_family(double alpha);
  /// Wigner-Yanase-Dyson family, alpha in (-3, 3).  alpha = +-1 is km.
  static MonotoneFunctionKind wyd(double alpha);

  /// Parses a catalog identifier; throws Error(parse) or Error(domain).
  static MonotoneFunctionKind parse(std::string_view id);

  Family family() const noexcept { return family_; }
  std::optional<double> parameter() const noexcept { return parameter_; }
  std::string name() const;

  /// f(t) for t > 0; removable singularities at t = 1 are evaluated by series.
  double f(double t) const;
  /// Closed form only (no series branch near t = 1).
  double f_closed(double t) const;
  /// Second-order expansion about t = 1 (km and wyd families).
  double f_series(double t) const;
  /// c(x, y) = 1 / (y f(x / y)).
  double c(double x, double y) const;
  /// The limit f(0+), reported as exactly 0 where it vanishes.
  double f_at_zero() const noexcept;

  /// beta = (1 - alpha) / 2 for the wyd family.
  double wyd_beta() const;

  friend bool operator==(const MonotoneFunctionKind&, const MonotoneFunctionKind&) = default;

 private:
  MonotoneFunctionKind(Family family, std::optional<double> parameter)
      : family_(family), parameter_(parameter) {}

  Family family_;
  std::optional<double> parameter_;
};

/// |t - 1| below which the series branch is used.
inline constexpr double kSeriesSwitchover = 1e-6;

double eval_f(const MonotoneFunctionKind& kind, double t);
double eval_c(const MonotoneFunctionKind& kind, double x, double y);
double f_at_zero(const MonotoneFunctionKind& kind) noexcept;

/// sld, rld, km, sqrt:0, sqrt:0.25, km-geo, km-sq, wyd:0, wyd:0.5.
std::vector<MonotoneFunctionKind> standard_catalog();

std::vector<MonotoneFunctionKind> parse_kind_list(std::string_view comma_separated);

/// Outcome of a pointwise sweep over log-uniform t in [1e-6, 1e6].
struct SweepReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_excess = 0.0;  // largest (violation / tolerance); <= 1 means pass
  double worst_t = 1.0;
  bool passed() const noexcept { return violations == 0; }
};

SweepReport check_symmetry(const MonotoneFunctionKind& kind, std::size_t samples, std::uint64_t seed);
SweepReport check_bounds(const MonotoneFunctionKind& kind, std::size_t samples, std::uint64_t seed);

struct OperatorMonotoneReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  double worst_min_eigenvalue = 0.0;  // smallest lambda_min(f(H) - f(K)) seen
  bool passed() const noexcept { return violations == 0; }
};

inline constexpr double kOperatorMonotoneTol = 1e-8;

/// Draws 0 <= K <= H and checks f(K) <= f(H) via spectral calculus.
OperatorMonotoneReport check_operator_monotone_sample(const MonotoneFunctionKind& kind, int dim,
                                                      std::size_t trials, std::uint64_t seed);

}  // namespace monometric
