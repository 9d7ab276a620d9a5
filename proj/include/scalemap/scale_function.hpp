#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>

namespace scalemap {

enum class ScaleKind { SqrtLinear, Exponential, Custom };

std::string scale_kind_name(ScaleKind k);

/// The scale-function family f(t). Every instance satisfies f(0) = 1 and
/// f'(0) = epsilon with epsilon real and nonzero; f is real and positive on
/// its validity interval.
class ScaleFunction {
 public:
  struct Value {
    double f = 1.0;
    double fprime = 0.0;
  };

  struct ValidationReport {
    bool ok = true;
    std::string message;
    double t_offending = std::numeric_limits<double>::quiet_NaN();
  };

  using CustomEval = std::function<Value(double)>;

  /// f(t) = sqrt(1 + 2 epsilon t); constant particle mass in the scaling
  /// Hamiltonian. Valid while 1 + 2 epsilon t stays above a small guard.
  static ScaleFunction sqrt_linear(double epsilon);

  /// f(t) = exp(epsilon t); valid for all t.
  static ScaleFunction exponential(double epsilon);

  /// User-supplied (f, f') with an explicit validity interval. Normalization
  /// f(0)=1, f'(0)=epsilon is checked to 1e-12 at construction.
  static ScaleFunction custom(double epsilon, CustomEval eval, double t_lo, double t_hi);

  ScaleKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }

  /// (f, f') at time t. Throws ValidationError outside the validity interval.
  Value eval(double t) const;

  /// Transformed clock t' = ln(f(t))/epsilon.
  double transformed_time(double t) const;

  /// True when t is within the validity interval.
  bool valid_at(double t) const;

  /// Checks the normalization, positivity, derivative consistency and
  /// monotone sign of f on [0, t_max].
  ValidationReport validate(double t_max) const;

 private:
  ScaleFunction() = default;

  ScaleKind kind_ = ScaleKind::SqrtLinear;
  double epsilon_ = 0.0;
  CustomEval custom_;
  double t_lo_ = -std::numeric_limits<double>::infinity();
  double t_hi_ = std::numeric_limits<double>::infinity();

  // Guard on 1 + 2*epsilon*t for the sqrt kind, kept away from the branch point.
  static constexpr double kSqrtGuard = 1e-9;
};

}  // namespace scalemap
