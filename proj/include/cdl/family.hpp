#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cdl/moments.hpp"
#include "cdl/rat.hpp"
#include "cdl/ratfn.hpp"
#include "cdl/weights.hpp"

namespace cdl::family {

/// Parameter x >= 0 of the counterexample family; x = 0 is the isometric
/// boundary case.
class FamilyParam {
 public:
  explicit FamilyParam(Rat x);
  const Rat& x() const { return x_; }

 private:
  Rat x_;
};

/// sq = (1/2, 1/2 + x, (1+3x)/(1+2x), ...) with the xi tail seeded by
/// sq(2); equivalently sq(n+2) = (1+(n+3)x)/(1+(n+2)x).
SquaredWeights family_weights(const FamilyParam& p);

/// x lies in (-1/(n+1), oo), where omega_n, S_n are regular.
bool in_domain(std::size_t n, const Rat& x);

/// omega_n(x) = (1 + (1+2x)^2 S_n(x)) / (2^n (1+x)^(2n)) evaluated directly in
/// Q, without the symbolic layer. Throws DomainError outside (-1/(n+1), oo).
Rat omega_eval(std::size_t n, const Rat& x);

/// S_n(x) = sum_{j<n} 2^j (1+x)^(2j) / (1+(j+2)x)
RatFn s_function(std::size_t n);
RatFn omega_function(std::size_t n);
/// D_m = sum_{n<=m} (-1)^n C(m,n) omega_n
RatFn d_function(std::size_t m);

struct FamilySymbolics {
  std::vector<RatFn> omega;  // omega_0..omega_{n_max}
  std::vector<RatFn> s;      // S_0..S_{n_max}
  std::vector<RatFn> d;      // D_0..D_{m_max}
};

/// Requires m_max <= n_max.
FamilySymbolics build_symbolics(std::size_t n_max, std::size_t m_max);

/// D_m^(l)(0) for l = 0..order (derivatives, not Taylor coefficients).
std::vector<Rat> d_taylor(std::size_t m, unsigned order);

struct SDerivative {
  Rat value;
  bool tabulated;  // l <= 4, the range of the closed-form table
};

/// S_n^(l)(0)
SDerivative s_derivative_at_zero(std::size_t n, unsigned l);

struct Bracket {
  Rat lo;
  Rat hi;
};

struct SignScan {
  std::size_t m = 0;
  Rat x_max;
  std::size_t steps = 0;
  std::vector<Rat> xs;      // k x_max / steps, k = 1..steps
  std::vector<Rat> values;  // D_m(xs[k])
  /// Right end of the leading run of strictly negative samples.
  std::optional<Rat> negative_prefix_end;
  /// Bracket around the first sign change between consecutive samples
  /// (negative vs nonnegative), narrowed by bisection to width <= x_max/2^10.
  std::optional<Bracket> crossing;

  /// One of '-', '0', '+' per sample.
  std::string pattern() const;
  bool all_negative() const;
  bool all_nonnegative() const;
};

/// Requires steps >= 1 and x_max > 0.
SignScan sign_scan(std::size_t m, const Rat& x_max, std::size_t steps);

/// x = 0 turns the family into an isometry, so there is nothing to refute.
class BoundaryCase : public DomainError {
 public:
  using DomainError::DomainError;
};

struct CounterexampleVerdict {
  Rat x;
  OperatorReport report;       // bounded, cyclic, 2-isometry residuals
  ExactSequence moments{Rat(1)};  // omega_0..omega_N
  MomentVerdict<Rat> hausdorff;
  bool closed_form_agrees = false;  // omega_n = closed form on the dual
  bool oracle_agrees = false;       // omega_n = ||C'^n e_0||^2

  bool operator_ok() const {
    return report.bounded && report.cyclic_sufficient && report.two_isometric();
  }
  bool confirmed() const {
    return operator_ok() && !hausdorff.pass && closed_form_agrees && oracle_agrees;
  }
};

/// Runs the whole pipeline for x > 0; throws BoundaryCase at x = 0 and
/// DomainError for x < 0.
CounterexampleVerdict counterexample_verdict(const Rat& x, std::size_t depth = 5,
                                             std::size_t horizon = 12,
                                             std::size_t isometry_depth = 50);

struct FigureTable {
  std::vector<std::size_t> ms;
  std::vector<Rat> xs;
  std::vector<std::vector<Rat>> values;  // values[k][i] = D_{ms[i]}(xs[k])
};

/// D_m sampled at k x_max / steps, k = 1..steps.
FigureTable figure_table(const std::vector<std::size_t>& ms, const Rat& x_max, std::size_t steps);

}  // namespace cdl::family
