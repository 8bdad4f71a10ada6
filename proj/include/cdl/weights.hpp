#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cdl/rat.hpp"

namespace cdl {

/// Closed-form rule for sq(n) beyond the explicit head.
///
/// constant: sq(n) = value.
/// xi:       sq(n) = xi_sq(n - 2, value), the 2-isometric weighted-shift tail
///           seeded by |w(2)|^2 = value >= 1.
/// With `reciprocal` set the rule yields 1/sq(n) instead; Cauchy duals of xi
/// tails take this form.
struct TailRule {
  enum class Kind { constant, xi };
  Kind kind = Kind::constant;
  Rat value{1};
  bool reciprocal = false;

  static TailRule ones() { return {}; }
  static TailRule constant(const Rat& v) { return {Kind::constant, v, false}; }
  static TailRule xi(const Rat& w2sq) { return {Kind::xi, w2sq, false}; }

  friend bool operator==(const TailRule&, const TailRule&) = default;
};

/// (1 + (n+1)(w2sq-1)) / (1 + n(w2sq-1)), the squared modulus of the
/// n-th tail weight of a 2-isometric shift with |w(2)|^2 = w2sq. Requires w2sq >= 1.
Rat xi_sq(std::size_t n, const Rat& w2sq);

/// Squared moduli sq(n) = |w(n)|^2 of the weights of the composition operator
/// on l^2(Z+) with symbol 0 -> 0, n -> n-1. Phases never matter, so only
/// squared moduli are stored. Immutable.
class SquaredWeights {
 public:
  /// Throws DomainError on negative entries, an empty head, an xi tail with
  /// w2sq < 1 or a head shorter than two entries, or a reciprocal rule whose
  /// value is zero.
  SquaredWeights(std::vector<Rat> head, TailRule tail);

  /// All weights 1.
  static SquaredWeights ones();
  /// w(0) = 1, w(1) = 0, w(n) = 1 beyond: an isometry.
  static SquaredWeights isometry();

  Rat operator[](std::size_t n) const;
  std::vector<Rat> prefix(std::size_t last) const;

  const std::vector<Rat>& head() const { return head_; }
  const TailRule& tail() const { return tail_; }
  /// |w(0)|^2 + |w(1)|^2
  Rat alpha() const { return (*this)[0] + (*this)[1]; }

  /// Index from which the tail rule supplies values.
  std::size_t tail_start() const { return head_.size(); }
  /// sup and inf of sq(n) over n >= tail_start(), in closed form.
  Rat tail_sup() const;
  Rat tail_inf() const;

  friend bool operator==(const SquaredWeights&, const SquaredWeights&) = default;

 private:
  std::vector<Rat> head_;
  TailRule tail_;
};

/// Radon-Nikodym weight: h(0) = alpha, h(n) = sq(n+1) for n >= 1.
Rat h_of(const SquaredWeights& w, std::size_t n);

struct OperatorReport {
  Rat norm_sq;         // max(alpha, sup_{n>=2} sq(n))
  Rat lower_bound_sq;  // min(alpha, inf_{n>=2} sq(n)); zero means not bounded below
  bool bounded = true;
  bool cyclic_sufficient = false;  // sq(n) > 0 for all n >= 1
  std::vector<Rat> two_isometry_residuals;
  /// The tail rule makes every residual past the head vanish identically.
  bool tail_certified = false;

  bool bounded_below() const { return lower_bound_sq.sign() > 0; }
  bool residuals_zero() const;
  bool two_isometric() const { return residuals_zero() && tail_certified; }
};

OperatorReport operator_report(const SquaredWeights& w, std::size_t probe_depth);

/// residual(0) = 1 - 2 alpha + sq0^2 + sq0 sq1 + sq1 sq2,
/// residual(n) = 1 - 2 sq(n+1) + sq(n+1) sq(n+2) for 1 <= n <= depth.
std::vector<Rat> two_isometry_check(const SquaredWeights& w, std::size_t depth);

/// True when residual(n) = 0 for every n whose terms come from the tail rule.
bool tail_certifies_two_isometry(const SquaredWeights& w);

/// The 2-isometry with the given |w(0)|^2, |w(1)|^2: w2sq from
/// ((sq0+sq1)(2-sq0) - 1)/sq1 and an xi tail, or the isometry when sq1 = 0.
SquaredWeights construct_2isometry(const Rat& sq0, const Rat& sq1);

/// Weights of the Cauchy dual: sq0/alpha^2, sq1/alpha^2, then 1/sq(n).
/// Throws DomainError when the operator is not bounded below.
SquaredWeights dual_weights(const SquaredWeights& w);

/// Closed form for h_{phi^n, w'_[n]}(0) of the Cauchy dual of a 2-isometry.
/// Throws DomainError unless residuals 0..n vanish.
Rat dual_moment_fiber0(const SquaredWeights& w, std::size_t n);

/// 1 / prod_{j=1}^{n} sq(k+j); throws DomainError on a zero weight.
Rat dual_moment_fiberk(const SquaredWeights& w, std::size_t k, std::size_t n);

}  // namespace cdl
