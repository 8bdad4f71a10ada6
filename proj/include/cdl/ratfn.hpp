#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cdl/poly.hpp"

namespace cdl {

/// Evaluation hit a zero of the denominator. Kept apart from DomainError so
/// callers can tell a pole from malformed input.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Univariate rational function num/den over Rat in canonical form:
/// gcd(num, den) = 1 and den monic, so structural equality is equality of
/// functions.
class RatFn {
 public:
  RatFn() : den_(Poly::constant(1)) {}
  RatFn(const Rat& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {}  // NOLINT
  RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}         // NOLINT
  RatFn(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool regular_at(const Rat& x0) const { return !den_.eval(x0).is_zero(); }

  /// Throws PoleError when den(x0) = 0.
  Rat eval(const Rat& x0) const;
  double eval(double x0) const;

  /// l-fold derivative; order 0 is the identity.
  RatFn derivative(unsigned order = 1) const;

  /// f^(l)(0)/l! for l = 0..order, via power-series division. Throws
  /// PoleError when den(0) = 0.
  std::vector<Rat> taylor_at_zero(unsigned order) const;

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend RatFn operator-(const RatFn& a);
  friend bool operator==(const RatFn& a, const RatFn& b) = default;

  std::string str(const char* var = "x") const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

}  // namespace cdl
