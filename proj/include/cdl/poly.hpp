#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cdl/rat.hpp"

namespace cdl {

/// Dense univariate polynomial over Rat; coefficient i multiplies x^i.
/// The zero polynomial has no coefficients, otherwise the leading one is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }
  /// (a + b x)^e
  static Poly linear_power(const Rat& a, const Rat& b, unsigned e);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const Rat& leading() const;

  Rat eval(const Rat& x) const;
  double eval(double x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string str(const char* var = "x") const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

/// Euclidean division a = q b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Exact quotient; the caller guarantees b divides a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace cdl
