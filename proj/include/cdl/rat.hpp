#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace cdl {

/// Raised when a value cannot be parsed or violates a domain precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational in canonical form: positive denominator and
/// coprime numerator/denominator after every operation.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long long v);           // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num, const mpz_class& den);
  Rat(long num, long den);
  explicit Rat(const mpq_class& q);

  /// Parses "p", "p/q" (any sign placement on p, q nonzero) or a decimal
  /// literal such as "-1.25e-3". The result is exact.
  static Rat parse(std::string_view text);

  /// 2^e for signed e.
  static Rat pow2(long e);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Rat abs() const;
  Rat inverse() const;
  Rat pow(long e) const;
  double to_double() const { return value_.get_d(); }

  /// Rational square root when the value is a perfect square of a rational.
  std::optional<Rat> exact_sqrt() const;

  /// "p/q", with "/q" omitted when q = 1.
  std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a);

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

/// Binomial coefficient C(n, k) as an exact integer-valued Rat.
Rat binomial(unsigned long n, unsigned long k);

/// n! as an exact integer-valued Rat.
Rat factorial(unsigned long n);

/// Rounds r half-even to `digits` significant decimal digits and renders it
/// like printf's %g: fixed notation for decimal exponents in [-4, digits),
/// scientific otherwise, trailing zeros removed.
std::string to_decimal(const Rat& r, int digits = 12);

}  // namespace cdl

namespace Eigen {

template <>
struct NumTraits<cdl::Rat> : GenericNumTraits<cdl::Rat> {
  using Real = cdl::Rat;
  using NonInteger = cdl::Rat;
  using Nested = cdl::Rat;
  using Literal = cdl::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
