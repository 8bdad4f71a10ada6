#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "cdl/moments.hpp"
#include "cdl/rat.hpp"
#include "cdl/weights.hpp"

namespace cdl::oracle {

/// Sign convention for the square roots w(n) = sign(n) sqrt(sq(n)).
enum class Phase {
  nonnegative,  // every w(n) >= 0
  alternating,  // w(n) = (-1)^n sqrt(sq(n))
};

/// Exact real number of the form sum_S c_S prod_{i in S} sqrt(sq(i)) where S
/// ranges over sets of weight indices whose squared modulus is not a rational
/// square. Products reduce sqrt(sq(i))^2 to sq(i), so the representation
/// stays in Q for every quantity the operator produces.
class Surd {
 public:
  using Radicals = std::vector<std::uint32_t>;  // sorted, distinct

  Surd() = default;
  explicit Surd(const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Throws std::logic_error unless is_rational().
  Rat rational() const;
  const std::map<Radicals, Rat>& terms() const { return terms_; }

  Surd& operator+=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend bool operator==(const Surd&, const Surd&) = default;

  /// Product, reducing repeated radicals with sq.
  friend Surd multiply(const Surd& a, const Surd& b, const SquaredWeights& sq);

  static Surd weight(std::size_t n, const SquaredWeights& sq, Phase phase);

 private:
  void add_term(const Radicals& r, const Rat& c);
  std::map<Radicals, Rat> terms_;
};

/// Finite vector over e_0..e_N with Surd entries.
class ExactVector {
 public:
  explicit ExactVector(std::size_t dimension) : entries_(dimension) {}
  static ExactVector basis(std::size_t dimension, std::size_t k);

  std::size_t dimension() const { return entries_.size(); }
  const Surd& operator[](std::size_t i) const { return entries_.at(i); }
  Surd& operator[](std::size_t i) { return entries_.at(i); }
  /// Largest index holding a nonzero entry; -1 for the zero vector.
  long support_end() const;

  /// ||v||^2 = sum of squared entries; exact Rat (throws std::logic_error if a
  /// radical survives, which cannot happen for vectors built by apply()).
  Rat norm_sq(const SquaredWeights& sq) const;

 private:
  std::vector<Surd> entries_;
};

/// Truncated matrix of C on span{e_0..e_N}: e_0 -> w(0)e_0 + w(1)e_1,
/// e_n -> w(n+1)e_{n+1}.
struct BandedOp {
  SquaredWeights weights;
  std::size_t dimension;  // N + 1
  Phase phase = Phase::nonnegative;
};

/// C v. Throws std::out_of_range when v has support at e_N (the image would
/// leave the truncation).
ExactVector apply(const BandedOp& op, const ExactVector& v);

/// ||C^n e_k||^2 by repeated application. dimension defaults to k + n + 1.
/// Throws std::out_of_range when an explicit dimension is too small.
Rat gram_diagonal(const SquaredWeights& w, std::size_t k, std::size_t n,
                  Phase phase = Phase::nonnegative, std::size_t dimension = 0);

/// (gram_diagonal(w, k, n))_{n=0..n_max}
ExactSequence hsequence(const SquaredWeights& w, std::size_t k, std::size_t n_max = 12);

}  // namespace cdl::oracle
