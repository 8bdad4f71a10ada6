#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "cdl/rat.hpp"

namespace cdl {

enum class Backend { exact, floating };

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static constexpr Backend backend = Backend::exact;
  static std::string str(const Rat& v) { return v.str(); }
  static bool negative(const Rat& v, double /*tol*/) { return v.sign() < 0; }
};

template <>
struct ScalarTraits<double> {
  static constexpr Backend backend = Backend::floating;
  static std::string str(double v);
  static bool negative(double v, double tol) { return v < -tol; }
};

/// Thrown when a test needs more terms than the prefix holds.
class InsufficientPrefix : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Finite prefix gamma_0..gamma_N of a real sequence. The scalar type is the
/// backend: Rat for the exact path, double for the float path.
template <typename Scalar>
class MomentSequence {
 public:
  static constexpr Backend backend = ScalarTraits<Scalar>::backend;

  explicit MomentSequence(VectorX<Scalar> values) : values_(std::move(values)) {
    if (values_.size() == 0) throw std::invalid_argument("moment sequence must hold at least gamma_0");
  }
  MomentSequence(std::initializer_list<Scalar> values)
      : values_(static_cast<Eigen::Index>(values.size())) {
    if (values_.size() == 0) throw std::invalid_argument("moment sequence must hold at least gamma_0");
    std::copy(values.begin(), values.end(), values_.data());
  }

  /// gamma_n = f(n) for n = 0..last.
  template <typename F>
  static MomentSequence generate(Eigen::Index last, F&& f) {
    VectorX<Scalar> v(last + 1);
    for (Eigen::Index n = 0; n <= last; ++n) v[n] = f(n);
    return MomentSequence(std::move(v));
  }

  /// N, the index of the last stored term.
  Eigen::Index last_index() const { return values_.size() - 1; }
  const VectorX<Scalar>& values() const { return values_; }
  const Scalar& operator[](Eigen::Index n) const { return values_[n]; }

  /// (gamma_{n+by})_n
  MomentSequence shifted(Eigen::Index by) const {
    if (by > last_index()) throw InsufficientPrefix("shift exceeds prefix length");
    return MomentSequence(VectorX<Scalar>(values_.tail(values_.size() - by)));
  }

 private:
  VectorX<Scalar> values_;
};

using ExactSequence = MomentSequence<Rat>;
using FloatSequence = MomentSequence<double>;

FloatSequence to_float(const ExactSequence& seq);

/// Iterated difference index of a Hausdorff violation.
struct DifferenceWitness {
  Eigen::Index m;
  Eigen::Index j;
};

/// Principal submatrix of the Hankel matrix (shift 0) or of the shifted
/// Hankel matrix (shift 1) whose minor (exact) or smallest eigenvalue
/// (float) is negative. `order` is the submatrix size.
struct HankelWitness {
  int shift;
  Eigen::Index order;
};

template <typename Scalar>
struct MomentVerdict {
  bool pass = true;
  std::variant<std::monostate, DifferenceWitness, HankelWitness> witness;
  Scalar value{};       // offending value when !pass
  Eigen::Index depth = 0;  // M for Hausdorff, K for Stieltjes
  Eigen::Index n = 0;      // prefix index N

  /// `PASS depth=M n=N`, `FAIL m=<m> j=<j> value=<v>` or
  /// `FAIL hankel=<shift> order=<k> value=<v>`.
  std::string line() const {
    if (pass) return "PASS depth=" + std::to_string(depth) + " n=" + std::to_string(n);
    if (const auto* d = std::get_if<DifferenceWitness>(&witness)) {
      return "FAIL m=" + std::to_string(d->m) + " j=" + std::to_string(d->j) +
             " value=" + ScalarTraits<Scalar>::str(value);
    }
    const auto& h = std::get<HankelWitness>(witness);
    return "FAIL hankel=" + std::to_string(h.shift) + " order=" + std::to_string(h.order) +
           " value=" + ScalarTraits<Scalar>::str(value);
  }
};

/// Float-path thresholds; ignored on the exact path.
struct Tolerance {
  double value = 1e-10;
};

/// sum_{i=0}^{m} (-1)^i C(m,i) gamma_{i+j}.
template <typename Scalar>
Scalar diff_transform(const MomentSequence<Scalar>& seq, Eigen::Index m, Eigen::Index j) {
  if (m < 0 || j < 0) throw std::invalid_argument("diff_transform: negative order or shift");
  if (j + m > seq.last_index()) {
    throw InsufficientPrefix("diff_transform needs gamma_" + std::to_string(j + m) +
                             " but the prefix ends at gamma_" + std::to_string(seq.last_index()));
  }
  Scalar acc(0);
  for (Eigen::Index i = 0; i <= m; ++i) {
    Scalar term = seq[i + j];
    if constexpr (std::is_same_v<Scalar, Rat>) {
      term *= binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i));
    } else {
      term *= binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i)).to_double();
    }
    if (i % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

/// Checks diff_transform(seq, m, j) >= 0 for every m <= depth and j with
/// j + m <= min(N, j_cap + m). A pass only says the necessary conditions hold
/// on the tested range; a fail reports the first violation in (m, j) order.
template <typename Scalar>
MomentVerdict<Scalar> hausdorff_test(const MomentSequence<Scalar>& seq, Eigen::Index depth,
                                     Tolerance tol = {},
                                     std::optional<Eigen::Index> j_cap = std::nullopt) {
  if (depth < 1) throw std::invalid_argument("hausdorff_test: depth must be at least 1");
  MomentVerdict<Scalar> verdict;
  verdict.depth = depth;
  verdict.n = seq.last_index();
  // diff[j] holds the order-m backward difference at shift j.
  VectorX<Scalar> diff = seq.values();
  const Eigen::Index max_m = std::min(depth, seq.last_index());
  for (Eigen::Index m = 0; m <= max_m; ++m) {
    const Eigen::Index count = seq.last_index() - m + 1;
    const Eigen::Index j_end = j_cap ? std::min(count, *j_cap + 1) : count;
    for (Eigen::Index j = 0; j < j_end; ++j) {
      if (ScalarTraits<Scalar>::negative(diff[j], tol.value)) {
        verdict.pass = false;
        verdict.witness = DifferenceWitness{m, j};
        verdict.value = diff[j];
        return verdict;
      }
    }
    for (Eigen::Index j = 0; j + 1 < count; ++j) diff[j] = diff[j] - diff[j + 1];
  }
  return verdict;
}

/// (gamma_{i+j+shift})_{i,j < size}
template <typename Scalar>
MatrixX<Scalar> hankel_matrix(const MomentSequence<Scalar>& seq, int shift, Eigen::Index size) {
  if (2 * (size - 1) + shift > seq.last_index()) {
    throw InsufficientPrefix("Hankel matrix exceeds the prefix");
  }
  MatrixX<Scalar> h(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) h(i, j) = seq[i + j + shift];
  return h;
}

/// Exact determinant by Gaussian elimination over Q.
Rat determinant(MatrixX<Rat> a);

namespace detail {

struct MinorViolation {
  Eigen::Index order;
  Rat value;
};

/// First negative principal minor: leading minors first, then (only when a
/// leading minor vanishes) every principal minor by size and lexicographic
/// index set.
std::optional<MinorViolation> first_negative_minor(const MatrixX<Rat>& h);

struct EigenViolation {
  Eigen::Index order;
  double value;
};

std::optional<EigenViolation> first_negative_eigenvalue(const MatrixX<double>& h, double tol);

}  // namespace detail

/// Positive semidefiniteness of (gamma_{i+j})_{i,j<=K} and of the shifted
/// matrix (gamma_{i+j+1}) of the largest order the prefix supports (K+1 when
/// N >= 2K+1, K when N = 2K). Requires 2K <= N.
template <typename Scalar>
MomentVerdict<Scalar> stieltjes_test(const MomentSequence<Scalar>& seq, Eigen::Index order,
                                     Tolerance tol = {}) {
  if (order < 0) throw std::invalid_argument("stieltjes_test: negative order");
  if (2 * order > seq.last_index()) {
    throw InsufficientPrefix("stieltjes_test needs 2K <= N (K=" + std::to_string(order) +
                             ", N=" + std::to_string(seq.last_index()) + ")");
  }
  MomentVerdict<Scalar> verdict;
  verdict.depth = order;
  verdict.n = seq.last_index();
  for (int shift = 0; shift <= 1; ++shift) {
    const Eigen::Index size = (seq.last_index() - shift) / 2 + 1;
    const Eigen::Index used = std::min(size, order + 1);
    if (used <= 0) continue;
    const MatrixX<Scalar> h = hankel_matrix(seq, shift, used);
    if constexpr (std::is_same_v<Scalar, Rat>) {
      if (auto v = detail::first_negative_minor(h)) {
        verdict.pass = false;
        verdict.witness = HankelWitness{shift, v->order};
        verdict.value = v->value;
        return verdict;
      }
    } else {
      if (auto v = detail::first_negative_eigenvalue(h, tol.value)) {
        verdict.pass = false;
        verdict.witness = HankelWitness{shift, v->order};
        verdict.value = v->value;
        return verdict;
      }
    }
  }
  return verdict;
}

/// True iff every entry is <= bound.
template <typename Scalar>
bool boundedness_check(const MomentSequence<Scalar>& seq, const Scalar& bound) {
  for (Eigen::Index n = 0; n <= seq.last_index(); ++n)
    if (seq[n] > bound) return false;
  return true;
}

}  // namespace cdl
