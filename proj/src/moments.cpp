#include "cdl/moments.hpp"

#include <cstdio>

namespace cdl {

std::string ScalarTraits<double>::str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

FloatSequence to_float(const ExactSequence& seq) {
  return FloatSequence::generate(seq.last_index(), [&](Eigen::Index n) { return seq[n].to_double(); });
}

Rat determinant(MatrixX<Rat> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Rat det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    const Rat inv = a(col, col).inverse();
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rat f = a(r, col) * inv;
      for (Eigen::Index c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

namespace detail {

namespace {

MatrixX<Rat> principal_submatrix(const MatrixX<Rat>& h, const std::vector<Eigen::Index>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  MatrixX<Rat> s(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) s(i, j) = h(idx[i], idx[j]);
  return s;
}

// Advances idx to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<Eigen::Index>& idx, Eigen::Index n) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  for (Eigen::Index i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (Eigen::Index j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<MinorViolation> first_negative_minor(const MatrixX<Rat>& h) {
  const Eigen::Index n = h.rows();
  bool degenerate = false;
  for (Eigen::Index k = 1; k <= n; ++k) {
    const Rat d = determinant(h.topLeftCorner(k, k));
    if (d.sign() < 0) return MinorViolation{k, d};
    if (d.is_zero()) {
      degenerate = true;
      break;
    }
  }
  if (!degenerate) return std::nullopt;
  // A zero leading minor leaves Sylvester's test inconclusive for PSD.
  for (Eigen::Index k = 1; k <= n; ++k) {
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
      const Rat d = determinant(principal_submatrix(h, idx));
      if (d.sign() < 0) return MinorViolation{k, d};
    } while (next_combination(idx, n));
  }
  return std::nullopt;
}

std::optional<EigenViolation> first_negative_eigenvalue(const MatrixX<double>& h, double tol) {
  for (Eigen::Index k = 1; k <= h.rows(); ++k) {
    Eigen::SelfAdjointEigenSolver<MatrixX<double>> es(h.topLeftCorner(k, k), Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < -tol) return EigenViolation{k, lo};
  }
  return std::nullopt;
}

}  // namespace detail

}  // namespace cdl
