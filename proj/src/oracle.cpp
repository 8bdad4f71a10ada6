#include "cdl/oracle.hpp"

#include <stdexcept>

namespace cdl::oracle {

Surd::Surd(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Radicals{}, c);
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Surd::rational() const {
  if (!is_rational()) throw std::logic_error("surd has an irrational part");
  return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

void Surd::add_term(const Radicals& r, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(r, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

Surd multiply(const Surd& a, const Surd& b, const SquaredWeights& sq) {
  Surd out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      Rat c = ca * cb;
      Surd::Radicals merged;
      std::size_t i = 0, j = 0;
      while (i < ra.size() || j < rb.size()) {
        if (j == rb.size() || (i < ra.size() && ra[i] < rb[j])) {
          merged.push_back(ra[i++]);
        } else if (i == ra.size() || rb[j] < ra[i]) {
          merged.push_back(rb[j++]);
        } else {
          c *= sq[ra[i]];
          ++i;
          ++j;
        }
      }
      out.add_term(merged, c);
    }
  }
  return out;
}

Surd Surd::weight(std::size_t n, const SquaredWeights& sq, Phase phase) {
  const Rat s = sq[n];
  const Rat sign = (phase == Phase::alternating && n % 2 == 1) ? Rat(-1) : Rat(1);
  if (auto root = s.exact_sqrt()) return Surd(sign * *root);
  Surd w;
  w.add_term(Radicals{static_cast<std::uint32_t>(n)}, sign);
  return w;
}

ExactVector ExactVector::basis(std::size_t dimension, std::size_t k) {
  ExactVector v(dimension);
  v[k] = Surd(Rat(1));
  return v;
}

long ExactVector::support_end() const {
  for (std::size_t i = entries_.size(); i-- > 0;)
    if (!entries_[i].is_zero()) return static_cast<long>(i);
  return -1;
}

Rat ExactVector::norm_sq(const SquaredWeights& sq) const {
  Surd acc;
  for (const auto& e : entries_) acc += multiply(e, e, sq);
  return acc.rational();
}

ExactVector apply(const BandedOp& op, const ExactVector& v) {
  if (v.dimension() != op.dimension) throw std::invalid_argument("vector and operator dimensions differ");
  if (v.support_end() + 1 >= static_cast<long>(op.dimension)) {
    throw std::out_of_range("apply: support reaches e_N; enlarge the dimension");
  }
  ExactVector out(op.dimension);
  const auto& sq = op.weights;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (v[i].is_zero()) continue;
    if (i == 0) {
      out[0] += multiply(v[0], Surd::weight(0, sq, op.phase), sq);
      out[1] += multiply(v[0], Surd::weight(1, sq, op.phase), sq);
    } else {
      out[i + 1] += multiply(v[i], Surd::weight(i + 1, sq, op.phase), sq);
    }
  }
  return out;
}

Rat gram_diagonal(const SquaredWeights& w, std::size_t k, std::size_t n, Phase phase,
                  std::size_t dimension) {
  if (dimension == 0) dimension = k + n + 1;
  if (dimension < k + n + 1) {
    throw std::out_of_range("gram_diagonal needs dimension >= k + n + 1 (basis e_0..e_{k+n})");
  }
  const BandedOp op{w, dimension, phase};
  ExactVector v = ExactVector::basis(dimension, k);
  for (std::size_t step = 0; step < n; ++step) v = apply(op, v);
  return v.norm_sq(w);
}

ExactSequence hsequence(const SquaredWeights& w, std::size_t k, std::size_t n_max) {
  // One orbit computation serves every power.
  const std::size_t dimension = k + n_max + 1;
  const BandedOp op{w, dimension, Phase::nonnegative};
  ExactVector v = ExactVector::basis(dimension, k);
  VectorX<Rat> out(static_cast<Eigen::Index>(n_max + 1));
  out[0] = v.norm_sq(w);
  for (std::size_t n = 1; n <= n_max; ++n) {
    v = apply(op, v);
    out[static_cast<Eigen::Index>(n)] = v.norm_sq(w);
  }
  return ExactSequence(std::move(out));
}

}  // namespace cdl::oracle
