#include "cdl/weights.hpp"

#include <algorithm>

namespace cdl {

namespace {

Rat tail_value(const TailRule& t, std::size_t n) {
  const Rat v = t.kind == TailRule::Kind::constant ? t.value : xi_sq(n - 2, t.value);
  return t.reciprocal ? v.inverse() : v;
}

}  // namespace

Rat xi_sq(std::size_t n, const Rat& w2sq) {
  if (w2sq < Rat(1)) throw DomainError("xi_sq needs w2sq >= 1, got " + w2sq.str());
  const Rat delta = w2sq - Rat(1);
  const Rat nn(static_cast<long>(n));
  return (Rat(1) + (nn + Rat(1)) * delta) / (Rat(1) + nn * delta);
}

SquaredWeights::SquaredWeights(std::vector<Rat> head, TailRule tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
  if (head_.empty()) throw DomainError("weights need at least |w(0)|^2");
  for (std::size_t i = 0; i < head_.size(); ++i) {
    if (head_[i].sign() < 0) {
      throw DomainError("squared weight sq(" + std::to_string(i) + ") = " + head_[i].str() + " is negative");
    }
  }
  if (tail_.kind == TailRule::Kind::xi) {
    if (tail_.value < Rat(1)) throw DomainError("xi tail needs w2sq >= 1, got " + tail_.value.str());
    if (head_.size() < 2) throw DomainError("xi tail needs |w(0)|^2 and |w(1)|^2 in the head");
  } else if (tail_.value.sign() < 0) {
    throw DomainError("constant tail must be nonnegative, got " + tail_.value.str());
  }
  if (tail_.reciprocal && tail_.value.is_zero()) throw DomainError("reciprocal tail of zero");
}

SquaredWeights SquaredWeights::ones() { return {{Rat(1), Rat(1)}, TailRule::ones()}; }

SquaredWeights SquaredWeights::isometry() { return {{Rat(1), Rat(0)}, TailRule::ones()}; }

Rat SquaredWeights::operator[](std::size_t n) const {
  return n < head_.size() ? head_[n] : tail_value(tail_, n);
}

std::vector<Rat> SquaredWeights::prefix(std::size_t last) const {
  std::vector<Rat> out;
  out.reserve(last + 1);
  for (std::size_t n = 0; n <= last; ++n) out.push_back((*this)[n]);
  return out;
}

// xi tails are nonincreasing towards 1, so sup is the first tail value and
// inf the limit; reciprocal tails mirror that.
Rat SquaredWeights::tail_sup() const {
  if (tail_.kind == TailRule::Kind::constant) return tail_value(tail_, tail_start());
  const std::size_t s = std::max<std::size_t>(tail_start(), 2);
  return tail_.reciprocal ? Rat(1) : xi_sq(s - 2, tail_.value);
}

Rat SquaredWeights::tail_inf() const {
  if (tail_.kind == TailRule::Kind::constant) return tail_value(tail_, tail_start());
  const std::size_t s = std::max<std::size_t>(tail_start(), 2);
  return tail_.reciprocal ? xi_sq(s - 2, tail_.value).inverse() : Rat(1);
}

Rat h_of(const SquaredWeights& w, std::size_t n) { return n == 0 ? w.alpha() : w[n + 1]; }

bool OperatorReport::residuals_zero() const {
  return std::all_of(two_isometry_residuals.begin(), two_isometry_residuals.end(),
                     [](const Rat& r) { return r.is_zero(); });
}

std::vector<Rat> two_isometry_check(const SquaredWeights& w, std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("two_isometry_check needs depth >= 1");
  std::vector<Rat> res;
  res.reserve(depth + 1);
  const Rat s0 = w[0], s1 = w[1], s2 = w[2];
  res.push_back(Rat(1) - Rat(2) * w.alpha() + s0 * s0 + s0 * s1 + s1 * s2);
  Rat cur = w[2];
  for (std::size_t n = 1; n <= depth; ++n) {
    Rat next = w[n + 2];
    res.push_back(Rat(1) - Rat(2) * cur + cur * next);
    cur = std::move(next);
  }
  return res;
}

bool tail_certifies_two_isometry(const SquaredWeights& w) {
  const TailRule& t = w.tail();
  if (t.kind == TailRule::Kind::constant) return t.value == Rat(1);
  // 1 - 2 a_n + a_n a_{n+1} = 0 holds identically for the xi telescoping
  // tail; its reciprocal only when it is flat.
  return !t.reciprocal || t.value == Rat(1);
}

OperatorReport operator_report(const SquaredWeights& w, std::size_t probe_depth) {
  if (probe_depth < 2) throw std::invalid_argument("operator_report needs probe depth >= 2");
  OperatorReport r;
  const Rat alpha = w.alpha();
  r.norm_sq = std::max(alpha, w.tail_sup());
  r.lower_bound_sq = std::min(alpha, w.tail_inf());
  for (std::size_t n = 2; n < w.tail_start(); ++n) {
    r.norm_sq = std::max(r.norm_sq, w[n]);
    r.lower_bound_sq = std::min(r.lower_bound_sq, w[n]);
  }
  r.bounded = true;  // every tail rule is bounded
  r.cyclic_sufficient = w.tail_inf().sign() > 0;
  for (std::size_t n = 1; n < w.tail_start(); ++n) r.cyclic_sufficient = r.cyclic_sufficient && w[n].sign() > 0;
  r.two_isometry_residuals = two_isometry_check(w, probe_depth);
  r.tail_certified = tail_certifies_two_isometry(w);
  // Residuals that still read head entries must be checked explicitly.
  const std::size_t head_reach = w.tail_start() > 2 ? w.tail_start() - 2 : 0;
  if (head_reach > probe_depth) {
    for (const Rat& v : two_isometry_check(w, head_reach)) r.tail_certified = r.tail_certified && v.is_zero();
  }
  return r;
}

SquaredWeights construct_2isometry(const Rat& sq0, const Rat& sq1) {
  if (sq0.sign() < 0 || sq1.sign() < 0) throw DomainError("squared weights must be nonnegative");
  if (sq1.is_zero()) {
    if (sq0 != Rat(1)) {
      throw DomainError("w(1) = 0 branch requires |w(0)|^2 = 1, got " + sq0.str());
    }
    return SquaredWeights::isometry();
  }
  const Rat w2sq = ((sq0 + sq1) * (Rat(2) - sq0) - Rat(1)) / sq1;
  if (w2sq < Rat(1)) {
    throw DomainError("w(1) != 0 branch requires (sq0+sq1)(2-sq0) - 1 >= sq1 so that |w(2)|^2 >= 1; got |w(2)|^2 = " +
                      w2sq.str());
  }
  return {{sq0, sq1, w2sq}, TailRule::xi(w2sq)};
}

SquaredWeights dual_weights(const SquaredWeights& w) {
  const OperatorReport rep = operator_report(w, 2);
  if (!rep.bounded_below()) throw DomainError("operator is not bounded below; the Cauchy dual is undefined");
  const Rat alpha = w.alpha();
  const Rat a2 = alpha * alpha;
  std::vector<Rat> head;
  head.push_back(w[0] / a2);
  head.push_back(w[1] / a2);
  for (std::size_t n = 2; n < w.tail_start(); ++n) head.push_back(w[n].inverse());
  TailRule tail = w.tail();
  if (tail.kind == TailRule::Kind::constant) {
    tail = TailRule::constant(tail.reciprocal ? tail.value : tail.value.inverse());
  } else {
    tail.reciprocal = !tail.reciprocal;
  }
  return {std::move(head), tail};
}

Rat dual_moment_fiber0(const SquaredWeights& w, std::size_t n) {
  const auto res = two_isometry_check(w, std::max<std::size_t>(n, 1));
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (!res[i].is_zero()) {
      throw DomainError("closed-form dual moments need a 2-isometry; residual(" + std::to_string(i) +
                        ") = " + res[i].str());
    }
  }
  const Rat s0 = w[0], s1 = w[1], s2 = w[2];
  const Rat alpha = w.alpha();
  const long nn = static_cast<long>(n);
  Rat total = s0.pow(nn) / alpha.pow(2 * nn);
  for (long j = 0; j < nn; ++j) {
    total += s0.pow(nn - j - 1) * s1 / (alpha.pow(2 * (nn - j)) * (Rat(1) + Rat(j) * (s2 - Rat(1))));
  }
  return total;
}

Rat dual_moment_fiberk(const SquaredWeights& w, std::size_t k, std::size_t n) {
  Rat prod(1);
  for (std::size_t j = 1; j <= n; ++j) {
    const Rat s = w[k + j];
    if (s.is_zero()) throw DomainError("zero weight sq(" + std::to_string(k + j) + ") in the dual product");
    prod *= s;
  }
  return prod.inverse();
}

}  // namespace cdl
