#pragma once

// Randomized exact suites shared by the unit tests and the acceptance gate.

#include <random>
#include <string>

#include "cdl/moments.hpp"
#include "cdl/oracle.hpp"
#include "cdl/weights.hpp"
#include "generators.hpp"

namespace cdl::testing {

struct SuiteResult {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

/// A 2-isometry with random sq0 in (0, 1] and sq1 >= 1 - sq0, which is
/// exactly the region where construct_2isometry succeeds with sq1 > 0.
inline SquaredWeights random_two_isometry(std::mt19937& rng) {
  const Rat sq0 = Rat(1) - random_unit_rat(rng) * Rat(7, 8);
  const Rat sq1 = Rat(1) - sq0 + random_unit_rat(rng) * Rat(2) + Rat(1, 16);
  return construct_2isometry(sq0, sq1);
}

/// Head of 2..5 positive entries and any tail rule.
inline SquaredWeights random_bounded_below(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(2, 5), kind(0, 3);
  std::vector<Rat> head;
  for (int i = len(rng); i > 0; --i) head.push_back(random_positive_rat(rng));
  const Rat s = Rat(1) + random_unit_rat(rng) * Rat(3);
  switch (kind(rng)) {
    case 0: return {head, TailRule::ones()};
    case 1: return {head, TailRule::constant(random_positive_rat(rng))};
    case 2: return {head, TailRule::xi(s)};
    default: {
      TailRule t = TailRule::xi(s);
      t.reciprocal = true;
      return {head, t};
    }
  }
}

/// Iterated differences of order m > deg p kill (p(n))_n.
inline SuiteResult polynomial_annihilation(int count, unsigned seed) {
  std::mt19937 rng(seed);
  SuiteResult r;
  for (int t = 0; t < count; ++t, ++r.cases) {
    const Poly p = random_poly(rng, 6);
    const Eigen::Index last = p.degree() + 5;
    const auto seq = ExactSequence::generate(last, [&](Eigen::Index n) { return p.eval(Rat(static_cast<long>(n))); });
    for (Eigen::Index m = std::max(0, p.degree() + 1); m <= last; ++m)
      for (Eigen::Index j = 0; j + m <= last; ++j)
        if (!diff_transform(seq, m, j).is_zero()) r.fail("p = " + p.str() + ", m = " + std::to_string(m));
  }
  return r;
}

/// Moments of finitely supported probability measures on [0, 1] pass.
inline SuiteResult atomic_measures(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> atoms(1, 5);
  SuiteResult r;
  for (int t = 0; t < count; ++t, ++r.cases) {
    std::vector<std::pair<Rat, Rat>> mu;
    Rat total(0);
    for (int i = atoms(rng); i > 0; --i) {
      mu.emplace_back(random_unit_rat(rng), random_positive_rat(rng));
      total += mu.back().second;
    }
    const auto seq = ExactSequence::generate(12, [&](Eigen::Index n) {
      Rat acc(0);
      for (const auto& [at, mass] : mu) acc += mass / total * at.pow(static_cast<long>(n));
      return acc;
    });
    const auto v = hausdorff_test(seq, 12);
    if (!v.pass) r.fail(v.line());
    const auto s = stieltjes_test(seq, 6);
    if (!s.pass) r.fail(s.line());
    if (!boundedness_check(seq, Rat(1))) r.fail("moment above 1");
  }
  return r;
}

/// dual(dual(w)) = w and h_{w'} h_w = 1.
inline SuiteResult dual_involution(int count, unsigned seed, std::size_t probe = 20) {
  std::mt19937 rng(seed);
  SuiteResult r;
  for (int t = 0; t < count; ++t, ++r.cases) {
    const SquaredWeights w = random_bounded_below(rng);
    const SquaredWeights d = dual_weights(w);
    if (!(dual_weights(d) == w)) r.fail("involution fails for case " + std::to_string(t));
    for (std::size_t n = 0; n <= probe; ++n)
      if (h_of(d, n) * h_of(w, n) != Rat(1)) r.fail("reciprocity fails at n = " + std::to_string(n));
  }
  return r;
}

/// Closed-form fiber-0 dual moments agree with brute-force powers.
inline SuiteResult oracle_closed_form(int count, unsigned seed, std::size_t n_max = 10) {
  std::mt19937 rng(seed);
  SuiteResult r;
  for (int t = 0; t < count; ++t, ++r.cases) {
    const SquaredWeights w = random_two_isometry(rng);
    const SquaredWeights d = dual_weights(w);
    for (std::size_t n = 0; n <= n_max; ++n)
      if (dual_moment_fiber0(w, n) != oracle::gram_diagonal(d, 0, n))
        r.fail("sq0 = " + w[0].str() + ", sq1 = " + w[1].str() + ", n = " + std::to_string(n));
  }
  return r;
}

}  // namespace cdl::testing
