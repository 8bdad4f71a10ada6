#include "doctest.h"

#include <cmath>
#include <random>

#include "cdl/moments.hpp"
#include "generators.hpp"

using cdl::ExactSequence;
using cdl::FloatSequence;
using cdl::Rat;

namespace {

ExactSequence geometric(const Rat& c, Eigen::Index last) {
  return ExactSequence::generate(last, [&](Eigen::Index n) { return c.pow(static_cast<long>(n)); });
}

}  // namespace

TEST_CASE("diff_transform") {
  const auto ones = ExactSequence::generate(5, [](Eigen::Index) { return Rat(1); });
  CHECK(cdl::diff_transform(ones, 3, 0) == Rat(0));
  const ExactSequence delta{Rat(1), Rat(0), Rat(0), Rat(0)};
  CHECK(cdl::diff_transform(delta, 2, 0) == Rat(1));
  // (1-c)^m c^j
  CHECK(cdl::diff_transform(geometric(Rat(1, 2), 4), 2, 1) == Rat(1, 8));
  CHECK(cdl::diff_transform(ones, 0, 5) == Rat(1));
  CHECK_THROWS_AS(cdl::diff_transform(ones, 3, 3), cdl::InsufficientPrefix);

  const FloatSequence f{1.0, 0.5, 0.25, 0.125};
  CHECK(cdl::diff_transform(f, 2, 1) == doctest::Approx(0.125));
}

TEST_CASE("hausdorff_test") {
  const auto harmonic = ExactSequence::generate(12, [](Eigen::Index n) { return Rat(1, n + 1); });
  const auto ok = cdl::hausdorff_test(harmonic, 6);
  CHECK(ok.pass);
  CHECK(ok.line() == "PASS depth=6 n=12");

  const auto bad = cdl::hausdorff_test(geometric(Rat(2), 4), 1);
  REQUIRE_FALSE(bad.pass);
  const auto& w = std::get<cdl::DifferenceWitness>(bad.witness);
  CHECK(w.m == 1);
  CHECK(w.j == 0);
  CHECK(bad.value == Rat(-1));
  CHECK(bad.line() == "FAIL m=1 j=0 value=-1");

  // A negative term is caught at m = 0 before anything else.
  const ExactSequence negative{Rat(1), Rat(-1, 3), Rat(0)};
  CHECK(cdl::hausdorff_test(negative, 2).line() == "FAIL m=0 j=1 value=-1/3");

  CHECK_THROWS(cdl::hausdorff_test(harmonic, 0));
}

TEST_CASE("hausdorff_test reports the first violation in (m, j) order") {
  // gamma = (4, 3, 2, 1, 2): first differences 1, 1, 1, -1 -> (m=1, j=3);
  // second differences 0, 0, 2 are fine; the m=1 violation wins even though
  // deeper ones may exist.
  const ExactSequence seq{Rat(4), Rat(3), Rat(2), Rat(1), Rat(2)};
  const auto v = cdl::hausdorff_test(seq, 4);
  CHECK(v.line() == "FAIL m=1 j=3 value=-1");
  // Capping the shift at 2 hides it; the next one is the third difference
  // gamma_1 - 3 gamma_2 + 3 gamma_3 - gamma_4 = -2.
  CHECK(cdl::hausdorff_test(seq, 4, {}, Eigen::Index{2}).line() == "FAIL m=3 j=1 value=-2");
}

TEST_CASE("hausdorff_test agrees with diff_transform on every tested pair") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto seq = ExactSequence::generate(8, [&](Eigen::Index) { return cdl::testing::random_rat(rng); });
    const auto v = cdl::hausdorff_test(seq, 8);
    std::optional<std::pair<Eigen::Index, Eigen::Index>> first;
    for (Eigen::Index m = 0; m <= 8 && !first; ++m)
      for (Eigen::Index j = 0; j + m <= 8 && !first; ++j)
        if (cdl::diff_transform(seq, m, j).sign() < 0) first = {m, j};
    REQUIRE(v.pass == !first.has_value());
    if (first) {
      const auto& w = std::get<cdl::DifferenceWitness>(v.witness);
      CHECK(w.m == first->first);
      CHECK(w.j == first->second);
      CHECK(v.value == cdl::diff_transform(seq, w.m, w.j));
    }
  }
}

TEST_CASE("determinant") {
  cdl::MatrixX<Rat> a(3, 3);
  a << Rat(0), Rat(1), Rat(2), Rat(1), Rat(0), Rat(3), Rat(4), Rat(-3), Rat(8);
  CHECK(cdl::determinant(a) == Rat(-2));
  cdl::MatrixX<Rat> h(2, 2);
  h << Rat(1, 2), Rat(1, 3), Rat(1, 3), Rat(1, 4);
  CHECK(cdl::determinant(h) == Rat(1, 72));
}

TEST_CASE("stieltjes_test") {
  const auto fact = ExactSequence::generate(8, [](Eigen::Index n) { return cdl::factorial(static_cast<unsigned long>(n)); });
  const auto v = cdl::stieltjes_test(fact, 4);
  CHECK(v.pass);
  CHECK(v.line() == "PASS depth=4 n=8");

  const ExactSequence alternating{Rat(1), Rat(0), Rat(1), Rat(0)};
  const auto bad = cdl::stieltjes_test(alternating, 1);
  REQUIRE_FALSE(bad.pass);
  const auto& w = std::get<cdl::HankelWitness>(bad.witness);
  CHECK(w.shift == 1);
  CHECK(w.order == 2);
  CHECK(bad.value == Rat(-1));
  CHECK(bad.line() == "FAIL hankel=1 order=2 value=-1");

  CHECK_THROWS_AS(cdl::stieltjes_test(fact, 5), cdl::InsufficientPrefix);
}

TEST_CASE("exact PSD handles singular Hankel matrices") {
  // Point mass at 1: every Hankel matrix is the all-ones rank-one matrix.
  const auto point = ExactSequence::generate(6, [](Eigen::Index) { return Rat(1); });
  CHECK(cdl::stieltjes_test(point, 3).pass);

  cdl::MatrixX<Rat> m(3, 3);
  m << Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(2);
  const auto v = cdl::detail::first_negative_minor(m);
  REQUIRE(v.has_value());
  CHECK(v->order == 1);
  CHECK(v->value == Rat(-1));
}

TEST_CASE("float backend") {
  const auto fact = cdl::to_float(ExactSequence::generate(8, [](Eigen::Index n) { return cdl::factorial(static_cast<unsigned long>(n)); }));
  CHECK(cdl::stieltjes_test(fact, 4, cdl::Tolerance{1e-6}).pass);
  const FloatSequence alternating{1.0, 0.0, 1.0, 0.0};
  const auto bad = cdl::stieltjes_test(alternating, 1);
  CHECK(bad.line() == "FAIL hankel=1 order=2 value=-1");

  // Violations below the tolerance are ignored on the float path only.
  const FloatSequence nearly{1.0, 1.0 + 1e-12};
  CHECK(cdl::hausdorff_test(nearly, 1).pass);
  CHECK_FALSE(cdl::hausdorff_test(nearly, 1, cdl::Tolerance{1e-13}).pass);
  const ExactSequence exact_nearly{Rat(1), Rat(1) + Rat(1, 1000000000000L)};
  CHECK_FALSE(cdl::hausdorff_test(exact_nearly, 1, cdl::Tolerance{1.0}).pass);
}

TEST_CASE("boundedness_check") {
  CHECK(cdl::boundedness_check(ExactSequence::generate(6, [](Eigen::Index) { return Rat(1); }), Rat(1)));
  CHECK_FALSE(cdl::boundedness_check(geometric(Rat(2), 4), Rat(1)));
  CHECK(cdl::boundedness_check(FloatSequence{0.5, 1.0}, 1.0));
}

TEST_CASE("shifted sequences") {
  const auto g = geometric(Rat(1, 3), 5);
  const auto s = g.shifted(2);
  CHECK(s.last_index() == 3);
  CHECK(s[0] == Rat(1, 9));
  CHECK_THROWS_AS(g.shifted(6), cdl::InsufficientPrefix);
}
