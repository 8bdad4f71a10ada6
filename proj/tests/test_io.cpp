#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "cdl/io.hpp"
#include "generators.hpp"

using cdl::Rat;
using cdl::SquaredWeights;
using cdl::TailRule;
namespace io = cdl::io;

TEST_CASE("explicit weight specs") {
  const auto w = io::parse_weight_spec(
      "# family at x = 1/2\n"
      "kind = explicit\n"
      "sq = [1/2, 1, 5/4]\n"
      "tail = xi(w2sq=5/4)\n");
  CHECK(w.prefix(4) == std::vector<Rat>{Rat(1, 2), Rat(1), Rat(5, 4), Rat(6, 5), Rat(7, 6)});

  const auto inline_comments = io::parse_weight_spec("kind = explicit  # shift\nsq = [1, 1] # head\n");
  CHECK(inline_comments == SquaredWeights::ones());
  const auto ones = io::parse_weight_spec("kind=explicit\nsq=[1,1]\n");
  CHECK(ones == SquaredWeights::ones());
  CHECK(io::parse_weight_spec("kind = explicit\nsq = [2, 0.5]\ntail = const(3)")[9] == Rat(3));
  CHECK(io::parse_weight_spec("kind = explicit\nsq = [1, 1]\ntail = inv_xi(w2sq=2)")[3] == Rat(2, 3));
  // The key inside the call is optional.
  CHECK(io::parse_weight_spec("kind = explicit\nsq = [1, 1]\ntail = xi(2)")[3] == Rat(3, 2));
  CHECK(io::parse_weight_spec("kind = family\nx = 1/2\n") ==
        cdl::family::family_weights(cdl::family::FamilyParam(Rat(1, 2))));
}

TEST_CASE("malformed weight specs") {
  const char* bad[] = {
      "",
      "sq = [1, 1]",
      "kind = explicit",
      "kind = explicit\nsq = 1, 1",
      "kind = explicit\nsq = [1, x]",
      "kind = explicit\nsq = [1, -1]",
      "kind = explicit\nsq = [1, 1]\ntail = xi(w2sq=1/2)",
      "kind = explicit\nsq = [1, 1]\ntail = wobbly",
      "kind = explicit\nsq = [1, 1]\nsq = [1, 1]",
      "kind = explicit\nsq = [1, 1]\ncolour = red",
      "kind = family",
      "kind = family\nx = -1",
      "kind = family\nx = 1\nsq = [1]",
      "kind = other",
      "kind explicit",
  };
  for (const char* text : bad) {
    CAPTURE(std::string(text));
    CHECK_THROWS_AS(io::parse_weight_spec(text), cdl::DomainError);
  }
}

TEST_CASE("weight spec round trip") {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rat> head;
    const int len = 2 + t % 4;
    for (int i = 0; i < len; ++i) head.push_back(cdl::testing::random_unit_rat(rng) * Rat(3));
    TailRule tail;
    switch (t % 4) {
      case 0: tail = TailRule::ones(); break;
      case 1: tail = TailRule::constant(cdl::testing::random_positive_rat(rng)); break;
      case 2: tail = TailRule::xi(Rat(1) + cdl::testing::random_unit_rat(rng)); break;
      default: tail = TailRule::xi(Rat(1) + cdl::testing::random_unit_rat(rng)); tail.reciprocal = true; break;
    }
    const SquaredWeights w(head, tail);
    const auto back = io::parse_weight_spec(io::format_weight_spec(w));
    CHECK(back.prefix(12) == w.prefix(12));
  }
  CHECK(io::format_weight_spec(SquaredWeights::ones()) == "kind = explicit\nsq = [1, 1]\ntail = ones\n");
}

TEST_CASE("sequences") {
  const auto s = io::parse_sequence("# header\n1\n\n1/2  # half\n0.25\n  1e-1 \n");
  REQUIRE(s.last_index() == 3);
  CHECK(s[1] == Rat(1, 2));
  CHECK(s[2] == Rat(1, 4));
  CHECK(s[3] == Rat(1, 10));
  CHECK_THROWS_AS(io::parse_sequence("# nothing\n"), cdl::DomainError);
  CHECK_THROWS_AS(io::parse_sequence("1\nabc\n"), cdl::DomainError);
  CHECK_THROWS_AS(io::read_sequence("/nonexistent/cdl-sequence.txt"), cdl::DomainError);
}

TEST_CASE("files") {
  const std::string path = "cdl_test_io_spec.txt";
  {
    std::ofstream out(path);
    out << "kind = family\nx = 1/10\n";
  }
  CHECK(io::read_weight_spec(path)[0] == Rat(1, 2));
  std::remove(path.c_str());
}

TEST_CASE("figure csv") {
  cdl::family::FigureTable t;
  t.ms = {4, 5};
  t.xs = {Rat(1, 3), Rat(1, 2)};
  t.values = {{Rat(2, 3), Rat(-1, 100000)}, {Rat(0), Rat(5)}};
  std::ostringstream dec;
  io::write_figure_csv(dec, t, false);
  CHECK(dec.str() == "x,D4,D5\n0.333333333333,0.666666666667,-1e-05\n0.5,0,5\n");
  std::ostringstream exact;
  io::write_figure_csv(exact, t, true);
  CHECK(exact.str() == "x,D4,D5\n1/3,2/3,-1/100000\n1/2,0,5\n");
}
