#pragma once

#include <random>
#include <vector>

#include "cdl/poly.hpp"
#include "cdl/ratfn.hpp"
#include "cdl/rat.hpp"

namespace cdl::testing {

inline Rat random_rat(std::mt19937& rng, long max_num = 9, long max_den = 9) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline Rat random_unit_rat(std::mt19937& rng, long max_den = 12) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long q = den(rng);
  std::uniform_int_distribution<long> num(0, q);
  return Rat(num(rng), q);
}

inline Rat random_positive_rat(std::mt19937& rng, long max_num = 9, long max_den = 9) {
  std::uniform_int_distribution<long> num(1, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rat(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = random_rat(rng);
  return Poly(std::move(c));
}

inline RatFn random_ratfn(std::mt19937& rng, int num_degree, int den_degree) {
  Poly den;
  while (den.is_zero()) den = random_poly(rng, den_degree);
  return RatFn(random_poly(rng, num_degree), den);
}

}  // namespace cdl::testing
