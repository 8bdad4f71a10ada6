#include "cdl/family.hpp"

#include "cdl/oracle.hpp"

namespace cdl::family {

namespace {

// 2^j (1+x)^(2j) / (1 + (j+2)x)
RatFn s_term(std::size_t j) {
  return RatFn(Rat::pow2(static_cast<long>(j)) * Poly::linear_power(1, 1, static_cast<unsigned>(2 * j)),
               Poly({Rat(1), Rat(static_cast<long>(j + 2))}));
}

RatFn omega_from_s(std::size_t n, const RatFn& s) {
  const Poly one_plus_2x_sq = Poly::linear_power(1, 2, 2);
  const RatFn inner = RatFn(Rat(1)) + RatFn(one_plus_2x_sq) * s;
  return inner / RatFn(Rat::pow2(static_cast<long>(n)) * Poly::linear_power(1, 1, static_cast<unsigned>(2 * n)));
}

std::vector<RatFn> omegas(std::size_t n_max) {
  std::vector<RatFn> out;
  RatFn s;
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.push_back(omega_from_s(n, s));
    s += s_term(n);
  }
  return out;
}

RatFn alternating_sum(const std::vector<RatFn>& omega, std::size_t m) {
  RatFn d;
  for (std::size_t n = 0; n <= m; ++n) {
    const Rat c = binomial(m, n) * Rat(n % 2 == 0 ? 1 : -1);
    d += RatFn(Poly::constant(c)) * omega[n];
  }
  return d;
}

int sign_class(const Rat& v) { return v.sign() < 0 ? -1 : 1; }

}  // namespace

FamilyParam::FamilyParam(Rat x) : x_(std::move(x)) {
  if (x_.sign() < 0) throw DomainError("family parameter must satisfy x >= 0, got " + x_.str());
}

SquaredWeights family_weights(const FamilyParam& p) {
  const Rat& x = p.x();
  const Rat w2sq = (Rat(1) + Rat(3) * x) / (Rat(1) + Rat(2) * x);
  return {{Rat(1, 2), Rat(1, 2) + x, w2sq}, TailRule::xi(w2sq)};
}

bool in_domain(std::size_t n, const Rat& x) {
  return x > -Rat(1, static_cast<long>(n + 1));
}

Rat omega_eval(std::size_t n, const Rat& x) {
  if (!in_domain(n, x)) {
    throw DomainError("x = " + x.str() + " lies outside (-1/" + std::to_string(n + 1) + ", oo)");
  }
  const Rat one_x_sq = (Rat(1) + x) * (Rat(1) + x);
  Rat sum(0);
  Rat scale(1);  // 2^j (1+x)^(2j)
  for (std::size_t j = 0; j < n; ++j) {
    sum += scale / (Rat(1) + Rat(static_cast<long>(j + 2)) * x);
    scale *= Rat(2) * one_x_sq;
  }
  const Rat one_2x = Rat(1) + Rat(2) * x;
  return (Rat(1) + one_2x * one_2x * sum) / scale;
}

RatFn s_function(std::size_t n) {
  RatFn s;
  for (std::size_t j = 0; j < n; ++j) s += s_term(j);
  return s;
}

RatFn omega_function(std::size_t n) { return omega_from_s(n, s_function(n)); }

RatFn d_function(std::size_t m) { return alternating_sum(omegas(m), m); }

FamilySymbolics build_symbolics(std::size_t n_max, std::size_t m_max) {
  if (m_max > n_max) throw std::invalid_argument("build_symbolics needs m_max <= n_max");
  FamilySymbolics fs;
  RatFn s;
  for (std::size_t n = 0; n <= n_max; ++n) {
    fs.s.push_back(s);
    fs.omega.push_back(omega_from_s(n, s));
    s += s_term(n);
  }
  for (std::size_t m = 0; m <= m_max; ++m) fs.d.push_back(alternating_sum(fs.omega, m));
  return fs;
}

std::vector<Rat> d_taylor(std::size_t m, unsigned order) {
  std::vector<Rat> c = d_function(m).taylor_at_zero(order);
  for (unsigned l = 0; l <= order; ++l) c[l] *= factorial(l);
  return c;
}

SDerivative s_derivative_at_zero(std::size_t n, unsigned l) {
  return {s_function(n).taylor_at_zero(l)[l] * factorial(l), l <= 4};
}

std::string SignScan::pattern() const {
  std::string p;
  p.reserve(values.size());
  for (const auto& v : values) p += v.sign() < 0 ? '-' : (v.is_zero() ? '0' : '+');
  return p;
}

bool SignScan::all_negative() const {
  for (const auto& v : values)
    if (v.sign() >= 0) return false;
  return true;
}

bool SignScan::all_nonnegative() const {
  for (const auto& v : values)
    if (v.sign() < 0) return false;
  return true;
}

SignScan sign_scan(std::size_t m, const Rat& x_max, std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("sign_scan needs at least one step");
  if (x_max.sign() <= 0) throw DomainError("sign_scan needs x_max > 0");
  const RatFn d = d_function(m);
  SignScan scan;
  scan.m = m;
  scan.x_max = x_max;
  scan.steps = steps;
  for (std::size_t k = 1; k <= steps; ++k) {
    const Rat x = x_max * Rat(static_cast<long>(k), static_cast<long>(steps));
    scan.xs.push_back(x);
    scan.values.push_back(d.eval(x));
  }
  for (std::size_t k = 0; k < steps && scan.values[k].sign() < 0; ++k) scan.negative_prefix_end = scan.xs[k];
  for (std::size_t k = 0; k + 1 < steps; ++k) {
    const int left = sign_class(scan.values[k]);
    if (left == sign_class(scan.values[k + 1])) continue;
    Rat lo = scan.xs[k], hi = scan.xs[k + 1];
    const Rat width = x_max / Rat::pow2(10);
    while (hi - lo > width) {
      const Rat mid = (lo + hi) / Rat(2);
      if (sign_class(d.eval(mid)) == left) lo = mid;
      else hi = mid;
    }
    scan.crossing = Bracket{lo, hi};
    break;
  }
  return scan;
}

CounterexampleVerdict counterexample_verdict(const Rat& x, std::size_t depth, std::size_t horizon,
                                             std::size_t isometry_depth) {
  if (x.is_zero()) {
    throw BoundaryCase(
        "x = 0 gives h(n) = 1 for all n: the operator is an isometry, its Cauchy dual is an "
        "isometry and hence subnormal, so the counterexample breaks down at x = 0");
  }
  const FamilyParam p(x);
  const SquaredWeights w = family_weights(p);

  CounterexampleVerdict v;
  v.x = x;
  v.report = operator_report(w, std::max<std::size_t>(isometry_depth, 2));
  v.moments = ExactSequence::generate(static_cast<Eigen::Index>(horizon),
                                      [&](Eigen::Index n) { return omega_eval(static_cast<std::size_t>(n), x); });
  v.hausdorff = hausdorff_test(v.moments, static_cast<Eigen::Index>(depth));

  const SquaredWeights dual = dual_weights(w);
  const ExactSequence orbit = oracle::hsequence(dual, 0, horizon);
  v.closed_form_agrees = true;
  v.oracle_agrees = true;
  for (std::size_t n = 0; n <= horizon; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    v.closed_form_agrees = v.closed_form_agrees && dual_moment_fiber0(w, n) == v.moments[i];
    v.oracle_agrees = v.oracle_agrees && orbit[i] == v.moments[i];
  }
  return v;
}

FigureTable figure_table(const std::vector<std::size_t>& ms, const Rat& x_max, std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("figure_table needs at least one step");
  if (x_max.sign() <= 0) throw DomainError("figure_table needs x_max > 0");
  FigureTable t;
  t.ms = ms;
  std::vector<RatFn> ds;
  for (std::size_t m : ms) ds.push_back(d_function(m));
  for (std::size_t k = 1; k <= steps; ++k) {
    const Rat x = x_max * Rat(static_cast<long>(k), static_cast<long>(steps));
    t.xs.push_back(x);
    std::vector<Rat> row;
    for (const auto& d : ds) row.push_back(d.eval(x));
    t.values.push_back(std::move(row));
  }
  return t;
}

}  // namespace cdl::family
