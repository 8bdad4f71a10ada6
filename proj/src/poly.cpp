#include "cdl/poly.hpp"

#include <sstream>

namespace cdl {

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::linear_power(const Rat& a, const Rat& b, unsigned e) {
  std::vector<Rat> c(e + 1);
  for (unsigned k = 0; k <= e; ++k) {
    c[k] = binomial(e, k) * a.pow(static_cast<long>(e - k)) * b.pow(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

const Rat& Poly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  const Rat inv = leading().inverse();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(1);
  Poly base = *this;
  while (e != 0) {
    if ((e & 1U) != 0) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += a.coeffs_[i].mpq() * b.coeffs_[j].mpq();
    }
  }
  std::vector<Rat> c;
  c.reserve(acc.size());
  for (auto& q : acc) c.emplace_back(q);
  return Poly(std::move(c));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rat mag = c.abs();
    if (i == 0 || mag != Rat(1)) os << mag.str();
    if (i > 0) {
      if (mag != Rat(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<mpq_class> r;
  r.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) r.push_back(c.mpq());
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const mpq_class lead_inv = 1 / bc.back().mpq();
  std::vector<Rat> q(r.size() - db);
  mpq_class t;
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    const mpq_class f = r[k] * lead_inv;
    const std::size_t shift = k - db;
    for (std::size_t i = 0; i <= db; ++i) {
      t = f * bc[i].mpq();
      r[shift + i] -= t;
    }
    q[shift] = Rat(f);
  }
  r.resize(db);
  std::vector<Rat> rem;
  rem.reserve(r.size());
  for (auto& c : r) rem.emplace_back(c);
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic();
  Poly y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace cdl
