#include "cdl/ratfn.hpp"

namespace cdl {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

void RatFn::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Rat lead = den_.leading();
  if (lead != Rat(1)) {
    const Rat inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rat RatFn::eval(const Rat& x0) const {
  const Rat d = den_.eval(x0);
  if (d.is_zero()) throw PoleError("pole at x = " + x0.str());
  return num_.eval(x0) / d;
}

double RatFn::eval(double x0) const { return num_.eval(x0) / den_.eval(x0); }

RatFn RatFn::derivative(unsigned order) const {
  RatFn f = *this;
  for (unsigned k = 0; k < order && !f.is_zero(); ++k) {
    if (f.den_.degree() == 0) {
      f = RatFn(f.num_.derivative(), f.den_);
      continue;
    }
    // d = g u, d' = g v  =>  (n/d)' = (n' u - n v) / (d u)
    const Poly dd = f.den_.derivative();
    const Poly g = gcd(f.den_, dd);
    const Poly u = exact_div(f.den_, g);
    const Poly v = exact_div(dd, g);
    f = RatFn(f.num_.derivative() * u - f.num_ * v, f.den_ * u);
  }
  return f;
}

std::vector<Rat> RatFn::taylor_at_zero(unsigned order) const {
  const Rat d0 = den_.coeff(0);
  if (d0.is_zero()) throw PoleError("pole at x = 0");
  const Rat inv = d0.inverse();
  std::vector<Rat> c(order + 1);
  const auto& dc = den_.coeffs();
  for (unsigned k = 0; k <= order; ++k) {
    Rat acc = num_.coeff(k);
    for (std::size_t i = 1; i < dc.size() && i <= k; ++i) acc -= dc[i] * c[k - i];
    c[k] = acc * inv;
  }
  return c;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const Poly g = gcd(den_, o.den_);
  if (g.degree() == 0) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = Poly::constant(1);
    return *this;
  }
  const Poly b1 = exact_div(den_, g);
  const Poly d1 = exact_div(o.den_, g);
  Poly num = num_ * d1 + o.num_ * b1;
  Poly den = b1 * o.den_;
  if (num.is_zero()) return *this = RatFn();
  const Poly g2 = gcd(num, g);
  if (g2.degree() > 0) {
    num = exact_div(num, g2);
    den = exact_div(den, g2);
  }
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) return *this = RatFn();
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  Poly num = exact_div(num_, g1) * exact_div(o.num_, g2);
  Poly den = exact_div(den_, g2) * exact_div(o.den_, g1);
  // Both factors of den are monic and the cross gcds are gone, so the
  // result is already canonical.
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero rational function");
  return *this *= RatFn(o.den_, o.num_);  // canonicalizes the reciprocal
}

RatFn operator-(const RatFn& a) {
  RatFn r = a;
  r.num_ = -r.num_;
  return r;
}

std::string RatFn::str(const char* var) const {
  if (den_.degree() == 0) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace cdl
