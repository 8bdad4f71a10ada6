#include "cdl/rat.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace cdl {

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Optional sign followed by digits.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  mpz_class v(std::string(digits), 10);
  return negative ? mpz_class(-v) : v;
}

Rat parse_decimal(std::string_view s, std::string_view whole) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    mantissa = s.substr(0, epos);
    const mpz_class e = parse_integer(s.substr(epos + 1), whole);
    if (!e.fits_slong_p() || abs(e) > 100000) {
      throw DomainError("decimal exponent out of range: '" + std::string(whole) + "'");
    }
    exponent = e.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  const auto dot = mantissa.find('.');
  std::string_view int_part = mantissa.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : mantissa.substr(dot + 1);
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw DomainError("malformed decimal: '" + std::string(whole) + "'");
  }
  mpz_class digits(std::string(int_part) + std::string(frac_part), 10);
  if (negative) digits = -digits;
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) return Rat(mpz_class(digits * pow10(static_cast<unsigned long>(exponent))), 1);
  return Rat(digits, pow10(static_cast<unsigned long>(-exponent)));
}

}  // namespace

Rat::Rat(long long v) : value_(static_cast<long>(v)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(const mpq_class& q) : value_(q) {
  if (value_.get_den() == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw DomainError("empty rational literal");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class p = parse_integer(s.substr(0, slash), text);
    const mpz_class q = parse_integer(s.substr(slash + 1), text);
    if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rat(p, q);
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return Rat(parse_integer(s, text), mpz_class(1));
}

Rat Rat::pow2(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rat(p, 1) : Rat(mpz_class(1), p);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1) / value_);
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

std::optional<Rat> Rat::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (mpz_perfect_square_p(num().get_mpz_t()) == 0 || mpz_perfect_square_p(den().get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return Rat(sqrt(num()), sqrt(den()));
}

std::string Rat::str() const {
  return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

Rat binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(r, 1);
}

Rat factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rat(r, 1);
}

std::string to_decimal(const Rat& r, int digits) {
  if (digits < 1) throw DomainError("to_decimal needs at least one significant digit");
  if (r.is_zero()) return "0";
  const Rat a = r.abs();
  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.den().get_mpz_t(), 10));
  auto ten_pow = [](long k) {
    return k >= 0 ? Rat(pow10(static_cast<unsigned long>(k)), 1)
                  : Rat(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (a < ten_pow(e)) --e;
  while (a >= ten_pow(e + 1)) ++e;

  const Rat scaled = a * ten_pow(digits - 1 - e);
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
  const int half = cmp(mpz_class(2 * rem), scaled.den());
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) ++q;
  if (q == pow10(static_cast<unsigned long>(digits))) {
    q /= 10;
    ++e;
  }
  std::string mant = q.get_str();  // exactly `digits` characters

  std::string out = r.sign() < 0 ? "-" : "";
  if (e < -4 || e >= digits) {
    std::string frac = mant.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += mant.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    const long ae = e < 0 ? -e : e;
    out += std::string(e < 0 ? "e-" : "e+") + (ae < 10 ? "0" : "") + std::to_string(ae);
    return out;
  }
  std::string int_part, frac_part;
  if (e >= 0) {
    int_part = mant.substr(0, static_cast<std::size_t>(e + 1));
    frac_part = mant.substr(static_cast<std::size_t>(e + 1));
  } else {
    int_part = "0";
    frac_part = std::string(static_cast<std::size_t>(-e - 1), '0') + mant;
  }
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  out += int_part;
  if (!frac_part.empty()) out += "." + frac_part;
  return out;
}

}  // namespace cdl
