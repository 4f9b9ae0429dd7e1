#include "netgame/num.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace netgame {

namespace {

constexpr long long kInt64Max = std::numeric_limits<long long>::max();

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

[[noreturn]] void overflow() { throw std::overflow_error("rational overflow: value outside 64-bit range"); }

}  // namespace

Num Num::make_rational(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kInt64Max || num < -static_cast<__int128>(kInt64Max) || den > kInt64Max) overflow();
  Num r;
  r.kind_ = Kind::Rational;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Num Num::ratio(long long num, long long den) {
  return make_rational(static_cast<__int128>(num), static_cast<__int128>(den));
}

Num Num::real(double value) {
  if (std::isnan(value)) throw std::domain_error("NaN is not a valid Num");
  if (std::isinf(value)) return infinity();
  Num r;
  r.kind_ = Kind::Real;
  r.real_ = value;
  return r;
}

Num Num::infinity() {
  Num r;
  r.kind_ = Kind::Infinite;
  return r;
}

Num Num::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number literal");
  std::string s(text);
  if (s == "inf" || s == "+inf") return infinity();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    size_t pos1 = 0, pos2 = 0;
    long long p = std::stoll(s.substr(0, slash), &pos1);
    long long q = std::stoll(s.substr(slash + 1), &pos2);
    if (pos1 != slash || pos2 != s.size() - slash - 1)
      throw std::invalid_argument("malformed rational literal: " + s);
    return ratio(p, q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    bool neg = !s.empty() && s[0] == '-';
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (neg) digits = digits.substr(1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || frac_len == 0 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed decimal literal: " + s);
    if (frac_len > 18) overflow();  // 10^frac_len must stay in 64-bit range
    __int128 num = 0;
    for (char c : digits) {
      num = num * 10 + (c - '0');
      if (num > static_cast<__int128>(kInt64Max) * 1000000000LL) overflow();
    }
    __int128 den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return make_rational(neg ? -num : num, den);
  }
  size_t pos = 0;
  long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("malformed integer literal: " + s);
  return Num(v);
}

bool Num::is_zero() const {
  switch (kind_) {
    case Kind::Rational: return num_ == 0;
    case Kind::Real: return real_ == 0.0;
    case Kind::Infinite: return false;
  }
  return false;
}

bool Num::is_negative() const {
  switch (kind_) {
    case Kind::Rational: return num_ < 0;
    case Kind::Real: return real_ < 0.0;
    case Kind::Infinite: return false;
  }
  return false;
}

long long Num::numerator() const {
  if (kind_ != Kind::Rational) throw std::logic_error("numerator() on non-rational Num");
  return num_;
}

long long Num::denominator() const {
  if (kind_ != Kind::Rational) throw std::logic_error("denominator() on non-rational Num");
  return den_;
}

double Num::to_double() const {
  switch (kind_) {
    case Kind::Rational: return static_cast<double>(num_) / static_cast<double>(den_);
    case Kind::Real: return real_;
    case Kind::Infinite: return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

Num Num::operator+(const Num& o) const {
  if (kind_ == Kind::Infinite || o.kind_ == Kind::Infinite) return infinity();
  if (kind_ == Kind::Real || o.kind_ == Kind::Real) return real(to_double() + o.to_double());
  return make_rational(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                       static_cast<__int128>(den_) * o.den_);
}

Num Num::operator-(const Num& o) const {
  if (o.kind_ == Kind::Infinite) throw std::domain_error("cannot subtract infinity");
  if (kind_ == Kind::Infinite) return infinity();
  if (kind_ == Kind::Real || o.kind_ == Kind::Real) return real(to_double() - o.to_double());
  return make_rational(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                       static_cast<__int128>(den_) * o.den_);
}

Num Num::operator*(const Num& o) const {
  if (kind_ == Kind::Infinite || o.kind_ == Kind::Infinite) {
    const Num& fin = kind_ == Kind::Infinite ? o : *this;
    if (!fin.is_infinite() && (fin.is_zero() || fin.is_negative()))
      throw std::domain_error("infinity times non-positive value");
    return infinity();
  }
  if (kind_ == Kind::Real || o.kind_ == Kind::Real) return real(to_double() * o.to_double());
  return make_rational(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Num Num::operator/(const Num& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.kind_ == Kind::Infinite) {
    if (kind_ == Kind::Infinite) throw std::domain_error("infinity / infinity");
    return Num(0);
  }
  if (kind_ == Kind::Infinite) {
    if (o.is_negative()) throw std::domain_error("infinity divided by negative value");
    return infinity();
  }
  if (kind_ == Kind::Real || o.kind_ == Kind::Real) return real(to_double() / o.to_double());
  return make_rational(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

int Num::cmp(const Num& o) const {
  if (kind_ == Kind::Infinite && o.kind_ == Kind::Infinite) return 0;
  if (kind_ == Kind::Infinite) return 1;
  if (o.kind_ == Kind::Infinite) return -1;
  if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
  }
  double a = to_double(), b = o.to_double();
  return a < b ? -1 : a > b ? 1 : 0;
}

std::string Num::str() const {
  switch (kind_) {
    case Kind::Rational: {
      if (den_ == 1) return std::to_string(num_);
      return std::to_string(num_) + "/" + std::to_string(den_);
    }
    case Kind::Real: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", real_);
      return buf;
    }
    case Kind::Infinite: return "inf";
  }
  return "";
}

bool approx_equal(const Num& a, const Num& b, double eps) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  if (eps == 0.0) return a == b;
  return std::fabs(a.to_double() - b.to_double()) <= eps;
}

bool improves(const Num& before, const Num& after, double eps) {
  if (after.is_infinite()) return false;
  if (before.is_infinite()) return true;
  if (eps == 0.0) return after < before;
  return after.to_double() + eps < before.to_double();
}

}  // namespace netgame
