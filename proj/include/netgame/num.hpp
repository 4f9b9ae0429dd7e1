#pragma once

// Scalar type for weights, distances and costs: an exact int64 rational
// (canonical mode), a double (only for p-norm hosts with p >= 2), or a
// +infinity sentinel that is ordered above every finite value and absorbs
// addition. Rational arithmetic goes through 128-bit intermediates and
// throws std::overflow_error if a normalized result leaves int64 range.

#include <cstdint>
#include <string>
#include <string_view>

namespace netgame {

class Num {
 public:
  enum class Kind : std::uint8_t { Rational, Real, Infinite };

  constexpr Num() = default;
  Num(int value) : Num(static_cast<long long>(value)) {}
  Num(long long value) : num_(value) {}

  static Num ratio(long long num, long long den);
  static Num real(double value);
  static Num infinity();

  // Accepts "12", "-3", "7/4", "2.5", "-0.125", "inf".
  static Num parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_real() const { return kind_ == Kind::Real; }
  bool is_zero() const;
  bool is_negative() const;

  long long numerator() const;    // Rational only
  long long denominator() const;  // Rational only
  double to_double() const;       // finite only

  Num operator+(const Num& o) const;
  Num operator-(const Num& o) const;
  Num operator*(const Num& o) const;
  Num operator/(const Num& o) const;
  Num& operator+=(const Num& o) { return *this = *this + o; }

  // Exact total order; Infinite compares above all finite values.
  int cmp(const Num& o) const;
  bool operator==(const Num& o) const { return cmp(o) == 0; }
  bool operator!=(const Num& o) const { return cmp(o) != 0; }
  bool operator<(const Num& o) const { return cmp(o) < 0; }
  bool operator<=(const Num& o) const { return cmp(o) <= 0; }
  bool operator>(const Num& o) const { return cmp(o) > 0; }
  bool operator>=(const Num& o) const { return cmp(o) >= 0; }

  // "p/q" (or "p" when q == 1), doubles with 12 significant digits, "inf".
  std::string str() const;

 private:
  Kind kind_ = Kind::Rational;
  long long num_ = 0;
  long long den_ = 1;
  double real_ = 0.0;

  static Num make_rational(__int128 num, __int128 den);
};

// Equality up to eps. With eps == 0 the comparison is exact; otherwise both
// sides are compared as doubles, which is the contract for float-mode hosts.
bool approx_equal(const Num& a, const Num& b, double eps);

// Strict improvement test: does moving from cost `before` to cost `after`
// gain more than eps? An infinite `after` never improves; a finite `after`
// always improves on an infinite `before`.
bool improves(const Num& before, const Num& after, double eps);

}  // namespace netgame
