#include "maxtoll/rational.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>

#include "maxtoll/error.hpp"

namespace maxtoll {

namespace {

using Int = Rational::Int;
using UInt = unsigned __int128;

constexpr Int kIntMin = static_cast<Int>(static_cast<UInt>(1) << 127);

[[noreturn]] void overflow(const char* what) {
  throw Error(ErrorCode::Overflow, std::string("rational ") + what + " exceeds 128-bit range");
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r) || r == kIntMin) overflow("addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r) || r == kIntMin) overflow("subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r) || r == kIntMin) overflow("multiplication");
  return r;
}

UInt uabs(Int v) { return v < 0 ? static_cast<UInt>(-v) : static_cast<UInt>(v); }

Int gcd(Int a, Int b) {
  UInt x = uabs(a);
  UInt y = uabs(b);
  while (y != 0) {
    UInt t = x % y;
    x = y;
    y = t;
  }
  return static_cast<Int>(x);
}

// Floor division for positive divisor.
Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

// Compares a/b with c/d (b, d > 0) without overflow using continued-fraction
// expansion. Returns -1, 0, 1.
int compare_slow(Int a, Int b, Int c, Int d) {
  int sign = 1;
  for (;;) {
    Int qa = floor_div(a, b);
    Int qc = floor_div(c, d);
    if (qa != qc) return qa < qc ? -sign : sign;
    Int ra = a - qa * b;
    Int rc = c - qc * d;
    if (ra == 0 || rc == 0) {
      if (ra == rc) return 0;
      return ra == 0 ? -sign : sign;
    }
    // a/b = q + ra/b, compare b/ra vs d/rc with reversed sign.
    a = b;
    b = ra;
    c = d;
    d = rc;
    sign = -sign;
  }
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (num == kIntMin || den == kIntMin) overflow("construction");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::int64_t Rational::to_int64() const {
  if (den_ != 1) throw Error(ErrorCode::InvalidArgument, "rational " + to_string() + " is not an integer");
  if (num_ > std::numeric_limits<std::int64_t>::max() || num_ < std::numeric_limits<std::int64_t>::min()) {
    overflow("narrowing");
  }
  return static_cast<std::int64_t>(num_);
}

double Rational::to_double() const noexcept {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = checked_add(num_, rhs.num_);
    return *this;
  }
  Int g = gcd(den_, rhs.den_);
  Int lhs_scale = rhs.den_ / g;
  Int rhs_scale = den_ / g;
  Int num = checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale));
  Int den = checked_mul(den_, lhs_scale);
  *this = Rational(num, den);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = checked_sub(num_, rhs.num_);
    return *this;
  }
  return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    num_ = checked_mul(num_, rhs.num_);
    return *this;
  }
  // Cross-reduce first to keep intermediates small.
  Int g1 = gcd(num_, rhs.den_);
  Int g2 = gcd(rhs.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  Int num = checked_mul(num_ / g1, rhs.num_ / g2);
  Int den = checked_mul(den_ / g2, rhs.den_ / g1);
  *this = Rational(num, den);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Rational inverse;
  inverse.num_ = rhs.den_;
  inverse.den_ = rhs.num_;
  if (inverse.den_ < 0) {
    inverse.num_ = -inverse.num_;
    inverse.den_ = -inverse.den_;
  }
  return *this *= inverse;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  Int lhs;
  Int rhs;
  if (!__builtin_mul_overflow(a.num_, b.den_, &lhs) && !__builtin_mul_overflow(b.num_, a.den_, &rhs)) {
    return lhs <=> rhs;
  }
  int c = compare_slow(a.num_, a.den_, b.num_, b.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string int128_to_string(Int value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  UInt v = uabs(value);
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

namespace {

Int parse_int(std::string_view text, std::string_view whole, bool allow_sign) {
  if (text.empty()) throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(whole) + "'");
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    if (!allow_sign) throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(whole) + "'");
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(whole) + "'");
  Int value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(whole) + "'");
    }
    value = checked_add(checked_mul(value, 10), ch - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text, true), 1);
  Int num = parse_int(text.substr(0, slash), text, true);
  Int den = parse_int(text.substr(slash + 1), text, false);
  if (den == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace maxtoll
