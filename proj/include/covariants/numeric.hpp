#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "covariants/errors.hpp"

namespace covariants {

// All lattice data is exact. Int is 64-bit with overflow detection on
// every arithmetic operation that can grow; Rat is an exact fraction on
// top of it. No floating point is used anywhere in a decision.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int abs_checked(Int a) { return a < 0 ? checked_neg(a) : a; }

inline int sign_of(Int a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// gcd of absolute values; gcd(0, 0) = 0.
inline Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

// Floor division (rounds toward negative infinity); b != 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Representative of a mod m in [0, m); m > 0.
inline Int mod_pos(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Exact rational number. Always normalized: den > 0, gcd(num, den) = 1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(Int n, Int d) : num_(n), den_(d) { normalize(); }

  Int num() const { return num_; }
  Int den() const { return den_; }

  int sign() const { return sign_of(num_); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const { return Rat(checked_neg(num_), den_, already_normalized{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
               checked_mul(a.den_, b.den_));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    return Rat(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // Largest integer <= value.
  Int floor() const { return floor_div(num_, den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  struct already_normalized {};
  Rat(Int n, Int d, already_normalized) : num_(n), den_(d) {}

  void normalize() {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    Int g = gcd_int(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

}  // namespace covariants
