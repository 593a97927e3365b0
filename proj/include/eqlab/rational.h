// Copyright 2026 The Eqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQLAB_RATIONAL_H_
#define EQLAB_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace eqlab {

// Exact arbitrary-precision fraction.  Every payoff, probability, price, and
// solver value in the library is a Rational; arithmetic is closed and exact.
// Stored in lowest terms with a positive denominator (GMP canonical form).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}                   // NOLINT(runtime/explicit)
  Rational(long n) : q_(static_cast<long>(n)) {}  // NOLINT(runtime/explicit)
  Rational(long long n);                       // NOLINT(runtime/explicit)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Parses "p/q" or "p" (optional sign, arbitrary precision).
  static Rational FromString(const std::string& s);

  // Canonical serialization "p/q" with q >= 1 and gcd(p, q) = 1; round-trips
  // losslessly through FromString.
  std::string ToString() const;

  // Decimal approximation, for logs only; never serialized into reports.
  double ToDouble() const { return q_.get_d(); }

  const mpq_class& value() const { return q_; }

  int Sign() const { return sgn(q_); }
  Rational Abs() const { return Rational(abs(q_)); }

  // Largest integer <= this (as a Rational).
  Rational Floor() const;
  Rational Ceil() const;

  bool IsInteger() const { return q_.get_den() == 1; }
  // Requires IsInteger() and fit; used for grid indices and counts.
  long NumeratorAsLong() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.q_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.q_ != b.q_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.q_ <= b.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.q_ > b.q_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.q_ >= b.q_;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

// Sum of a vector, exact.
Rational Sum(const std::vector<Rational>& values);

}  // namespace eqlab

#endif  // EQLAB_RATIONAL_H_
