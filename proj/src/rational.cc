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

#include "eqlab/rational.h"

#include <ostream>

#include "eqlab/errors.h"

namespace eqlab {

namespace {
mpz_class MpzFromLongLong(long long n) {
  static_assert(sizeof(long long) == sizeof(int64_t), "unexpected ABI");
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
  return z;
}
}  // namespace

Rational::Rational(long long n) : q_(MpzFromLongLong(n)) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(MpzFromLongLong(num)) / mpq_class(MpzFromLongLong(den));
  q_.canonicalize();
}

Rational Rational::FromString(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw InputError("unparseable rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw InputError("rational with zero denominator: '" + s + "'");
  }
  q.canonicalize();
  return Rational(q);
}

std::string Rational::ToString() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::Floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(),
             q_.get_den().get_mpz_t());
  return Rational(mpq_class(f));
}

Rational Rational::Ceil() const {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q_.get_num().get_mpz_t(),
             q_.get_den().get_mpz_t());
  return Rational(mpq_class(c));
}

long Rational::NumeratorAsLong() const {
  if (!IsInteger() || !q_.get_num().fits_slong_p()) {
    throw InternalError("rational does not fit an integer slot: " +
                        ToString());
  }
  return q_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.Sign() == 0) throw InputError("division of rational by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Sum(const std::vector<Rational>& values) {
  Rational total;
  for (const Rational& v : values) total += v;
  return total;
}

}  // namespace eqlab
