#include "d2kit/rational.hpp"

namespace d2kit {

namespace field {
namespace {
mpz_class g_prime = 0;  // 0 means Q
}

void use_rationals() { g_prime = 0; }

void use_prime_field(unsigned long p) {
  mpz_class m(p);
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw ArithmeticError("not a prime modulus: " + std::to_string(p));
  g_prime = m;
}

bool prime_mode() { return g_prime != 0; }

const mpz_class& prime() { return g_prime; }

}  // namespace field

void Rational::normalize() {
  if (!field::prime_mode()) return;
  const mpz_class& p = field::prime();
  mpz_class num = v_.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v_.get_den() % p;
  if (den == 0) throw ArithmeticError("denominator vanishes in F_p");
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw ArithmeticError("non-invertible denominator in F_p");
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

Rational::Rational(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
  normalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      Rational r;
      r.v_ = mpq_class(n);
      r.normalize();
      return r;
    }
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    if (d == 0) throw ArithmeticError("zero denominator in '" + s + "'");
    Rational r;
    r.v_ = mpq_class(n) / mpq_class(d);
    r.normalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ArithmeticError("malformed rational '" + s + "'");
  }
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  r.normalize();
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  r.normalize();
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  v_ /= o.v_;
  normalize();
  return *this;
}

}  // namespace d2kit
