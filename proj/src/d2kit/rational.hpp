#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace d2kit {

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ground field selection.  The default field is Q (exact rationals).
// Calling use_prime_field(p) switches every subsequently constructed
// scalar to the canonical-residue representation of F_p; values are
// stored as integers in [0, p).  Select the field once, at startup,
// before building any descriptors.
namespace field {
void use_rationals();
void use_prime_field(unsigned long p);
bool prime_mode();
const mpz_class& prime();
}  // namespace field

// Exact scalar of the ground field.  Over Q this is an arbitrary-precision
// fraction kept in lowest terms with positive denominator; in prime-field
// mode it is the canonical residue with denominator 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) { normalize(); }
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
    normalize();
  }

  static Rational parse(const std::string& s);
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
  void normalize();
};

}  // namespace d2kit
