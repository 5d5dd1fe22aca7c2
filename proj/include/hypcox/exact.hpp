// Exact arithmetic: big rationals and the two quadratic number fields the
// library needs, Q(sqrt5) for the H-type root systems and Q(sqrt2, sqrt3) for
// Gram matrices of crystallographic symbols.
#ifndef HYPCOX_EXACT_HPP
#define HYPCOX_EXACT_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace hypcox {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational p/q.
Rational make_rational(long p, long q = 1);

/// Parses "p", "p/q" or a decimal such as "-1.25". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

int sign(const Rational& q);

BigInt lcm(const BigInt& a, const BigInt& b);

/// a + b*sqrt(5) with rational a, b.
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt5(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact sign, -1, 0 or 1.
  int sign() const;
  double to_double() const;
  std::string str() const;

  QSqrt5 operator-() const { return {-a_, -b_}; }
  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }
  friend bool operator==(const QSqrt5& x, const QSqrt5& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QSqrt5& x, const QSqrt5& y) { return !(x == y); }
  /// Order by value.
  friend bool operator<(const QSqrt5& x, const QSqrt5& y) { return (x - y).sign() < 0; }

 private:
  Rational a_{0};
  Rational b_{0};
};

/// a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coefficients.
class QSqrt23 {
 public:
  QSqrt23() = default;
  QSqrt23(long a) : c_{Rational(a), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  QSqrt23(Rational a, Rational b = 0, Rational c = 0, Rational d = 0);

  const Rational& coeff(int k) const { return c_[k]; }
  bool is_zero() const;
  int sign() const;
  double to_double() const;
  /// E.g. "-1/2", "-1/2*sqrt(2)", "1+sqrt(3)".
  std::string str() const;

  static QSqrt23 sqrt2() { return {0, 1, 0, 0}; }
  static QSqrt23 sqrt3() { return {0, 0, 1, 0}; }

  QSqrt23 operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  QSqrt23& operator+=(const QSqrt23& o);
  QSqrt23& operator-=(const QSqrt23& o);
  QSqrt23& operator*=(const QSqrt23& o);
  QSqrt23& operator/=(const QSqrt23& o);

  friend QSqrt23 operator+(QSqrt23 x, const QSqrt23& y) { return x += y; }
  friend QSqrt23 operator-(QSqrt23 x, const QSqrt23& y) { return x -= y; }
  friend QSqrt23 operator*(QSqrt23 x, const QSqrt23& y) { return x *= y; }
  friend QSqrt23 operator/(QSqrt23 x, const QSqrt23& y) { return x /= y; }
  friend bool operator==(const QSqrt23& x, const QSqrt23& y);
  friend bool operator!=(const QSqrt23& x, const QSqrt23& y) { return !(x == y); }

  QSqrt23 inverse() const;

 private:
  // Conjugates flipping the sign of sqrt3 (and sqrt6), or of sqrt2 (and sqrt6).
  QSqrt23 conj3() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }
  QSqrt23 conj2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }

  Rational c_[4] = {0, 0, 0, 0};
};

}  // namespace hypcox

namespace Eigen {

template <>
struct NumTraits<hypcox::QSqrt23> : GenericNumTraits<hypcox::QSqrt23> {
  using Real = hypcox::QSqrt23;
  using NonInteger = hypcox::QSqrt23;
  using Nested = hypcox::QSqrt23;
  using Literal = hypcox::QSqrt23;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen

#endif  // HYPCOX_EXACT_HPP
