#include "hypcox/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace hypcox {

Rational make_rational(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad number: " + text);
    r.canonicalize();
    return r;
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (text.find('/') != std::string::npos) throw std::invalid_argument("bad number: " + text);
  BigInt num;
  if (digits == "-" || digits == "+" || num.set_str(digits, 10) != 0)
    throw std::invalid_argument("bad number: " + text);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

int sign(const Rational& q) { return sgn(q); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------- QSqrt5

int QSqrt5::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 against 5 b^2.
  Rational d = a_ * a_ - 5 * b_ * b_;
  return sa * sgn(d);
}

double QSqrt5::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(5.0); }

std::string QSqrt5::str() const {
  if (b_ == 0) return a_.get_str();
  std::string s = a_ == 0 ? "" : a_.get_str();
  if (b_ > 0 && !s.empty()) s += "+";
  if (b_ == 1) {
    s += "sqrt(5)";
  } else if (b_ == -1) {
    s += "-sqrt(5)";
  } else {
    s += b_.get_str() + "*sqrt(5)";
  }
  return s;
}

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  Rational a = a_ * o.a_ + 5 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) {
  Rational norm = o.a_ * o.a_ - 5 * o.b_ * o.b_;
  if (norm == 0) throw std::domain_error("division by zero in Q(sqrt5)");
  *this *= QSqrt5(o.a_ / norm, -o.b_ / norm);
  return *this;
}

// ---------------------------------------------------------------- QSqrt23

namespace {

// Sign of r + s*sqrt2.
int sign_q2(const Rational& r, const Rational& s) {
  int sr = sgn(r);
  int ss = sgn(s);
  if (ss == 0) return sr;
  if (sr == 0 || sr == ss) return ss;
  return sr * sgn(r * r - 2 * s * s);
}

}  // namespace

QSqrt23::QSqrt23(Rational a, Rational b, Rational c, Rational d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto& x : c_) x.canonicalize();
}

bool QSqrt23::is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

int QSqrt23::sign() const {
  // Write the number as P + Q*sqrt3 with P = a + b*sqrt2, Q = c + d*sqrt2.
  int sp = sign_q2(c_[0], c_[1]);
  int sq = sign_q2(c_[2], c_[3]);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // P^2 - 3 Q^2 as an element r + s*sqrt2.
  Rational r = c_[0] * c_[0] + 2 * c_[1] * c_[1] - 3 * (c_[2] * c_[2] + 2 * c_[3] * c_[3]);
  Rational s = 2 * c_[0] * c_[1] - 6 * c_[2] * c_[3];
  return sp * sign_q2(r, s);
}

double QSqrt23::to_double() const {
  return c_[0].get_d() + c_[1].get_d() * std::sqrt(2.0) + c_[2].get_d() * std::sqrt(3.0) +
         c_[3].get_d() * std::sqrt(6.0);
}

std::string QSqrt23::str() const {
  static const char* kRadical[4] = {"", "sqrt(2)", "sqrt(3)", "sqrt(6)"};
  std::string s;
  for (int k = 0; k < 4; ++k) {
    const Rational& q = c_[k];
    if (q == 0) continue;
    std::string term;
    if (k == 0) {
      term = q.get_str();
    } else if (q == 1) {
      term = kRadical[k];
    } else if (q == -1) {
      term = std::string("-") + kRadical[k];
    } else {
      term = q.get_str() + "*" + kRadical[k];
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s.empty() ? "0" : s;
}

QSqrt23& QSqrt23::operator+=(const QSqrt23& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

QSqrt23& QSqrt23::operator-=(const QSqrt23& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

QSqrt23& QSqrt23::operator*=(const QSqrt23& o) {
  const Rational* x = c_;
  const Rational* y = o.c_;
  Rational r0 = x[0] * y[0] + 2 * x[1] * y[1] + 3 * x[2] * y[2] + 6 * x[3] * y[3];
  Rational r1 = x[0] * y[1] + x[1] * y[0] + 3 * (x[2] * y[3] + x[3] * y[2]);
  Rational r2 = x[0] * y[2] + x[2] * y[0] + 2 * (x[1] * y[3] + x[3] * y[1]);
  Rational r3 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  c_[0] = r0;
  c_[1] = r1;
  c_[2] = r2;
  c_[3] = r3;
  return *this;
}

QSqrt23 QSqrt23::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt2,sqrt3)");
  QSqrt23 n1 = *this * conj3();  // lies in Q(sqrt2)
  QSqrt23 n2 = n1 * n1.conj2();  // rational
  Rational norm = n2.c_[0];
  QSqrt23 num = conj3() * n1.conj2();
  for (auto& x : num.c_) x /= norm;
  return num;
}

QSqrt23& QSqrt23::operator/=(const QSqrt23& o) { return *this *= o.inverse(); }

bool operator==(const QSqrt23& x, const QSqrt23& y) {
  for (int k = 0; k < 4; ++k)
    if (x.c_[k] != y.c_[k]) return false;
  return true;
}

}  // namespace hypcox
