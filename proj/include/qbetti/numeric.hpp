#pragma once

// Exact scalar substrate: arbitrary-precision rationals and Gaussian
// rationals Q(i).  Every algorithm in this library is exact; no floating
// point appears anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qbetti {

using Integer = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; both invariants are maintained
// by the backing type on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// Element of Q(i).  Value type; all arithmetic exact.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}                        // NOLINT(google-explicit-constructor)
  GaussianRational(const Rational& re) : re_(re) {}          // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  // |z|^2 = z * conj(z), a nonnegative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    Rational n = o.norm();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
  Rational re_{0};
  Rational im_{0};
};

// Canonical print: "0", "3", "-1/2", "i", "-i", "3i", "2/5i", "2-3i", "1/2+i".
inline std::string to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  if (z.im() == 0) return to_string(z.re());
  std::string im;
  if (z.im() == 1) {
    im = "i";
  } else if (z.im() == -1) {
    im = "-i";
  } else {
    im = to_string(z.im()) + "i";
  }
  if (z.re() == 0) return im;
  std::string s = to_string(z.re());
  if (im[0] != '-') s += "+";
  return s + im;
}

}  // namespace qbetti
