#pragma once

// Input layer: Gaussian-rational literals, quadratic-form strings, and the
// symmetric Gram matrices they denote.
//
// Grammar (whitespace-insensitive):
//   form        := ['+'|'-'] term (('+'|'-') term)*
//   term        := [coefficient '*'] monomial
//   monomial    := var '^2' | var '*' var
//   var         := 'z' digits
//   coefficient := Gaussian rational literal, e.g. "3", "-1/2", "i", "3i",
//                  "2-3i", "(1+i)/2".  A real part followed by '+' or '-'
//                  and an imaginary part binds as one literal (maximal
//                  munch), so "2-3i*z0^2" means (2-3i)*z0^2; write
//                  "2*z0^2 - 3i*z0^2" or parenthesize to split it.
//
// Error vocabulary (all std::invalid_argument):
//   "not a quadratic form"   structural violations, degree != 2 terms
//   "variable out of range"  index above the ambient dimension
//   "bad coefficient"        malformed literal, zero denominator
//   "zero form"              empty input, or all terms cancel

#include "qbetti/symmetric.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace qbetti {

namespace detail {

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct Cursor {
  std::string s;  // whitespace already removed
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
};

inline std::string strip_spaces(const std::string& text) {
  std::string out;
  for (char c : text)
    if (std::isspace(static_cast<unsigned char>(c)) == 0) out += c;
  return out;
}

// digits [ '/' digits ], nonnegative
inline Rational parse_urational(Cursor& c) {
  auto read_integer = [&]() -> Integer {
    if (!is_digit(c.peek())) throw std::invalid_argument("bad coefficient");
    std::string digits;
    while (is_digit(c.peek())) digits += c.s[c.pos++];
    return Integer(digits);
  };
  Integer num = read_integer();
  if (!c.eat('/')) return Rational(num);
  Integer den = read_integer();
  if (den == 0) throw std::invalid_argument("bad coefficient");
  return Rational(num, den);
}

// ['+'|'-'] ( urational ['i'] | 'i' )
inline GaussianRational parse_signed_part(Cursor& c, bool* is_imaginary) {
  Rational sign = 1;
  if (c.eat('-'))
    sign = -1;
  else
    c.eat('+');
  if (c.eat('i')) {
    *is_imaginary = true;
    return {Rational(0), sign};
  }
  Rational r = parse_urational(c);
  if (c.eat('i')) {
    *is_imaginary = true;
    return {Rational(0), sign * r};
  }
  *is_imaginary = false;
  return {sign * r, Rational(0)};
}

// real part optionally followed by '+'/'-' and an imaginary part
inline GaussianRational parse_complex(Cursor& c) {
  bool imag = false;
  GaussianRational z = parse_signed_part(c, &imag);
  if (!imag && (c.peek() == '+' || c.peek() == '-')) {
    Cursor saved = c;
    bool second_imag = false;
    GaussianRational w = parse_signed_part(c, &second_imag);
    if (second_imag)
      z += w;
    else
      c = saved;  // "2-3" is the literal 2 followed by subtraction
  }
  return z;
}

// complex | '(' complex ')' [ '/' urational ]
inline GaussianRational parse_literal(Cursor& c) {
  if (!c.eat('(')) return parse_complex(c);
  GaussianRational z = parse_complex(c);
  if (!c.eat(')')) throw std::invalid_argument("bad coefficient");
  if (c.eat('/')) {
    Rational den = parse_urational(c);
    if (den == 0) throw std::invalid_argument("bad coefficient");
    z /= GaussianRational(den);
  }
  return z;
}

inline int parse_var(Cursor& c, int n) {
  if (!c.eat('z')) throw std::invalid_argument("not a quadratic form");
  if (!is_digit(c.peek())) throw std::invalid_argument("not a quadratic form");
  std::string digits;
  while (is_digit(c.peek())) digits += c.s[c.pos++];
  if (digits.size() > 6) throw std::invalid_argument("variable out of range");
  int idx = std::stoi(digits);
  if (idx > n) throw std::invalid_argument("variable out of range");
  return idx;
}

}  // namespace detail

// Whole-string Gaussian rational literal.
inline GaussianRational parse_gaussian(const std::string& text) {
  detail::Cursor c{detail::strip_spaces(text)};
  if (c.s.empty()) throw std::invalid_argument("bad coefficient");
  GaussianRational z = detail::parse_literal(c);
  if (!c.done()) throw std::invalid_argument("bad coefficient");
  return z;
}

// Quadratic form in z0..zn -> symmetric Gram matrix M with q(z) = z^T M z;
// the coefficient of z_i z_j (i != j) is split evenly between M(i,j) and
// M(j,i).
inline ComplexSymMatrix parse_quadric(const std::string& text, int n) {
  if (n < 0) throw std::invalid_argument("negative ambient dimension");
  detail::Cursor c{detail::strip_spaces(text)};
  if (c.s.empty()) throw std::invalid_argument("zero form");

  ComplexSymMatrix m(n + 1);
  bool negate = c.eat('-');
  if (!negate) c.eat('+');
  for (;;) {
    GaussianRational coeff(1);
    if (c.peek() != 'z') {
      coeff = detail::parse_literal(c);
      if (!c.eat('*')) throw std::invalid_argument("not a quadratic form");
    }
    int i = detail::parse_var(c, n);
    int j;
    if (c.eat('^')) {
      if (!c.eat('2')) throw std::invalid_argument("not a quadratic form");
      j = i;
    } else if (c.eat('*')) {
      j = detail::parse_var(c, n);
    } else {
      throw std::invalid_argument("not a quadratic form");
    }
    if (negate) coeff = -coeff;
    if (i == j)
      m.set(i, i, m.at(i, i) + coeff);
    else
      m.set(i, j, m.at(i, j) + coeff / GaussianRational(2));

    if (c.done()) break;
    if (c.eat('+'))
      negate = false;
    else if (c.eat('-'))
      negate = true;
    else
      throw std::invalid_argument("not a quadratic form");
  }

  bool all_zero = true;
  for (int i = 0; i <= n && all_zero; ++i)
    for (int j = i; j <= n; ++j)
      if (!m.at(i, j).is_zero()) {
        all_zero = false;
        break;
      }
  if (all_zero) throw std::invalid_argument("zero form");
  return m;
}

// Inverse of parse_quadric on nonzero matrices: a canonical polynomial
// string whose Gram matrix is the input.  The zero matrix prints as "0".
inline std::string to_polynomial_string(const ComplexSymMatrix& m) {
  std::string out;
  auto append_term = [&](const GaussianRational& coeff, const std::string& mono) {
    if (coeff.is_zero()) return;
    std::string lit = to_string(coeff);
    bool negative_lead = lit[0] == '-';
    bool mixed = coeff.re() != 0 && coeff.im() != 0;
    if (out.empty()) {
      if (negative_lead && !mixed) {
        out += "-";
        lit = lit.substr(1);
      }
    } else {
      if (negative_lead && !mixed) {
        out += " - ";
        lit = lit.substr(1);
      } else {
        out += " + ";
      }
    }
    if (mixed)
      out += "(" + lit + ")*" + mono;
    else if (lit == "1")
      out += mono;
    else if (lit == "i")
      out += "i*" + mono;
    else
      out += lit + "*" + mono;
  };
  const int n = m.size() - 1;
  for (int i = 0; i <= n; ++i) {
    std::string zi = "z" + std::to_string(i);
    append_term(m.at(i, i), zi + "^2");
    for (int j = i + 1; j <= n; ++j)
      append_term(m.at(i, j) * GaussianRational(2), zi + "*z" + std::to_string(j));
  }
  return out.empty() ? "0" : out;
}

}  // namespace qbetti
