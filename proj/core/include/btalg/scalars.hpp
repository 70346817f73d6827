#ifndef BTALG_SCALARS_HPP
#define BTALG_SCALARS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "btalg/errors.hpp"

namespace btalg {

// Exact rational scalar, always kept in lowest terms with positive
// denominator (GMP canonicalizes on construction).
using Rational = boost::multiprecision::mpq_rational;

// Exact complex scalar with rational real and imaginary parts. Stands in
// for the complex field; every comparison is exact structural equality.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(long r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  GaussianRational operator-() const { return {-re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  GaussianRational inverse() const;
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }

  GaussianRational conj() const { return {re, -im}; }
};

inline GaussianRational gr_zero() { return GaussianRational(0); }
inline GaussianRational gr_one() { return GaussianRational(1); }

// Text form "num/den" or "num" (exact, never floats).
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace btalg

#endif  // BTALG_SCALARS_HPP
