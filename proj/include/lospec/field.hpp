#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lospec/rational.hpp"

namespace lospec {

// Element of Q(i): re + im*i.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  // re^2 + im^2
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Element of the multi-quadratic field Q(i; sqrt2, sqrt3, sqrt5), stored as
// sum_d c_d * sqrt(d) over the eight square-free radicands
// d in {1,2,3,5,6,10,15,30}.  Slot index encodes the radicand as a subset of
// the primes {2,3,5}: bit0 <-> 2, bit1 <-> 3, bit2 <-> 5.
class FieldElem {
 public:
  static constexpr int kSlots = 8;

  FieldElem() = default;
  FieldElem(const Rational& r) { set_coeff(1, GaussianRational(r)); }
  FieldElem(long n) { set_coeff(1, GaussianRational(Rational(n))); }
  FieldElem(const GaussianRational& g) { set_coeff(1, g); }

  static FieldElem zero() { return FieldElem(); }
  static FieldElem one() { return FieldElem(Rational(1)); }
  static FieldElem i() { return FieldElem(GaussianRational(Rational(0), Rational(1))); }

  // sqrt(d) for d a product of distinct primes in {2,3,5} (d=1 gives 1).
  static FieldElem sqrt_radicand(int d);
  // Exact square root of a positive rational whose square-free part divides
  // 30, e.g. sqrt(3/8) = (1/4)sqrt6.  Throws if the root does not lie in the
  // field.
  static FieldElem sqrt_rational(const Rational& r);

  bool is_zero() const { return mask_ == 0; }
  bool is_rational() const { return (mask_ & ~1u) == 0 && coeff_[0].is_real(); }
  bool is_real() const;
  // Rational value of a purely rational element; throws otherwise.
  Rational rational_value() const;

  const GaussianRational& coeff(int radicand) const;
  void set_coeff(int radicand, const GaussianRational& c);
  std::uint8_t slot_mask() const { return mask_; }
  static int slot_radicand(int slot);

  FieldElem conj() const;  // i -> -i, sqrt(d) fixed
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  // Exact inverse via the 8x8 multiplication-matrix solve over Q(i).
  // Throws std::domain_error on zero.
  FieldElem inverse() const;
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

  // Exact sign of a real element; decided from coefficients when zero,
  // otherwise by interval refinement of the sqrt(d) enclosures.
  // Throws std::domain_error on non-real input.
  Sign sign() const;

  // Rational interval enclosures of the real and imaginary parts with
  // relative width below 2^(1-precision_bits); any precision.
  struct ComplexEnclosure {
    Rational re_lo, re_hi, im_lo, im_hi;
  };
  ComplexEnclosure enclosure(int precision_bits) const;

  // Complex approximation; relative error below 2^(1-precision_bits) per
  // component for precision_bits <= 52 (double mantissa limit; use
  // enclosure() beyond that).
  std::complex<double> to_complex(int precision_bits = 52) const;

  // Canonical text: "(p/q + r/s*i)*sqrt(d)" summands joined by " + ",
  // radicands ascending; zero prints as "0".
  std::string text() const;
  static FieldElem parse(const std::string& s);

  // lcm of all coefficient denominators (>= 1).
  Integer denominator_lcm() const;

 private:
  std::array<GaussianRational, kSlots> coeff_{};
  std::uint8_t mask_ = 0;
};

FieldElem operator*(const Rational& r, const FieldElem& a);

inline Sign sign_product(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

// |a| vs |b| for real field elements: sign of a^2 - b^2.
Sign compare_abs(const FieldElem& a, const FieldElem& b);

}  // namespace lospec
