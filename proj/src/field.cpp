#include "lospec/field.hpp"

#include <algorithm>
#include <sstream>

namespace lospec {

namespace {

// slot index <-> radicand
constexpr int kRadicandOfSlot[8] = {1, 2, 3, 6, 5, 10, 15, 30};

int slot_of_radicand(int d) {
  switch (d) {
    case 1: return 0;
    case 2: return 1;
    case 3: return 2;
    case 6: return 3;
    case 5: return 4;
    case 10: return 5;
    case 15: return 6;
    case 30: return 7;
    default: throw std::invalid_argument("radicand outside {1,2,3,5,6,10,15,30}");
  }
}

// sqrt(a)*sqrt(b) = g*sqrt(ab/g^2) with g = gcd(a,b); in subset encoding the
// product radicand is a XOR b and g is the product of the shared primes.
int shared_prime_product(int slot_a, int slot_b) {
  int common = slot_a & slot_b;
  int g = 1;
  if (common & 1) g *= 2;
  if (common & 2) g *= 3;
  if (common & 4) g *= 5;
  return g;
}

struct SqrtEnclosure {
  Rational lo, hi;
};

// Dyadic enclosure: floor(sqrt(d * 4^bits)) / 2^bits <= sqrt(d) < (floor+1) / 2^bits.
// Numerator and denominator stay linear in `bits`, so deep refinement is cheap.
SqrtEnclosure dyadic_sqrt(int d, int bits) {
  Integer scaled = Integer(d) << (2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer denom = Integer(1) << bits;
  SqrtEnclosure e;
  e.lo = Rational(root, denom);
  e.lo.canonicalize();
  e.hi = Rational(root + 1, denom);
  e.hi.canonicalize();
  return e;
}

// Evaluate sum_d c_d sqrt(d) (rational coefficients) as an interval with
// sqrt enclosures of the given dyadic precision.
SqrtEnclosure eval_interval(const std::array<Rational, 8>& c, int bits) {
  SqrtEnclosure acc{Rational(0), Rational(0)};
  for (int s = 0; s < 8; ++s) {
    if (c[s] == 0) continue;
    if (s == 0) {
      acc.lo += c[s];
      acc.hi += c[s];
      continue;
    }
    SqrtEnclosure e = dyadic_sqrt(kRadicandOfSlot[s], bits);
    if (c[s] > 0) {
      acc.lo += c[s] * e.lo;
      acc.hi += c[s] * e.hi;
    } else {
      acc.lo += c[s] * e.hi;
      acc.hi += c[s] * e.lo;
    }
  }
  return acc;
}

// Exact sign of sum_d c_d sqrt(d).  The sqrt(d) are linearly independent
// over Q, so a not-identically-zero combination is nonzero and refinement
// terminates; the cap is far beyond any separation the coefficient sizes can
// require.
Sign real_combination_sign(const std::array<Rational, 8>& c) {
  bool all_zero = true;
  for (const auto& x : c)
    if (x != 0) all_zero = false;
  if (all_zero) return Sign::zero;
  for (int bits = 32; bits <= (1 << 22); bits *= 4) {
    SqrtEnclosure iv = eval_interval(c, bits);
    if (iv.lo > 0) return Sign::positive;
    if (iv.hi < 0) return Sign::negative;
  }
  throw std::runtime_error("sqrt enclosure refinement failed to separate from zero");
}

// Interval for one real combination refined to absolute width below 2^-abs_bits.
SqrtEnclosure refine_to(const std::array<Rational, 8>& c, int abs_bits) {
  Rational tol(1);
  tol /= pow_rational(Rational(2), static_cast<unsigned>(abs_bits));
  int bits = std::max(32, abs_bits + 8);
  SqrtEnclosure iv = eval_interval(c, bits);
  while (iv.hi - iv.lo > tol && bits <= (1 << 22)) {
    bits *= 2;
    iv = eval_interval(c, bits);
  }
  return iv;
}

}  // namespace

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("division by zero (Gaussian rational)");
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

FieldElem FieldElem::sqrt_radicand(int d) {
  FieldElem e;
  e.set_coeff(d, GaussianRational(Rational(1)));
  return e;
}

FieldElem FieldElem::sqrt_rational(const Rational& r) {
  if (r < 0) throw std::domain_error("sqrt_rational of a negative rational");
  if (r == 0) return FieldElem();
  // r = (p/q); sqrt(r) = sqrt(p*q)/q.  Split p*q = s^2 * d with d square-free.
  Integer pq = r.get_num() * r.get_den();
  Integer s = 1;
  int d = 1;
  for (int prime : {2, 3, 5}) {
    int count = 0;
    while (mpz_divisible_ui_p(pq.get_mpz_t(), prime)) {
      mpz_divexact_ui(pq.get_mpz_t(), pq.get_mpz_t(), prime);
      ++count;
    }
    for (int i = 0; i < count / 2; ++i) s *= prime;
    if (count % 2) d *= prime;
  }
  if (mpz_perfect_square_p(pq.get_mpz_t()) == 0)
    throw std::domain_error("square root not in Q(sqrt2, sqrt3, sqrt5): " + rational_text(r));
  Integer rest;
  mpz_sqrt(rest.get_mpz_t(), pq.get_mpz_t());
  s *= rest;
  Rational coeff(s, r.get_den());
  coeff.canonicalize();
  FieldElem e;
  e.set_coeff(d, GaussianRational(coeff));
  return e;
}

bool FieldElem::is_real() const {
  for (int s = 0; s < kSlots; ++s)
    if ((mask_ >> s) & 1u)
      if (coeff_[s].im != 0) return false;
  return true;
}

Rational FieldElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("field element is not rational: " + text());
  return coeff_[0].re;
}

const GaussianRational& FieldElem::coeff(int radicand) const {
  return coeff_[slot_of_radicand(radicand)];
}

void FieldElem::set_coeff(int radicand, const GaussianRational& c) {
  int s = slot_of_radicand(radicand);
  coeff_[s] = c;
  if (c.is_zero())
    mask_ &= static_cast<std::uint8_t>(~(1u << s));
  else
    mask_ |= static_cast<std::uint8_t>(1u << s);
}

int FieldElem::slot_radicand(int slot) { return kRadicandOfSlot[slot]; }

FieldElem FieldElem::conj() const {
  FieldElem r = *this;
  for (int s = 0; s < kSlots; ++s)
    if ((r.mask_ >> s) & 1u) r.coeff_[s] = r.coeff_[s].conj();
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (int s = 0; s < kSlots; ++s)
    if ((r.mask_ >> s) & 1u) r.coeff_[s] = -r.coeff_[s];
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  for (int s = 0; s < kSlots; ++s) {
    if (!((o.mask_ >> s) & 1u)) continue;
    coeff_[s] += o.coeff_[s];
    if (coeff_[s].is_zero())
      mask_ &= static_cast<std::uint8_t>(~(1u << s));
    else
      mask_ |= static_cast<std::uint8_t>(1u << s);
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  for (int s = 0; s < kSlots; ++s) {
    if (!((o.mask_ >> s) & 1u)) continue;
    coeff_[s] -= o.coeff_[s];
    if (coeff_[s].is_zero())
      mask_ &= static_cast<std::uint8_t>(~(1u << s));
    else
      mask_ |= static_cast<std::uint8_t>(1u << s);
  }
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldElem r;
  if (a.mask_ == 0 || b.mask_ == 0) return r;
  for (int i = 0; i < FieldElem::kSlots; ++i) {
    if (!((a.mask_ >> i) & 1u)) continue;
    for (int j = 0; j < FieldElem::kSlots; ++j) {
      if (!((b.mask_ >> j) & 1u)) continue;
      int k = i ^ j;
      int g = shared_prime_product(i, j);
      GaussianRational term = a.coeff_[i] * b.coeff_[j];
      if (g != 1) {
        term.re *= g;
        term.im *= g;
      }
      r.coeff_[k] += term;
    }
  }
  for (int s = 0; s < FieldElem::kSlots; ++s)
    if (!r.coeff_[s].is_zero()) r.mask_ |= static_cast<std::uint8_t>(1u << s);
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.mask_ != b.mask_) return false;
  for (int s = 0; s < FieldElem::kSlots; ++s)
    if ((a.mask_ >> s) & 1u)
      if (!(a.coeff_[s] == b.coeff_[s])) return false;
  return true;
}

FieldElem operator*(const Rational& r, const FieldElem& a) {
  return FieldElem(r) * a;
}

FieldElem FieldElem::inverse() const {
  if (mask_ == 0) throw std::domain_error("division by zero (field element)");
  // Solve (multiplication-by-x matrix) * v = e_1 over Q(i): column j of the
  // matrix is x * sqrt(d_j) in slot coordinates.
  std::array<std::array<GaussianRational, 9>, 8> m{};  // augmented
  for (int j = 0; j < kSlots; ++j) {
    FieldElem col = *this * sqrt_radicand(kRadicandOfSlot[j]);
    for (int i = 0; i < kSlots; ++i) m[i][j] = col.coeff_[i];
  }
  m[0][8] = GaussianRational(Rational(1));

  int row = 0;
  std::array<int, 8> pivot_col{};
  for (int col = 0; col < kSlots && row < kSlots; ++col) {
    int p = -1;
    for (int r2 = row; r2 < kSlots; ++r2)
      if (!m[r2][col].is_zero()) {
        p = r2;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    GaussianRational inv = m[row][col].inverse();
    for (int c = col; c <= kSlots; ++c) m[row][c] = m[row][c] * inv;
    for (int r2 = 0; r2 < kSlots; ++r2) {
      if (r2 == row || m[r2][col].is_zero()) continue;
      GaussianRational f = m[r2][col];
      for (int c = col; c <= kSlots; ++c) m[r2][c] -= f * m[row][c];
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row != kSlots) throw std::domain_error("multiplication matrix singular (zero element?)");
  FieldElem result;
  for (int r2 = 0; r2 < kSlots; ++r2)
    result.set_coeff(kRadicandOfSlot[pivot_col[r2]], m[r2][8]);
  return result;
}

Sign FieldElem::sign() const {
  if (!is_real()) throw std::domain_error("sign of a non-real field element: " + text());
  std::array<Rational, 8> c{};
  for (int s = 0; s < kSlots; ++s)
    if ((mask_ >> s) & 1u) c[s] = coeff_[s].re;
  return real_combination_sign(c);
}

namespace {

// interval with relative width below 2^(1-bits); exact [0,0] for zero input
SqrtEnclosure part_enclosure(const std::array<Rational, 8>& c, int bits) {
  bool zero = true;
  for (const auto& x : c)
    if (x != 0) zero = false;
  if (zero) return {Rational(0), Rational(0)};
  // absolute refinement first, then tighten relative to the magnitude
  SqrtEnclosure iv = refine_to(c, bits + 8);
  Rational mag = std::max(abs(iv.lo), abs(iv.hi));
  int extra = 0;
  while (mag > 0 &&
         (iv.hi - iv.lo) * pow_rational(Rational(2), static_cast<unsigned>(bits + 2)) > mag &&
         extra < 16) {
    iv = refine_to(c, bits + 16 + 48 * (++extra));
    mag = std::max(abs(iv.lo), abs(iv.hi));
  }
  return iv;
}

}  // namespace

FieldElem::ComplexEnclosure FieldElem::enclosure(int precision_bits) const {
  int bits = std::max(precision_bits, 4);
  std::array<Rational, 8> re{}, im{};
  for (int s = 0; s < kSlots; ++s) {
    if (!((mask_ >> s) & 1u)) continue;
    re[s] = coeff_[s].re;
    im[s] = coeff_[s].im;
  }
  SqrtEnclosure r = part_enclosure(re, bits);
  SqrtEnclosure i = part_enclosure(im, bits);
  return {r.lo, r.hi, i.lo, i.hi};
}

std::complex<double> FieldElem::to_complex(int precision_bits) const {
  ComplexEnclosure e = enclosure(std::clamp(precision_bits, 4, 52));
  Rational re_mid = (e.re_lo + e.re_hi) / 2;
  Rational im_mid = (e.im_lo + e.im_hi) / 2;
  return {re_mid.get_d(), im_mid.get_d()};
}

std::string FieldElem::text() const {
  if (mask_ == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int s = 0; s < kSlots; ++s) {
    // ascending radicand order: 1,2,3,5,6,10,15,30
    int order[8] = {0, 1, 2, 4, 3, 5, 6, 7};
    int slot = order[s];
    if (!((mask_ >> slot) & 1u)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << rational_text(coeff_[slot].re) << " + " << rational_text(coeff_[slot].im)
       << "*i)*sqrt(" << kRadicandOfSlot[slot] << ")";
  }
  return os.str();
}

FieldElem FieldElem::parse(const std::string& s) {
  FieldElem result;
  if (s == "0") return result;
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad field element '" + s + "': " + why);
  };
  while (pos < s.size()) {
    size_t open = s.find('(', pos);
    if (open == std::string::npos) fail("expected '('");
    size_t plus = s.find(" + ", open);
    if (plus == std::string::npos) fail("expected ' + ' inside summand");
    std::string re_txt = s.substr(open + 1, plus - open - 1);
    size_t star_i = s.find("*i)*sqrt(", plus + 3);
    if (star_i == std::string::npos) fail("expected '*i)*sqrt('");
    std::string im_txt = s.substr(plus + 3, star_i - plus - 3);
    size_t close = s.find(')', star_i + 9);
    if (close == std::string::npos) fail("expected closing ')'");
    std::string rad_txt = s.substr(star_i + 9, close - star_i - 9);
    int d = std::stoi(rad_txt);
    GaussianRational g(parse_rational(re_txt), parse_rational(im_txt));
    FieldElem term;
    term.set_coeff(d, g);
    result += term;
    pos = close + 1;
    if (pos < s.size()) {
      if (s.compare(pos, 3, " + ") != 0) fail("expected ' + ' between summands");
      pos += 3;
    }
  }
  return result;
}

Integer FieldElem::denominator_lcm() const {
  Integer l = 1;
  for (int s = 0; s < kSlots; ++s) {
    if (!((mask_ >> s) & 1u)) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coeff_[s].re.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coeff_[s].im.get_den().get_mpz_t());
  }
  return l;
}

Sign compare_abs(const FieldElem& a, const FieldElem& b) {
  return (a * a - b * b).sign();
}

}  // namespace lospec
