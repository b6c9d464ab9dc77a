#include "lospec/rational.hpp"

namespace lospec {

std::string rational_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

bool rational_square_root(const Rational& r, Rational& root) {
  if (r < 0) return false;
  if (r == 0) {
    root = 0;
    return true;
  }
  Integer num_root, den_root;
  if (mpz_perfect_square_p(r.get_num().get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(r.get_den().get_mpz_t()) == 0) return false;
  mpz_sqrt(num_root.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(den_root.get_mpz_t(), r.get_den().get_mpz_t());
  root = Rational(num_root, den_root);
  root.canonicalize();
  return true;
}

Rational pow_rational(const Rational& base, unsigned e) {
  Rational acc = 1;
  Rational b = base;
  unsigned k = e;
  while (k > 0) {
    if (k & 1u) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace lospec
