#include "lospec/harmonic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace lospec::harmonic {

using poly::Monomial;
using poly::Poly;
using poly::Ring;

std::size_t BasisFamily::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.vectors.size();
  return n;
}

std::vector<Poly> BasisFamily::flatten() const {
  std::vector<Poly> out;
  out.reserve(size());
  for (const auto& b : blocks)
    for (const auto& v : b.vectors) out.push_back(v);
  return out;
}

std::vector<int> BasisFamily::weight_labels() const {
  std::vector<int> out;
  out.reserve(size());
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.vectors.size(); ++i) out.push_back(b.weight);
  return out;
}

std::string BasisFamily::content_text() const {
  std::ostringstream os;
  os << "k=" << k << ";source=" << (source == BasisSource::paper ? "paper" : "generated");
  for (const auto& b : blocks) {
    os << ";m=" << b.weight << ":";
    for (const auto& v : b.vectors) os << v.text() << "|";
  }
  return os.str();
}

std::vector<int> weight_order(int k) {
  std::vector<int> order;
  for (int m = k; m > 0; m -= 2) {
    order.push_back(m);
    order.push_back(-m);
  }
  if (k % 2 == 0) order.push_back(0);
  return order;
}

namespace {

std::vector<Monomial> monomials_deg_weight(int k, int m) {
  std::vector<Monomial> out;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b)
      for (int c = 0; a + b + c <= k; ++c) {
        int d = k - a - b - c;
        if (a - b + c - d == m) out.push_back(Monomial{{a, b, c, d}});
      }
  return out;
}

FieldElem fe(long num, long den = 1) { return FieldElem(rat(num, den)); }
FieldElem sq(long num, long den = 1) { return FieldElem::sqrt_rational(rat(num, den)); }

Poly Z() { return Poly::generator(Ring::sphere, 0); }
Poly Zb() { return Poly::generator(Ring::sphere, 1); }
Poly W() { return Poly::generator(Ring::sphere, 2); }
Poly Wb() { return Poly::generator(Ring::sphere, 3); }

Poly pw(const Poly& p, int e) {
  Poly r = Poly::constant(Ring::sphere, FieldElem::one());
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace

std::vector<Poly> build_weight_space(int k, int m) {
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  if (std::abs(m) > k || ((k - m) % 2) != 0) return {};
  auto source_monos = monomials_deg_weight(k, m);
  auto target_monos = monomials_deg_weight(k - 2, m);
  std::map<Monomial, std::size_t, poly::GradedLexLess> target_index;
  for (std::size_t i = 0; i < target_monos.size(); ++i) target_index[target_monos[i]] = i;

  Matrix map(target_monos.size(), source_monos.size());
  for (std::size_t j = 0; j < source_monos.size(); ++j) {
    Poly image = poly::laplacian_c2(Poly::monomial(Ring::sphere, source_monos[j], FieldElem::one()));
    for (const auto& [mono, coef] : image.terms()) map.at(target_index.at(mono), j) = coef;
  }
  RowEchelon re(map);
  std::vector<Poly> basis;
  for (const auto& v : re.kernel_basis()) {
    Poly p(Ring::sphere);
    for (std::size_t j = 0; j < source_monos.size(); ++j)
      if (!v[j].is_zero()) p.add_term(source_monos[j], v[j]);
    basis.push_back(std::move(p));
  }
  return basis;
}

BasisFamily generated_basis(int k) {
  BasisFamily fam;
  fam.k = k;
  fam.source = BasisSource::generated;
  for (int m : weight_order(k)) fam.blocks.push_back({m, build_weight_space(k, m)});
  return fam;
}

BasisFamily paper_basis(int k) {
  if (k < 0 || k > 4) throw std::out_of_range("fixed bases exist for 0 <= k <= 4 only");
  BasisFamily fam;
  fam.k = k;
  fam.source = BasisSource::paper;
  auto block = [&](int m, std::vector<Poly> v) { fam.blocks.push_back({m, std::move(v)}); };

  Poly zz = Z() * Zb();  // |z|^2 at the polynomial level
  Poly ww = W() * Wb();

  switch (k) {
    case 0:
      block(0, {Poly::constant(Ring::sphere, FieldElem::one())});
      break;
    case 1:
      block(1, {Z(), W()});
      block(-1, {Zb(), Wb()});
      break;
    case 2:
      block(2, {pw(Z(), 2), Z() * W(), pw(W(), 2)});
      block(-2, {pw(Zb(), 2), Zb() * Wb(), pw(Wb(), 2)});
      block(0, {sq(1, 2) * (zz - ww), sq(2) * (Z() * Wb()), sq(2) * (Zb() * W())});
      break;
    case 3:
      block(3, {pw(Z(), 3), pw(Z(), 2) * W(), Z() * pw(W(), 2), pw(W(), 3)});
      block(-3, {pw(Zb(), 3), pw(Zb(), 2) * Wb(), pw(Wb(), 2) * Zb(), pw(Wb(), 3)});
      block(1, {sq(3) * (pw(Z(), 2) * Wb()),
                (sq(1, 3) * zz - sq(4, 3) * ww) * Z(),
                (sq(4, 3) * zz - sq(1, 3) * ww) * W(),
                sq(3) * (pw(W(), 2) * Zb())});
      block(-1, {sq(3) * (pw(Zb(), 2) * W()),
                 (sq(1, 3) * zz - sq(4, 3) * ww) * Zb(),
                 (sq(4, 3) * zz - sq(1, 3) * ww) * Wb(),
                 sq(3) * (pw(Wb(), 2) * Z())});
      break;
    case 4: {
      block(4, {pw(Z(), 4), pw(Z(), 3) * W(), pw(Z(), 2) * pw(W(), 2), Z() * pw(W(), 3), pw(W(), 4)});
      block(-4, {pw(Zb(), 4), pw(Zb(), 3) * Wb(), pw(Zb(), 2) * pw(Wb(), 2), Zb() * pw(Wb(), 3),
                 pw(Wb(), 4)});
      block(2, {fe(-2) * (pw(Z(), 3) * Wb()),
                pw(Z(), 2) * (fe(1, 2) * zz - fe(3, 2) * ww),
                (Z() * W()) * (zz - ww),
                pw(W(), 2) * (fe(3, 2) * zz - fe(1, 2) * ww),
                fe(2) * (pw(W(), 3) * Zb())});
      block(-2, {fe(-2) * (pw(Zb(), 3) * W()),
                 pw(Zb(), 2) * (fe(1, 2) * zz - fe(3, 2) * ww),
                 (Zb() * Wb()) * (zz - ww),
                 pw(Wb(), 2) * (fe(3, 2) * zz - fe(1, 2) * ww),
                 fe(2) * (pw(Wb(), 3) * Z())});
      block(0, {sq(6) * pw(Z() * Wb(), 2),
                sq(3, 2) * ((Z() * Wb()) * (ww - zz)),
                sq(1, 6) * (pw(zz, 2) + pw(ww, 2) - fe(4) * (zz * ww)),
                sq(3, 2) * ((Zb() * W()) * (zz - ww)),
                sq(6) * pw(Zb() * W(), 2)});
      break;
    }
  }
  return fam;
}

BasisFamily basis(int k, BasisSource source) {
  return source == BasisSource::paper ? paper_basis(k) : generated_basis(k);
}

EigenCheck verify_eigen(const Poly& f, int k, int m) {
  EigenCheck c;
  c.gamma_round = Rational(static_cast<long>(k) * (k + 2));
  c.gamma_berger = c.gamma_round + Rational(5L * m * m);
  Poly lr = poly::laplacian_round(f);
  c.round_ok = lr == FieldElem(-c.gamma_round) * f;
  Poly d1 = poly::apply_derivation(1, f);
  c.weight_ok = d1 == (Rational(m) * FieldElem::i()) * f;
  Poly lb = poly::laplacian_berger(f, rat(1, 6));
  c.berger_ok = lb == FieldElem(-c.gamma_berger) * f;
  return c;
}

std::string EigenCheck::describe() const {
  std::ostringstream os;
  os << "round:" << (round_ok ? "ok" : "FAIL") << " weight:" << (weight_ok ? "ok" : "FAIL")
     << " berger:" << (berger_ok ? "ok" : "FAIL");
  return os.str();
}

Matrix change_of_basis(const BasisFamily& a, const BasisFamily& b) {
  if (a.k != b.k) throw std::domain_error("change of basis requires equal degree");
  if (a.blocks.size() != b.blocks.size())
    throw std::domain_error("change of basis requires matching block structure");
  const std::size_t n = a.size();
  Matrix t(n, n);
  std::size_t offset = 0;
  for (std::size_t bi = 0; bi < a.blocks.size(); ++bi) {
    const auto& ab = a.blocks[bi];
    const auto& bb = b.blocks[bi];
    if (ab.weight != bb.weight || ab.vectors.size() != bb.vectors.size())
      throw std::domain_error("change of basis requires matching block structure");
    const std::size_t bn = ab.vectors.size();
    if (bn == 0) continue;
    // coordinates of both blocks in the shared monomial list
    std::map<Monomial, std::size_t, poly::GradedLexLess> index;
    auto index_of = [&](const Poly& p) {
      for (const auto& [mono, coef] : p.terms())
        if (index.find(mono) == index.end()) {
          std::size_t next = index.size();
          index[mono] = next;
        }
    };
    for (const auto& v : ab.vectors) index_of(v);
    for (const auto& v : bb.vectors) index_of(v);
    Matrix bm(index.size(), bn);
    for (std::size_t j = 0; j < bn; ++j)
      for (const auto& [mono, coef] : bb.vectors[j].terms()) bm.at(index.at(mono), j) = coef;
    RowEchelon re(bm);
    for (std::size_t j = 0; j < bn; ++j) {
      std::vector<FieldElem> rhs(index.size());
      for (const auto& [mono, coef] : ab.vectors[j].terms()) rhs[index.at(mono)] = coef;
      auto x = re.solve(rhs);
      if (!x) throw std::domain_error("spans differ: basis vector not in target span");
      for (std::size_t i = 0; i < bn; ++i) t.at(offset + i, offset + j) = (*x)[i];
    }
    if (re.rank() != bn) throw std::domain_error("target block is not linearly independent");
    offset += bn;
  }
  return t;
}

}  // namespace lospec::harmonic
