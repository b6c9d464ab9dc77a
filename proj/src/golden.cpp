#include "lospec/golden.hpp"

#include <cmath>
#include <stdexcept>

namespace lospec::golden {

namespace {

FieldElem fe(long v) { return FieldElem(v); }
FieldElem im(long v) { return Rational(v) * FieldElem::i(); }
FieldElem sqrt6() { return FieldElem::sqrt_radicand(6); }
FieldElem sqrt3() { return FieldElem::sqrt_radicand(3); }
FieldElem sqrt2() { return FieldElem::sqrt_radicand(2); }

void put_block(Matrix& m, std::size_t bi, std::size_t bj, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(bi + i, bj + j) = b.at(i, j);
}

Matrix scaled_identity(std::size_t n, const FieldElem& c) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

Matrix diag_of(const std::vector<FieldElem>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix antidiag_of(const std::vector<FieldElem>& d) {
  const std::size_t n = d.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = d[i];
  return m;
}

Matrix t2_block(int k) {
  switch (k) {
    case 1:
      return scaled_identity(4, fe(8));
    case 2: {
      Matrix t(9, 9);
      for (int i = 0; i < 6; ++i) t.at(i, i) = fe(28);
      for (int i = 6; i < 9; ++i) t.at(i, i) = fe(8);
      return t;
    }
    case 3: {
      Matrix t(16, 16);
      for (int i = 0; i < 8; ++i) t.at(i, i) = fe(60);
      for (int i = 8; i < 16; ++i) t.at(i, i) = fe(20);
      return t;
    }
    case 4: {
      Matrix t(25, 25);
      for (int i = 0; i < 10; ++i) t.at(i, i) = fe(104);
      for (int i = 10; i < 20; ++i) t.at(i, i) = fe(44);
      for (int i = 20; i < 25; ++i) t.at(i, i) = fe(24);
      return t;
    }
    default:
      throw std::invalid_argument("t2_block: k out of range");
  }
}

Matrix a1_rep(int k) {
  switch (k) {
    case 1:
      return diag_of({im(1), im(1), im(-1), im(-1)});
    case 2: {
      std::vector<FieldElem> d(9);
      for (int i = 0; i < 3; ++i) d[i] = im(2);
      for (int i = 3; i < 6; ++i) d[i] = im(-2);
      return diag_of(d);
    }
    case 3: {
      std::vector<FieldElem> d(16);
      for (int i = 0; i < 4; ++i) d[i] = im(3);
      for (int i = 4; i < 8; ++i) d[i] = im(-3);
      for (int i = 8; i < 12; ++i) d[i] = im(1);
      for (int i = 12; i < 16; ++i) d[i] = im(-1);
      return diag_of(d);
    }
    case 4: {
      std::vector<FieldElem> d(25);
      for (int i = 0; i < 5; ++i) d[i] = im(4);
      for (int i = 5; i < 10; ++i) d[i] = im(-4);
      for (int i = 10; i < 15; ++i) d[i] = im(2);
      for (int i = 15; i < 20; ++i) d[i] = im(-2);
      return diag_of(d);
    }
    default:
      throw std::invalid_argument("a1_rep: k out of range");
  }
}

Matrix beta_k2() {
  Matrix b(6, 3);
  long rows[6][3] = {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {0, 1, 0}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 3; ++j)
      if (rows[i][j]) b.at(i, j) = fe(rows[i][j]);
  return b;
}

Matrix gamma_k2() {
  Matrix g(6, 3);
  long rows[6][3] = {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 3; ++j)
      if (rows[i][j]) g.at(i, j) = fe(rows[i][j]);
  return g;
}

Matrix a2_rep(int k) {
  switch (k) {
    case 1: {
      Matrix a(4, 4);
      a.at(0, 3) = fe(1);
      a.at(1, 2) = fe(-1);
      a.at(2, 1) = fe(1);
      a.at(3, 0) = fe(-1);
      return a;
    }
    case 2: {
      Matrix a(9, 9);
      Matrix b = beta_k2();
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) {
          a.at(i, 6 + j) = -(sqrt2() * b.at(i, j));
          a.at(6 + j, i) = sqrt2() * b.at(i, j);
        }
      return a;
    }
    case 3: {
      Matrix a(16, 16);
      Matrix j1 = diag_of({sqrt3(), -sqrt3(), -sqrt3(), -sqrt3(), sqrt3(), -sqrt3(), -sqrt3(), -sqrt3()});
      Matrix k1 = antidiag_of({fe(2), fe(2), fe(-2), fe(-2), fe(2), fe(2), fe(-2), fe(-2)});
      put_block(a, 0, 8, j1);
      put_block(a, 8, 0, FieldElem(-1) * j1);
      put_block(a, 8, 8, k1);
      return a;
    }
    case 4: {
      Matrix a(25, 25);
      Matrix two = scaled_identity(5, fe(2));
      Matrix s6 = scaled_identity(5, sqrt6());
      Matrix j1 = antidiag_of({fe(1), fe(-1), fe(1), fe(-1), fe(1)});
      put_block(a, 0, 10, FieldElem(-1) * two);
      put_block(a, 5, 15, FieldElem(-1) * two);
      put_block(a, 10, 0, two);
      put_block(a, 10, 20, FieldElem(-1) * s6);
      put_block(a, 15, 5, two);
      put_block(a, 15, 20, FieldElem(-1) * (sqrt6() * j1));
      put_block(a, 20, 10, s6);
      put_block(a, 20, 15, sqrt6() * j1);
      return a;
    }
    default:
      throw std::invalid_argument("a2_rep: k out of range");
  }
}

Matrix a3_rep(int k) {
  FieldElem i1 = FieldElem::i();
  switch (k) {
    case 1: {
      Matrix a(4, 4);
      a.at(0, 3) = im(-1);
      a.at(1, 2) = im(1);
      a.at(2, 1) = im(1);
      a.at(3, 0) = im(-1);
      return a;
    }
    case 2: {
      Matrix a(9, 9);
      Matrix g = gamma_k2();
      FieldElem is2 = i1 * sqrt2();
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 3; ++j) {
          a.at(i, 6 + j) = is2 * g.at(i, j);
          a.at(6 + j, i) = is2 * g.at(i, j);
        }
      return a;
    }
    case 3: {
      Matrix a(16, 16);
      FieldElem is3 = i1 * sqrt3();
      Matrix j2 = diag_of({-is3, is3, is3, is3, is3, -is3, -is3, -is3});
      Matrix k2 = antidiag_of({im(-2), im(-2), im(2), im(2), im(2), im(2), im(-2), im(-2)});
      put_block(a, 0, 8, j2);
      put_block(a, 8, 0, j2);
      put_block(a, 8, 8, k2);
      return a;
    }
    case 4: {
      Matrix a(25, 25);
      Matrix two_i = scaled_identity(5, im(2));
      Matrix s6_i = scaled_identity(5, i1 * sqrt6());
      Matrix j1 = antidiag_of({fe(1), fe(-1), fe(1), fe(-1), fe(1)});
      Matrix s6j1_i = (i1 * sqrt6()) * j1;
      put_block(a, 0, 10, two_i);
      put_block(a, 5, 15, FieldElem(-1) * two_i);
      put_block(a, 10, 0, two_i);
      put_block(a, 10, 20, s6_i);
      put_block(a, 15, 5, FieldElem(-1) * two_i);
      put_block(a, 15, 20, FieldElem(-1) * s6j1_i);
      put_block(a, 20, 10, s6_i);
      put_block(a, 20, 15, FieldElem(-1) * s6j1_i);
      return a;
    }
    default:
      throw std::invalid_argument("a3_rep: k out of range");
  }
}

linalg::QPoly qp(std::initializer_list<long> ascending) {
  linalg::QPoly p;
  for (long c : ascending) p.c.push_back(Rational(c));
  p.trim();
  return p;
}

}  // namespace

Matrix derivation_rep(int k, int i) {
  switch (i) {
    case 1: return a1_rep(k);
    case 2: return a2_rep(k);
    case 3: return a3_rep(k);
    default: throw std::invalid_argument("derivation index must be 1..3");
  }
}

Matrix operator_matrix(int k) {
  if (k == 0) {
    Matrix m(3, 3);
    m.at(0, 0) = fe(-10);
    return m;
  }
  if (k < 1 || k > 4) throw std::invalid_argument("printed matrices exist for k = 0..4");
  Matrix t2 = t2_block(k);
  Matrix a1 = a1_rep(k);
  Matrix a2 = a2_rep(k);
  Matrix a3 = a3_rep(k);
  const std::size_t n = t2.rows();
  FieldElem s6 = sqrt6();
  Matrix m(3 * n, 3 * n);
  put_block(m, 0, 0, t2 - scaled_identity(n, fe(10)));
  put_block(m, 0, n, s6 * a2);
  put_block(m, 0, 2 * n, s6 * a3);
  put_block(m, n, 0, FieldElem(-1) * (s6 * a2));
  put_block(m, n, n, t2);
  put_block(m, n, 2 * n, fe(-14) * a1);
  put_block(m, 2 * n, 0, FieldElem(-1) * (s6 * a3));
  put_block(m, 2 * n, n, fe(14) * a1);
  put_block(m, 2 * n, 2 * n, t2);
  return m;
}

std::vector<linalg::PolyFactor> charpoly_factors(int k) {
  switch (k) {
    case 0:
      return {{qp({0, 1}), 2}, {qp({10, 1}), 1}};
    case 1:
      return {{qp({0, 1}), 4}, {qp({8, 1}), 4}, {qp({-22, 1}), 4}};
    case 2:
      return {{qp({8, 1}), 3}, {qp({0, 1}), 3}, {qp({-6, 1}), 9}, {qp({-20, 1}), 6}, {qp({-56, 1}), 6}};
    case 3:
      return {{qp({0, 1}), 8},
              {qp({-44808192, 8472000, -566720, 16820, -220, 1}), 8}};
    case 4:
      return {{qp({6720, -166, 1}), 10},
              {qp({-1280, 560, -46, 1}), 5},
              {qp({5529600, -591360, 20440, -266, 1}), 10}};
    default:
      throw std::invalid_argument("factor lists exist for k = 0..4");
  }
}

std::vector<std::pair<Rational, unsigned>> rational_eigenvalues(int k) {
  switch (k) {
    case 0:
      return {{Rational(-10), 1}, {Rational(0), 2}};
    case 1:
      return {{Rational(-8), 4}, {Rational(0), 4}, {Rational(22), 4}};
    case 2:
      return {{Rational(-8), 3}, {Rational(0), 3}, {Rational(6), 9}, {Rational(20), 6}, {Rational(56), 6}};
    case 3:
      return {{Rational(0), 8},  {Rational(12), 8}, {Rational(22), 8},
              {Rational(32), 8}, {Rational(52), 8}, {Rational(102), 8}};
    default:
      throw std::invalid_argument("rational spectra listed for k = 0..3");
  }
}

std::vector<double> float_eigenvalues(int k) {
  std::vector<double> out;
  auto rep = [&](double v, int times) {
    for (int i = 0; i < times; ++i) out.push_back(v);
  };
  switch (k) {
    case 0:
      rep(-10, 1);
      rep(0, 2);
      break;
    case 1:
      rep(-8, 4);
      rep(0, 4);
      rep(22, 4);
      break;
    case 2:
      rep(-8, 3);
      rep(0, 3);
      rep(6, 9);
      rep(20, 6);
      rep(56, 6);
      break;
    case 3:
      rep(0, 8);
      rep(12, 8);
      rep(22, 8);
      rep(32, 8);
      rep(52, 8);
      rep(102, 8);
      break;
    case 4: {
      double s145 = std::sqrt(145.0);
      double s265 = std::sqrt(265.0);
      rep(15 - s145, 5);
      rep(16, 5);
      rep(35 - s265, 10);
      rep(15 + s145, 5);
      rep(36, 10);
      rep(35 + s265, 10);
      rep(70, 10);
      rep(96, 10);
      rep(160, 10);
      break;
    }
    default:
      throw std::invalid_argument("reference spectra exist for k = 0..4");
  }
  return out;
}

linalg::InertiaTriple inertia_triple(int k) {
  switch (k) {
    case 0: return {0, 2, 1};
    case 1: return {4, 4, 4};
    case 2: return {21, 3, 3};
    case 3: return {40, 8, 0};
    case 4: return {75, 0, 0};
    default: throw std::invalid_argument("inertia listed for k = 0..4");
  }
}

std::size_t kernel_dimension(int k) {
  switch (k) {
    case 0: return 2;
    case 1: return 4;
    case 2: return 3;
    case 3: return 8;
    case 4: return 0;
    default: throw std::invalid_argument("kernel dimensions listed for k = 0..4");
  }
}

std::vector<Rational> indicial_root_list() {
  return {Rational(0), Rational(-1), rat(-3, 2), rat(-5, 2), Rational(-3), Rational(-4)};
}

}  // namespace lospec::golden
