#include "lospec/geometry.hpp"

#include <map>
#include <stdexcept>

namespace lospec::geometry {

using poly::Monomial;
using poly::Poly;
using poly::Ring;

namespace {

Poly X1() { return Poly::generator(Ring::euclidean4, 0); }
Poly Y1() { return Poly::generator(Ring::euclidean4, 1); }
Poly X2() { return Poly::generator(Ring::euclidean4, 2); }
Poly Y2() { return Poly::generator(Ring::euclidean4, 3); }
Poly zero4() { return Poly(Ring::euclidean4); }

FieldElem fq(long n, long d = 1) { return FieldElem(rat(n, d)); }
FieldElem sq(long n, long d = 1) { return FieldElem::sqrt_rational(rat(n, d)); }
FieldElem sqrt5() { return FieldElem::sqrt_radicand(5); }

// the quadratics appearing throughout the frame formulas
Poly q1() { return X1() * X1() + Y1() * Y1() - X2() * X2() - Y2() * Y2(); }
Poly q2() { return X1() * X2() + Y1() * Y2(); }
Poly q3() { return X2() * Y1() - X1() * Y2(); }
Poly qa() { return X1() * X2() - Y1() * Y2(); }
Poly qb() { return X1() * X1() - Y1() * Y1() - X2() * X2() + Y2() * Y2(); }
Poly qc() { return X1() * Y1() + X2() * Y2(); }
Poly qd() { return X1() * Y2() + X2() * Y1(); }
Poly qe() { return X1() * Y1() - X2() * Y2(); }
Poly qf() { return -(X1() * X1()) - X2() * X2() + Y1() * Y1() + Y2() * Y2(); }

Vec7 scale(const FieldElem& c, Vec7 v) {
  for (auto& p : v) p = c * p;
  return v;
}

}  // namespace

Vec7 frame_field(int label) {
  FieldElem s5 = sqrt5();
  FieldElem c35 = fq(3) * s5;        // 3 sqrt5
  FieldElem c35_2 = fq(3, 2) * s5;   // (3/2) sqrt5
  FieldElem c35_5 = fq(3, 5) * s5;   // (3/5) sqrt5
  FieldElem c35_10 = fq(3, 10) * s5; // (3/10) sqrt5
  switch (label) {
    case 1:
      return scale(fq(3, 2), {-Y1(), X1(), -Y2(), X2(), zero4(), zero4(), zero4()});
    case 2:
      return scale(sq(3, 8), {-X2(), Y2(), X1(), -Y1(), -(c35 * qa()), c35_2 * qb(), c35 * qc()});
    case 3:
      return scale(sq(3, 8), {-Y2(), -X2(), Y1(), X1(), -(c35 * qd()), c35 * qe(), c35_2 * qf()});
    case 4: {
      FieldElem h = fq(1, 2) * s5;
      return {h * X1(),          h * Y1(),       h * X2(), h * Y2(),
              fq(-3, 2) * q1(),  fq(-3) * q2(),  fq(-3) * q3()};
    }
    case 5:
      return scale(sq(15, 8),
                   {-X2(), Y2(), X1(), -Y1(), c35_5 * qa(), -(c35_10 * qb()), -(c35_5 * qc())});
    case 6:
      return scale(sq(15, 8),
                   {-Y2(), -X2(), Y1(), X1(), c35_5 * qd(), -(c35_5 * qe()), -(c35_10 * qf())});
    default:
      throw std::invalid_argument("frame label must be 1..6");
  }
}

Vec7 position_field() {
  FieldElem s5 = sqrt5();
  return {X1(), Y1(), X2(), Y2(), (fq(3, 4) * s5) * q1(), (fq(3, 2) * s5) * q2(),
          (fq(3, 2) * s5) * q3()};
}

std::array<FieldElem, 7> eval_field(const Vec7& f, const Point4& p) {
  std::array<FieldElem, 7> out;
  for (int i = 0; i < 7; ++i) out[i] = f[i].eval(p);
  return out;
}

FieldElem dot7(const std::array<FieldElem, 7>& a, const std::array<FieldElem, 7>& b) {
  FieldElem acc;
  for (int i = 0; i < 7; ++i) acc += a[i] * b[i];
  return acc;
}

Vec7 frame_field_from_complex_form(int label) {
  // complex coordinates as real polynomials with Gaussian coefficients
  FieldElem i = FieldElem::i();
  Poly z1 = X1() + i * Y1();
  Poly z2 = X2() + i * Y2();
  Poly zb1 = X1() - i * Y1();
  Poly zb2 = X2() - i * Y2();
  Poly p12 = z1 * z2;
  Poly pb12 = zb1 * zb2;

  FieldElem coeff;
  std::array<Poly, 4> slots{zero4(), zero4(), zero4(), zero4()};
  FieldElem c = fq(3, 2) * sqrt5();
  FieldElem c10 = fq(3, 10) * sqrt5();
  switch (label) {
    case 2:
      coeff = sq(3, 8);
      slots = {-zb2, zb1, FieldElem(-1) * (c * (pb12 + p12)), c * (z1 * z1 - zb2 * zb2)};
      break;
    case 3:
      coeff = i * sq(3, 8);
      slots = {-zb2, zb1, FieldElem(-1) * (c * (pb12 - p12)),
               FieldElem(-1) * (c * (z1 * z1 + zb2 * zb2))};
      break;
    case 5:
      coeff = sq(15, 8);
      slots = {-zb2, zb1, c10 * (pb12 + p12), FieldElem(-1) * (c10 * (z1 * z1 - zb2 * zb2))};
      break;
    case 6:
      coeff = i * sq(15, 8);
      slots = {-zb2, zb1, c10 * (pb12 - p12), c10 * (z1 * z1 + zb2 * zb2)};
      break;
    default:
      throw std::invalid_argument("complex forms are recorded for labels 2, 3, 5, 6");
  }
  for (auto& s : slots) s = coeff * s;
  auto realpart = [](const Poly& p) { return FieldElem(rat(1, 2)) * (p + p.conj()); };
  auto imagpart = [&i](const Poly& p) {
    return (rat(-1, 2) * i) * (p - p.conj());
  };
  Vec7 out{realpart(slots[0]), imagpart(slots[0]), realpart(slots[1]), imagpart(slots[1]),
           realpart(slots[2]), realpart(slots[3]), imagpart(slots[3])};
  return out;
}

Point4 base_point() {
  return {FieldElem(rat(2, 3)), FieldElem(), FieldElem(), FieldElem()};
}

ConnectionTable connection_coefficients_at(const Point4& p) {
  Vec7 frames[6];
  for (int j = 1; j <= 6; ++j) frames[j - 1] = frame_field(j);
  std::array<FieldElem, 7> frame_at[6];
  for (int j = 0; j < 6; ++j) frame_at[j] = eval_field(frames[j], p);
  std::array<FieldElem, 7> nu_at = eval_field(position_field(), p);

  ConnectionTable table;
  for (int i = 1; i <= 3; ++i) {
    // base-coordinate velocity of the curve through p in direction e_i
    std::array<FieldElem, 4> v;
    for (int a = 0; a < 4; ++a) v[a] = frame_at[i - 1][a];
    for (int j = 1; j <= 6; ++j) {
      std::array<FieldElem, 7> deriv;
      for (int comp = 0; comp < 7; ++comp) {
        FieldElem acc;
        for (int a = 0; a < 4; ++a) {
          if (v[a].is_zero()) continue;
          acc += v[a] * poly::partial_derivative(frames[j - 1][comp], a).eval(p);
        }
        deriv[comp] = acc;
      }
      FrameDerivative fd;
      for (int l = 0; l < 6; ++l) fd.frame_coeff[l] = dot7(deriv, frame_at[l]);
      fd.nu_coeff = dot7(deriv, nu_at);
      table.at(i, j) = fd;
    }
  }
  return table;
}

ConnectionTable connection_coefficients() { return connection_coefficients_at(base_point()); }

ConnectionTable expected_connection() {
  ConnectionTable t;
  FieldElem s5_2 = fq(1, 2) * sqrt5();
  FieldElem s5_4 = fq(1, 4) * sqrt5();
  auto set = [&t](int i, int j, std::initializer_list<std::pair<int, FieldElem>> frame_terms,
                  FieldElem nu = FieldElem()) {
    FrameDerivative fd;
    for (auto& [l, c] : frame_terms) fd.frame_coeff[l - 1] = c;
    fd.nu_coeff = nu;
    t.at(i, j) = fd;
  };
  set(1, 1, {{4, -s5_2}}, fq(-1));
  set(1, 2, {{3, fq(-11, 4)}, {6, s5_4}});
  set(1, 3, {{2, fq(11, 4)}, {5, -s5_4}});
  set(1, 4, {{1, s5_2}});
  set(1, 5, {{3, s5_4}, {6, fq(-7, 4)}});
  set(1, 6, {{2, -s5_4}, {5, fq(7, 4)}});

  set(2, 1, {{3, fq(1, 4)}, {6, s5_4}});
  set(2, 2, {{4, s5_4}}, fq(-1));
  set(2, 3, {{1, fq(-1, 4)}});
  set(2, 4, {{2, -s5_4}, {5, fq(3, 4)}});
  set(2, 5, {{4, fq(-3, 4)}});
  set(2, 6, {{1, -s5_4}});

  set(3, 1, {{2, fq(-1, 4)}, {5, -s5_4}});
  set(3, 2, {{1, fq(1, 4)}});
  set(3, 3, {{4, s5_4}}, fq(-1));
  set(3, 4, {{3, -s5_4}, {6, fq(3, 4)}});
  set(3, 5, {{1, s5_4}});
  set(3, 6, {{4, fq(-3, 4)}});
  return t;
}

ShapeReport shape_operator_checks() {
  ConnectionTable table = connection_coefficients();
  // B(e_i, e_j): normal components (e4, e5, e6) of D_{e_i} e_j
  FieldElem b[3][3][3];
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int a = 0; a < 3; ++a) b[i - 1][j - 1][a] = table.at(i, j).frame_coeff[3 + a];

  ShapeReport rep;
  rep.symmetric = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        if (!(b[i][j][a] == b[j][i][a])) rep.symmetric = false;

  // Btilde[u][v] = sum_ij b[i][j][v] * b[i][j][u]
  FieldElem btilde[3][3];
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      FieldElem acc;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc += b[i][j][v] * b[i][j][u];
      btilde[u][v] = acc;
    }
  rep.btilde_diagonal = true;
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      if (u != v && !btilde[u][v].is_zero()) rep.btilde_diagonal = false;
  for (int u = 0; u < 3; ++u) rep.btilde_diag[u] = btilde[u][u];

  FieldElem mean[3];
  for (int a = 0; a < 3; ++a) {
    FieldElem acc;
    for (int i = 0; i < 3; ++i) acc += b[i][i][a];
    mean[a] = acc;
  }
  rep.mean_curvature_zero = mean[0].is_zero() && mean[1].is_zero() && mean[2].is_zero();
  return rep;
}

bool ShapeReport::pass() const {
  return symmetric && btilde_diagonal && mean_curvature_zero &&
         btilde_diag[0] == FieldElem(rat(15, 8)) && btilde_diag[1] == FieldElem(rat(5, 8)) &&
         btilde_diag[2] == FieldElem(rat(5, 8));
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.z1 * b.z1 - a.z2 * b.z2.conj(), a.z1 * b.z2 + a.z2 * b.z1.conj()};
}

Matrix phi_hom(const GaussianRational& z1, const GaussianRational& z2) {
  if (z1.norm() + z2.norm() != 1)
    throw std::domain_error("phi_hom requires a point on the unit 3-sphere");
  GaussianRational z1_zb2 = z1 * z2.conj();
  GaussianRational z1_z2 = z1 * z2;
  GaussianRational z1_sq = z1 * z1;
  GaussianRational z2_sq = z2 * z2;
  Matrix m(3, 3);
  m.at(0, 0) = FieldElem(z1.norm() - z2.norm());
  m.at(0, 1) = FieldElem(Rational(2) * z1_zb2.re);
  m.at(0, 2) = FieldElem(Rational(2) * z1_zb2.im);
  m.at(1, 0) = FieldElem(Rational(-2) * z1_z2.re);
  m.at(1, 1) = FieldElem(z1_sq.re - z2_sq.re);
  m.at(1, 2) = FieldElem(z1_sq.im + z2_sq.im);
  m.at(2, 0) = FieldElem(Rational(2) * z1_z2.im);
  m.at(2, 1) = FieldElem(-z1_sq.im + z2_sq.im);
  m.at(2, 2) = FieldElem(z1_sq.re + z2_sq.re);
  return m;
}

Matrix phi_hom(const Quaternion& q) { return phi_hom(q.z1, q.z2); }

std::array<Rational, 3> hopf_eta(const Quaternion& q) {
  GaussianRational cross = q.z1 * q.z2.conj();
  return {q.z1.norm() - q.z2.norm(), Rational(2) * cross.re, Rational(2) * cross.im};
}

Matrix psi_matrix(const Quaternion& q) {
  if (q.norm() != 1) throw std::domain_error("psi requires a unit quaternion");
  Matrix m(7, 7);
  // right multiplication x -> xQ on the base block, in real coordinates
  auto put_pair = [&m](int row, const GaussianRational& a, const GaussianRational& b) {
    m.at(row, 0) = FieldElem(a.re);
    m.at(row, 1) = FieldElem(a.im);
    m.at(row, 2) = FieldElem(b.re);
    m.at(row, 3) = FieldElem(b.im);
  };
  GaussianRational i(Rational(0), Rational(1));
  // basis quaternions 1, i, j, k as complex pairs (1,0), (i,0), (0,1), (0,i)
  put_pair(0, q.z1, q.z2);
  put_pair(1, i * q.z1, i * q.z2);
  put_pair(2, -q.z2.conj(), q.z1.conj());
  put_pair(3, -(i * q.z2.conj()), i * q.z1.conj());
  Matrix phi = phi_hom(q);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(4 + r, 4 + c) = phi.at(r, c);
  return m;
}

std::array<FieldElem, 7> psi_action(const std::array<FieldElem, 7>& p, const Quaternion& q) {
  Matrix m = psi_matrix(q);
  std::array<FieldElem, 7> out;
  for (int j = 0; j < 7; ++j) {
    FieldElem acc;
    for (int i = 0; i < 7; ++i) acc += p[i] * m.at(i, j);
    out[j] = acc;
  }
  return out;
}

std::array<FieldElem, 7> graph_point(const Point4& q) {
  Vec7 nu = position_field();
  return eval_field(nu, q);
}

bool on_link(const std::array<FieldElem, 7>& p) {
  FieldElem s5 = sqrt5();
  FieldElem q1v = p[0] * p[0] + p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
  FieldElem q2v = p[0] * p[2] + p[1] * p[3];
  FieldElem q3v = p[2] * p[1] - p[0] * p[3];
  // radius: |x|^2 = 4/9 on the base sphere
  FieldElem r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
  return r2 == FieldElem(rat(4, 9)) && p[4] == (fq(3, 4) * s5) * q1v &&
         p[5] == (fq(3, 2) * s5) * q2v && p[6] == (fq(3, 2) * s5) * q3v;
}

Point4 stereographic_point(const std::array<Rational, 3>& v, const Rational& radius) {
  Rational norm2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  Rational denom = norm2 + 1;
  return {FieldElem(radius * 2 * v[0] / denom), FieldElem(radius * 2 * v[1] / denom),
          FieldElem(radius * 2 * v[2] / denom), FieldElem(radius * (norm2 - 1) / denom)};
}

std::vector<Point4> rational_sphere_points(std::size_t n, const Rational& radius) {
  std::vector<Point4> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    // distinct rational 3-space points; inverse stereographic projection is
    // injective, so the outputs are distinct.
    out.push_back(stereographic_point({rat(static_cast<long>(t) + 1, 2),
                                       rat(static_cast<long>(t) + 2, 3),
                                       rat(static_cast<long>(t % 7) + 3, 5)},
                                      radius));
  }
  return out;
}

std::vector<Quaternion> rational_unit_quaternions(std::size_t n) {
  std::vector<Quaternion> out;
  out.reserve(n);
  for (const auto& p : rational_sphere_points(n, Rational(1))) {
    Quaternion q{GaussianRational(p[0].rational_value(), p[1].rational_value()),
                 GaussianRational(p[2].rational_value(), p[3].rational_value())};
    out.push_back(q);
  }
  return out;
}

Matrix so7_j(int i, int j) {
  if (!(1 <= i && i < j && j <= 4)) throw std::invalid_argument("so7_j indices");
  Matrix m(7, 7);
  m.at(i - 1, j - 1) = FieldElem(1);
  m.at(j - 1, i - 1) = FieldElem(-1);
  return m;
}

Matrix so7_k(int i, int j) {
  if (!(1 <= i && i < j && j <= 3)) throw std::invalid_argument("so7_k indices");
  Matrix m(7, 7);
  m.at(3 + i, 3 + j) = FieldElem(1);
  m.at(3 + j, 3 + i) = FieldElem(-1);
  return m;
}

Matrix so7_w(int a, int b) {
  if (!(1 <= a && a <= 4 && 1 <= b && b <= 3)) throw std::invalid_argument("so7_w indices");
  Matrix m(7, 7);
  m.at(a - 1, 4 + b - 1) = FieldElem(1);
  m.at(4 + b - 1, a - 1) = FieldElem(-1);
  return m;
}

poly::Poly reduce_sphere_relation(const Poly& p) {
  // y2^2 -> 4/9 - x1^2 - y1^2 - x2^2, applied to a fixed point
  Poly rewrite = Poly::constant(Ring::euclidean4, fq(4, 9)) - X1() * X1() - Y1() * Y1() -
                 X2() * X2();
  Poly current = p;
  for (;;) {
    Poly next(Ring::euclidean4);
    bool changed = false;
    for (const auto& [m, c] : current.terms()) {
      if (m.e[3] >= 2) {
        Monomial rest = m;
        rest.e[3] -= 2;
        next += c * (Poly::monomial(Ring::euclidean4, rest, FieldElem::one()) * rewrite);
        changed = true;
      } else {
        next.add_term(m, c);
      }
    }
    current = std::move(next);
    if (!changed) return current;
  }
}

std::vector<Matrix> so7_generators() {
  std::vector<Matrix> gens;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) gens.push_back(so7_j(i, j));
  gens.push_back(so7_k(1, 2));
  gens.push_back(so7_k(1, 3));
  gens.push_back(so7_k(2, 3));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b) gens.push_back(so7_w(a, b));
  return gens;
}

std::vector<std::string> so7_generator_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) names.push_back("J" + std::to_string(i) + std::to_string(j));
  names.push_back("K12");
  names.push_back("K13");
  names.push_back("K23");
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b) names.push_back("W" + std::to_string(a) + std::to_string(b));
  return names;
}

std::array<Poly, 3> killing_projection(const Matrix& a) {
  Vec7 nu = position_field();
  // nu A as a polynomial 7-vector
  Vec7 nu_a;
  for (int j = 0; j < 7; ++j) {
    Poly acc(Ring::euclidean4);
    for (int i = 0; i < 7; ++i) {
      if (a.at(i, j).is_zero()) continue;
      acc += a.at(i, j) * nu[i];
    }
    nu_a[j] = acc;
  }
  std::array<Poly, 3> out{zero4(), zero4(), zero4()};
  for (int l = 0; l < 3; ++l) {
    Vec7 e = frame_field(4 + l);
    Poly acc(Ring::euclidean4);
    for (int j = 0; j < 7; ++j) acc += nu_a[j] * e[j];
    out[l] = reduce_sphere_relation(acc);
  }
  return out;
}

namespace {

// Table entries, normalized by sqrt(8/15): row pairs (e5, e6) per generator
// J12, J13, J14, J23, J24, J34.
std::array<std::array<Poly, 2>, 6> table1_reference() {
  return {{{qd(), -qa()},
           {X1() * X1() + X2() * X2(), qc()},
           {-qe(), X1() * X1() + Y2() * Y2()},
           {qe(), X2() * X2() + Y1() * Y1()},
           {-(Y1() * Y1()) - Y2() * Y2(), qc()},
           {-qd(), qa()}}};
}

}  // namespace

KillingReport killing_map() {
  auto gens = so7_generators();
  const std::size_t count = gens.size();

  std::vector<std::array<Poly, 3>> projections(count);
  for (std::size_t g = 0; g < count; ++g) projections[g] = killing_projection(gens[g]);

  // The map is Q-linear on the generator space while the polynomial
  // coefficients live in the extension field, so each coefficient is expanded
  // into its 16 rational coordinates (8 radicands x re/im) before the rank
  // and kernel are read off over Q.
  std::map<std::pair<int, Monomial>, std::size_t,
           bool (*)(const std::pair<int, Monomial>&, const std::pair<int, Monomial>&)>
      row_index([](const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) {
        if (a.first != b.first) return a.first < b.first;
        return poly::GradedLexLess()(a.second, b.second);
      });
  for (const auto& proj : projections)
    for (int comp = 0; comp < 3; ++comp)
      for (const auto& [m, c] : proj[comp].terms()) {
        auto key = std::make_pair(comp, m);
        if (row_index.find(key) == row_index.end()) {
          std::size_t next = row_index.size();
          row_index[key] = next;
        }
      }
  Matrix big(16 * row_index.size(), count);
  for (std::size_t g = 0; g < count; ++g)
    for (int comp = 0; comp < 3; ++comp)
      for (const auto& [m, c] : projections[g][comp].terms()) {
        std::size_t base = 16 * row_index.at({comp, m});
        for (int slot = 0; slot < FieldElem::kSlots; ++slot) {
          const GaussianRational& gr = c.coeff(FieldElem::slot_radicand(slot));
          if (gr.re != 0) big.at(base + 2 * slot, g) = FieldElem(gr.re);
          if (gr.im != 0) big.at(base + 2 * slot + 1, g) = FieldElem(gr.im);
        }
      }

  RowEchelon re(big);
  KillingReport rep;
  rep.rank = re.rank();
  auto kernel_f = re.kernel_basis();
  rep.kernel_dimension = kernel_f.size();
  for (const auto& v : kernel_f) {
    std::vector<Rational> combo;
    combo.reserve(count);
    for (const auto& c : v) combo.push_back(c.is_zero() ? Rational(0) : c.rational_value());
    rep.kernel_combinations.push_back(std::move(combo));
  }

  // the four listed kernel combinations, in generator coordinates
  std::vector<std::vector<Rational>> reference(4, std::vector<Rational>(count, Rational(0)));
  reference[0][0] = 1;  // J12
  reference[0][5] = 1;  // J34
  reference[1][1] = 1;  // J13
  reference[1][4] = 1;  // J24
  reference[1][6] = 2;  // 2 K12
  reference[2][2] = 1;   // J14
  reference[2][3] = -1;  // -J23
  reference[2][7] = -2;  // -2 K13
  reference[3][0] = 1;  // J12
  reference[3][8] = 1;  // K23

  rep.reference_kernel_members = true;
  for (const auto& comboq : reference) {
    Matrix a(7, 7);
    for (std::size_t g = 0; g < count; ++g)
      if (comboq[g] != 0) a = a + FieldElem(comboq[g]) * gens[g];
    auto proj = killing_projection(a);
    for (const auto& p : proj)
      if (!p.is_zero()) rep.reference_kernel_members = false;
  }
  // independence of the four combinations
  Matrix combos(count, 4);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t g = 0; g < count; ++g)
      if (reference[c][g] != 0) combos.at(g, c) = FieldElem(reference[c][g]);
  rep.reference_kernel_independent = RowEchelon(combos).rank() == 4;

  // Table 1: sqrt(8/15)-normalized e5/e6 projections of the J generators
  auto ref = table1_reference();
  FieldElem unscale = FieldElem::sqrt_rational(rat(8, 15));
  for (int g = 0; g < 6; ++g) {
    for (int l = 0; l < 2; ++l) {
      Table1Entry entry;
      entry.generator_index = g;
      entry.frame_label = 5 + l;
      Poly expected = reduce_sphere_relation(ref[g][l]);
      Poly computed = unscale * projections[g][1 + l];
      entry.match = computed == expected;
      entry.sign_flipped = !entry.match && (computed == -expected);
      rep.table1.push_back(entry);
    }
  }
  return rep;
}

bool KillingReport::table1_all_match() const {
  for (const auto& e : table1)
    if (!e.match) return false;
  return true;
}

bool KillingReport::table1_verified_up_to_sign() const {
  for (const auto& e : table1)
    if (!e.match && !e.sign_flipped) return false;
  return true;
}

E4FormulaReport killing_e4_formula_check() {
  E4FormulaReport rep;
  Vec7 nu = position_field();
  Vec7 e4 = frame_field(4);

  auto nu_a_e4 = [&](const Matrix& a) {
    Poly acc(Ring::euclidean4);
    for (int j = 0; j < 7; ++j) {
      Poly col(Ring::euclidean4);
      for (int i = 0; i < 7; ++i)
        if (!a.at(i, j).is_zero()) col += a.at(i, j) * nu[i];
      acc += col * e4[j];
    }
    return acc;
  };
  auto rhs_for_w = [&](const Matrix& w) {  // w is 4x3 over Q
    Poly base[4] = {X1(), Y1(), X2(), Y2()};
    Poly t[3] = {q1(), fq(2) * q2(), fq(2) * q3()};
    Poly acc(Ring::euclidean4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 3; ++b)
        if (!w.at(a, b).is_zero()) acc += w.at(a, b) * (base[a] * t[b]);
    return fq(-27, 8) * acc;
  };

  // W = 0: every so(4) + so(3) generator projects to zero on e4
  rep.zero_when_w_zero = true;
  auto gens = so7_generators();
  for (std::size_t g = 0; g < 9; ++g)
    if (!nu_a_e4(gens[g]).is_zero()) rep.zero_when_w_zero = false;

  // generic W, including J and K parts: the e4 projection depends on W only
  Matrix w(4, 3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 3; ++b) w.at(a, b) = FieldElem(rat(2 * a - b + 1, 1 + b));
  Matrix amat(7, 7);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 3; ++b) {
      amat.at(a, 4 + b) = w.at(a, b);
      amat.at(4 + b, a) = -w.at(a, b);
    }
  amat = amat + so7_j(1, 3) + FieldElem(2) * so7_k(2, 3);  // J, K parts must not matter
  rep.symbolic_identity = nu_a_e4(amat) == rhs_for_w(w);

  Matrix w11(4, 3);
  w11.at(0, 0) = FieldElem(1);
  Matrix a11(7, 7);
  a11.at(0, 4) = FieldElem(1);
  a11.at(4, 0) = FieldElem(-1);
  Poly lhs11 = nu_a_e4(a11);
  Poly rhs11 = rhs_for_w(w11);
  rep.pointwise_identity = true;
  for (const auto& p : rational_sphere_points(20, rat(2, 3))) {
    if (!(lhs11.eval(p) == rhs11.eval(p))) rep.pointwise_identity = false;
  }
  return rep;
}

}  // namespace lospec::geometry
