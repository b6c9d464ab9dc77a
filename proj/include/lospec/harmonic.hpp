#pragma once

#include <string>
#include <vector>

#include "lospec/matrix.hpp"
#include "lospec/poly.hpp"

namespace lospec::harmonic {

enum class BasisSource { paper, generated };

struct WeightBlock {
  int weight;
  std::vector<poly::Poly> vectors;
};

// Ordered basis of the degree-k harmonic eigenspace, split into d1-weight
// blocks.  Block order follows the k <= 4 listings: k, -k, k-2, -(k-2), ...,
// with 0 last for even k.
struct BasisFamily {
  int k = 0;
  BasisSource source = BasisSource::generated;
  std::vector<WeightBlock> blocks;

  std::size_t size() const;
  std::vector<poly::Poly> flatten() const;
  std::vector<int> weight_labels() const;  // one label per flattened vector
  // text forms of all vectors, used for content hashing
  std::string content_text() const;
};

std::vector<int> weight_order(int k);

// Basis of the harmonic polynomials of degree k and weight m over Q: the
// exact kernel of the euclidean Laplacian restricted to the (k, m) monomial
// space.  Empty when |m| > k or m has the wrong parity; size k+1 otherwise.
std::vector<poly::Poly> build_weight_space(int k, int m);

BasisFamily generated_basis(int k);

// The fixed bases for k <= 4, transcribed with exact coefficients.
// Throws std::out_of_range for k > 4 or k < 0.
BasisFamily paper_basis(int k);

BasisFamily basis(int k, BasisSource source);

struct EigenCheck {
  bool round_ok = false;    // round Laplacian eigenvalue -k(k+2)
  bool weight_ok = false;   // d1 f = i m f
  bool berger_ok = false;   // Berger eigenvalue -(k(k+2) + m^2 (1/tau - 1)) at tau = 1/6
  Rational gamma_round;     // k(k+2)
  Rational gamma_berger;    // k(k+2) + 5 m^2
  bool pass() const { return round_ok && weight_ok && berger_ok; }
  std::string describe() const;
};

EigenCheck verify_eigen(const poly::Poly& f, int k, int m);

// Exact change of basis T with A = B * T (columnwise, block-by-block).
// Throws std::domain_error when the spans differ.
Matrix change_of_basis(const BasisFamily& a, const BasisFamily& b);

}  // namespace lospec::harmonic
