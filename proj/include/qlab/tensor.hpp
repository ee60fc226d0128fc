#pragma once

#include "qlab/quantale.hpp"

namespace qlab {

// Q (x) R realized as the lattice of bi-ideals: down-closed subsets of the
// carrier product that contain the bottom cross and are closed under
// coordinatewise joins. Ordered by inclusion.
struct TensorQuantale {
  QPtr left;
  QPtr right;
  QPtr product;                 // the tensor as a quantale
  std::vector<Bitset> members;  // per carrier element, bits over |Q|*|R|
  std::vector<Idx> elem_;       // |Q|*|R| table: elementary tensor index
  SupMap embed_left;            // j_Q : Q -> Q(x)R,  a |-> a(x)top
  SupMap embed_right;           // j_R : R -> Q(x)R,  b |-> top(x)b

  Idx elem(Idx a, Idx b) const {
    return elem_[static_cast<size_t>(a) * right->size() + b];
  }
  bool pair_in(Idx t, Idx a, Idx b) const {
    return members[t].get(a * right->size() + b);
  }
  // maximal member pairs, the canonical join-of-elementary-tensors form
  std::vector<std::pair<Idx, Idx>> factorization(Idx t) const;
};

// Lattice-only tensor (multiplication of both factors ignored); the
// returned TensorQuantale carries a product table built from the factors.
TensorQuantale tensor_quantale(QPtr q, QPtr r, int cap = 4096);

SupMap symmetry_map(const TensorQuantale& qr, const TensorQuantale& rq);

QPtr opposite_quantale(QPtr q);

// Involution on Q(x)R induced by a pair of mutually inverse
// anti-homomorphisms; certified unique against the embedding diagram when
// Q is left-sided, R right-sided and both are semi-unital.
struct TensorInvolutionResult {
  std::vector<Idx> involution;
  bool diagram_commutes = false;
  bool unique_for_diagram = false;
};
TensorInvolutionResult tensor_involution(const TensorQuantale& t, const SupMap& theta_q,
                                         const SupMap& theta_r);

// L(Q) (x) R(Q) with the involution alpha(x)beta |-> beta'(x)alpha'.
struct TensoriallyInvolutive {
  Subquantale left_part;
  Subquantale right_part;
  TensorQuantale tensor;  // tensor.product carries the involution
};
TensoriallyInvolutive tensorially_involutive(QPtr q);

struct TensorPrimesReport {
  std::vector<Idx> brute_force;                  // primes of the product
  std::vector<Idx> from_formula;                 // (q (x) top) v (top (x) r)
  std::vector<std::array<Idx, 3>> factorization; // p, q, r
  bool agree = false;
  bool factors_unique = false;
};
TensorPrimesReport tensor_primes(const TensorQuantale& t);

}  // namespace qlab
