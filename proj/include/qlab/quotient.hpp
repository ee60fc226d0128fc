#pragma once

#include "qlab/tensor.hpp"

namespace qlab {

// A nucleus represented by its fixed-point set; c(a) is the least fixed
// point above a.
struct Nucleus {
  QPtr quantale;
  std::vector<Idx> fixed;    // sorted
  std::vector<Idx> closure;  // c(a) per element

  Idx c(Idx a) const { return closure[a]; }
  bool operator==(const Nucleus& o) const {
    return quantale.get() == o.quantale.get() && fixed == o.fixed;
  }
};

// Validates meet-closure, the implication-closure of the fixed set, and the
// pointwise nucleus laws.
Nucleus nucleus_from_fixed(QPtr q, std::vector<Idx> fixed);
Nucleus identity_nucleus(QPtr q);
Nucleus nucleus_of_hom(QPtr dom, const Quantale& cod, const std::vector<Idx>& h);

bool is_involutive_nucleus(const Nucleus& n);

struct QuotientQuantale {
  QPtr source;
  Nucleus nucleus;
  QPtr quotient;       // carrier = fixed points, named as in the source
  SupMap projection;   // source -> quotient
  std::vector<Idx> embed;  // quotient index -> source index
};

QuotientQuantale quotient_by(Nucleus n);

// Least nucleus c with c(f(x)) = c(g(x)) for all x; f, g are homomorphism
// tables src -> q. The result is certified maximal-fixed-set by one-element
// probes, and exhaustively for small carriers.
Nucleus least_coequalizing_nucleus(QPtr q, const Quantale& src, const std::vector<Idx>& f,
                                   const std::vector<Idx>& g);
QuotientQuantale coequalizer(QPtr q, const Quantale& src, const std::vector<Idx>& f,
                             const std::vector<Idx>& g);

// Universal property certificate: every hom out of q equalizing (f,g) into
// cod factors uniquely through the projection.
bool coequalizer_universal_property(const QuotientQuantale& quot, const Quantale& src,
                                    const std::vector<Idx>& f, const std::vector<Idx>& g,
                                    const Quantale& cod);

std::vector<Idx> induce_involution(const QuotientQuantale& quot);
QuotientQuantale with_induced_involution(QuotientQuantale quot);

struct Thm2Report {
  Nucleus straight;   // nucleus of the plain pair
  Nucleus twisted;    // nucleus of the theta-twisted pair
  bool nuclei_equal = false;
  bool straight_involutive = false;
  bool equivalence_holds = false;  // involutive <=> equal
};
Thm2Report coequalizer_involutivity_check(const TensorQuantale& t, const Quantale& src,
                                          const SupMap& q_left, const SupMap& q_right,
                                          const SupMap& theta_left, const SupMap& theta_right);

struct QuanticFrameReport {
  bool preconditions_ok = false;
  std::string failed_precondition;
  bool cond_idempotent_sided = false;   // (A)
  bool cond_hermitian_two_sided = false;  // (B)
  bool cond_pushout = false;            // (C)
  std::string witness;
  bool is_quantic_frame = false;
  // the machinery, exposed for downstream constructions
  std::shared_ptr<TensoriallyInvolutive> tensor;
  std::vector<Idx> comparison;          // tensor -> Q join-extension of beta * alpha
  Nucleus comparison_nucleus;
  Nucleus least_nucleus;
};
QuanticFrameReport quantic_frame_check(QPtr q);

struct PushoutSpectrumResult {
  QuotientQuantale quotient;   // quotient.quotient carries the involution
  std::shared_ptr<TensorQuantale> tensor;
  bool left_part_isomorphic = false;  // L(result) realized by the left factor
};
PushoutSpectrumResult spectrum_pushout(QPtr left, QPtr right, QPtr part, const SupMap& q_left,
                                       const SupMap& q_right, const SupMap& theta_left,
                                       const SupMap& theta_right);

struct Prop4Report {
  bool sided_products_nonzero = true;   // (a), vacuous when ideals have zero divisors
  bool ideal_part_zdf = false;
  bool projection_involutive = false;   // (b)
  bool adjoint_bijects_spectra = false; // (c)
  bool projection_bijects_spectra = false;  // (d)
  bool zero_divisor_equivalence = false;    // Q zdf <=> ideal part zdf
  bool phi_bijection = false;           // sigma(L(Q)) -> hermitian spectrum, q |-> q v q'
  std::vector<std::pair<Idx, Idx>> phi; // pairs (q, q v q')
};
Prop4Report prop4_suite(QPtr q);

}  // namespace qlab
