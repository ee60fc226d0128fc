#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlab/lattice.hpp"

namespace qlab {

struct Quantale {
  LatPtr lat;
  std::vector<Idx> mult_;  // n*n, row = left factor
  std::optional<Idx> unit;
  std::optional<std::vector<Idx>> invol;

  int size() const { return lat->size(); }
  Idx mult(Idx a, Idx b) const { return mult_[static_cast<size_t>(a) * lat->size() + b]; }
  Idx inv(Idx a) const { return (*invol)[a]; }
  bool involutive() const { return invol.has_value(); }
  Idx bottom() const { return lat->bottom; }
  Idx top() const { return lat->top; }
  const std::string& name(Idx a) const { return lat->names[a]; }
  Idx index_of(const std::string& s) const { return lat->index_of(s); }
};

using QPtr = std::shared_ptr<const Quantale>;

QPtr validate_quantale(LatPtr lat, std::vector<Idx> mult, std::optional<Idx> unit = std::nullopt,
                       std::optional<std::vector<Idx>> invol = std::nullopt);

// (alpha leftimp beta, alpha rightimp beta): the largest gamma with
// gamma*beta <= alpha, resp. alpha*gamma <= beta.
std::pair<Idx, Idx> implications(const Quantale& q, Idx alpha, Idx beta);
Idx left_implication(const Quantale& q, Idx alpha, Idx beta);
Idx right_implication(const Quantale& q, Idx alpha, Idx beta);

bool is_dualizing(const Quantale& q, Idx delta);

struct PropertyReport {
  // insertion-ordered flag list for deterministic reports
  std::vector<std::pair<std::string, bool>> flags;
  bool get(const std::string& k) const;
};

PropertyReport property_report(const Quantale& q);
// The implication lattice between flags (unital => semi-unital, ...).
bool property_implications_ok(const PropertyReport& r, std::string* witness = nullptr);

bool is_left_sided_elem(const Quantale& q, Idx a);
bool is_right_sided_elem(const Quantale& q, Idx a);
bool is_two_sided_elem(const Quantale& q, Idx a);
bool is_hermitian_elem(const Quantale& q, Idx a);

struct Subquantale {
  QPtr parent;
  std::string role;            // "L", "R", "I" or "custom"
  std::vector<Idx> elements;   // sorted parent indices
  QPtr quantale;               // induced structure on the subset
  SupMap inclusion;            // quantale -> parent
};

Subquantale sided_subquantale(QPtr q, char which);
Subquantale make_subquantale(QPtr q, std::vector<Idx> elements, std::string role);

bool is_prime(const Quantale& q, Idx p);
bool is_strongly_prime(const Quantale& q, Idx p);
std::vector<Idx> spectrum(const Quantale& q);
std::vector<Idx> strong_spectrum(const Quantale& q);
std::vector<Idx> hermitian_spectrum(const Quantale& q);
bool is_spatial(const Quantale& q);
bool is_strongly_spatial(const Quantale& q);

struct MaximalSidedReport {
  std::vector<Idx> max_left;   // ML(Q)
  std::vector<Idx> max_right;
  bool all_prime = false;
};
MaximalSidedReport maximal_sided_primality_check(const Quantale& q);

// Adds a fresh idempotent top; the old top becomes prime and two-sided.
QPtr semi_unitalization(const Quantale& q);

QPtr endomorphism_quantale(LatPtr l, int cap = 4096);

bool lemma1_absorption_check(const Quantale& q);

struct ZeroDivisorReport {
  bool ideal_free = false;  // I(Q)
  bool left_free = false;   // L(Q)
  bool right_free = false;  // R(Q)
  bool whole_free = false;  // Q
  bool implications_hold = false;
  std::string witness;
};
ZeroDivisorReport zero_divisor_checks(QPtr q);

bool has_zero_divisors(const Quantale& q);

std::vector<std::vector<Idx>> find_involutions(const Quantale& q);
std::vector<std::vector<Idx>> lattice_automorphisms(const FiniteLattice& l);

enum class HomKind { Hom, StrongHom, AntiHom, InvolutiveHom };

bool hom_check(const Quantale& dom, const Quantale& cod, const std::vector<Idx>& table,
               HomKind kind, std::string* witness = nullptr);

struct HomOptions {
  bool strong = false;
  bool involutive = false;
  bool anti = false;
};
// All quantale homomorphisms dom -> cod (backtracking over join-irreducibles).
std::vector<std::vector<Idx>> enumerate_homs(const Quantale& dom, const Quantale& cod,
                                             HomOptions opt = {});

// The six-case strong homomorphism into q2 attached to a strongly prime p;
// non-semi-unital quantales are routed through the semi-unitalization.
SupMap h_p(QPtr q, Idx p);
std::vector<std::vector<Idx>> strong_homs_to_q2(QPtr q);

QPtr catalog(const std::string& name);
const std::vector<std::string>& catalog_names();
std::vector<QPtr> enumerate_strictly_quantized();

std::optional<std::vector<Idx>> quantale_isomorphism(const Quantale& a, const Quantale& b,
                                                     bool match_involution = false);
std::vector<std::vector<Idx>> quantale_automorphisms(const Quantale& q);

}  // namespace qlab
