#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlab/core.hpp"

namespace qlab {

// A finite complete lattice. Element identity is the position in `names`;
// the input order fixes all iteration and report order.
struct FiniteLattice {
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq_;  // n*n, row-major: leq_[a*n+b] iff a <= b
  std::vector<Idx> join_;          // n*n binary join table
  std::vector<Idx> meet_;          // n*n binary meet table
  Idx bottom = -1;
  Idx top = -1;

  int size() const { return static_cast<int>(names.size()); }
  bool leq(Idx a, Idx b) const { return leq_[static_cast<size_t>(a) * names.size() + b]; }
  Idx join(Idx a, Idx b) const { return join_[static_cast<size_t>(a) * names.size() + b]; }
  Idx meet(Idx a, Idx b) const { return meet_[static_cast<size_t>(a) * names.size() + b]; }

  Idx join_all(std::span<const Idx> s) const;  // empty -> bottom
  Idx meet_all(std::span<const Idx> s) const;  // empty -> top

  Idx index_of(const std::string& name) const;  // UnknownElement if missing
  std::optional<Idx> find(const std::string& name) const;

  bool covers(Idx a, Idx b) const;  // b covers a (a < b, nothing between)
  std::vector<std::pair<Idx, Idx>> hasse_edges() const;
};

using LatPtr = std::shared_ptr<const FiniteLattice>;

// Builds a lattice from an arbitrary relation (Hasse edges allowed); the
// reflexive-transitive closure is applied before checking.
LatPtr validate_lattice(std::vector<std::string> carrier,
                        const std::vector<std::pair<std::string, std::string>>& leq_pairs);
LatPtr validate_lattice_rel(std::vector<std::string> carrier, std::vector<std::uint8_t> rel);

Idx lattice_join(const FiniteLattice& l, const std::vector<std::string>& subset);
Idx lattice_meet(const FiniteLattice& l, const std::vector<std::string>& subset);

// Test oracle: checks that every subset up to the cap has a least upper and
// greatest lower bound realized by join_all/meet_all.
bool check_all_subset_bounds(const FiniteLattice& l, int max_carrier = 12);

// A join-preserving map between finite lattices.
struct SupMap {
  LatPtr dom;
  LatPtr cod;
  std::vector<Idx> table;

  Idx operator()(Idx a) const { return table[a]; }
};

SupMap validate_supmap(LatPtr dom, LatPtr cod, std::vector<Idx> table);
SupMap validate_supmap(LatPtr dom, LatPtr cod,
                       const std::vector<std::pair<std::string, std::string>>& table);

// h^|-(b) = join{a : f(a) <= b}; satisfies f(a) <= b iff a <= h^|-(b).
std::vector<Idx> right_adjoint(const SupMap& f);

// compose(f, g) = f after g; requires g.cod == f.dom.
SupMap compose(const SupMap& f, const SupMap& g);
SupMap identity_supmap(LatPtr l);
bool is_isomorphism(const SupMap& f);

bool is_join_preserving_table(const FiniteLattice& dom, const FiniteLattice& cod,
                              const std::vector<Idx>& table, std::string* witness = nullptr);

// Elements that are not joins of strictly smaller elements; bottom excluded.
std::vector<Idx> join_irreducibles(const FiniteLattice& l);

// Join-closed down-sets (each as a sorted index list), used by the model
// search for unit adjunction.
std::vector<std::vector<Idx>> lattice_ideals(const FiniteLattice& l);

// Induced lattice on a join-closed subset containing bottom and top of the
// ambient order restriction; meets are recomputed inside the subset.
LatPtr sublattice(const FiniteLattice& parent, const std::vector<Idx>& elems);

std::optional<std::vector<Idx>> lattice_isomorphism(const FiniteLattice& a,
                                                    const FiniteLattice& b);

}  // namespace qlab
