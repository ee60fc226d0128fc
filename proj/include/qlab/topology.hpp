#pragma once

#include "qlab/quotient.hpp"

namespace qlab {

using Presheaf = std::vector<Idx>;  // one ambient element index per point

// A set of presheaves closed under the topology axioms: contains the
// constant top, all joins, the right action of the ambient, pointwise
// products, and (when involutive) the pointwise involution.
struct QTopology {
  std::vector<std::string> points;
  QPtr ambient;             // unital; involutive when the topology is
  std::vector<Idx> range;   // sorted ambient indices the opens take values in
  std::vector<Presheaf> opens;  // sorted
  bool involutive = false;

  int point_count() const { return static_cast<int>(points.size()); }
  bool is_open(const Presheaf& f) const {
    return std::binary_search(opens.begin(), opens.end(), f);
  }
};

// The default strictly quantized ambient and the copy of the quantization
// inside it (shared element names).
QPtr default_ambient();
std::vector<Idx> quantization_range(const Quantale& ambient);

Presheaf constant_presheaf(const QTopology& t, Idx value);
Presheaf presheaf_join(const Quantale& amb, const Presheaf& f, const Presheaf& g);
Presheaf presheaf_mult(const Quantale& amb, const Presheaf& f, const Presheaf& g);
Presheaf presheaf_act(const Quantale& amb, const Presheaf& f, Idx alpha);   // f * alpha
Presheaf presheaf_act_left(const Quantale& amb, Idx alpha, const Presheaf& f);
Presheaf presheaf_inv(const Quantale& amb, const Presheaf& f);
bool presheaf_leq(const Quantale& amb, const Presheaf& f, const Presheaf& g);
bool presheaf_left_sided(const Quantale& amb, const Presheaf& f);
bool presheaf_right_sided(const Quantale& amb, const Presheaf& f);

QTopology generate_topology(std::vector<std::string> points, const std::vector<Presheaf>& subbase,
                            QPtr ambient, std::vector<Idx> range, bool involutive,
                            int cap = 20000);

// The opens as a quantale under the pointwise operations; elements named by
// their value tuples.
QPtr opens_quantale(const QTopology& t);

Presheaf interior(const QTopology& t, const Presheaf& f);
Idx neighborhood(const QTopology& t, int x, const Presheaf& f);

struct Lemma3Report {
  bool involutive_as_set = false;
  bool interior_condition = false;  // I(f)' <= I(f') over the swept universe
  bool agree = false;
  bool exhaustive = true;
  std::string witness;
};
Lemma3Report lemma3_check(const QTopology& t, int sweep_cap = 200000);

struct SeparationReport {
  bool t0 = false;
  bool frechet = false;
  bool hausdorff = false;
  bool strong_t2 = false;
};
SeparationReport separation_report(const QTopology& t);

// Filters are tables over the full presheaf universe of the ambient; only
// small point sets are representable.
struct QFilter {
  int points = 0;
  QPtr ambient;
  std::vector<Idx> table;  // indexed by packed presheaf id
};

long presheaf_universe_size(const QTopology& t);
long pack_presheaf(const Quantale& amb, const Presheaf& f);
Presheaf unpack_presheaf(const Quantale& amb, int points, long id);

bool validate_qfilter(const QFilter& w, std::string* witness = nullptr);
// left and right limit point sets
std::pair<std::vector<int>, std::vector<int>> limits(const QFilter& w, const QTopology& t);
QFilter proof_filter(const QTopology& t, int x, int y);
QFilter coarsest_filter(const QTopology& t);  // f |-> join of its values
QFilter point_filter(const QTopology& t, int x);

struct ConvergenceReport {
  bool strong_t2 = false;
  bool unique_limits = false;
  bool agree = false;
  // ordered point pairs witnessing a filter with distinct left/right limits
  std::vector<std::pair<int, int>> witnesses;
};
ConvergenceReport convergence_theorem_check(const QTopology& t);

struct SoberReport {
  bool t0 = false;
  bool sober = false;
  int hom_count = 0;
  std::vector<int> inducing_points;
};
// S is a sorted subset of ambient indices forming an involutive subquantale
// and right submodule; homomorphisms out of the opens are enumerated.
SoberReport sober_check(const QTopology& t, const std::vector<Idx>& s_elems);

// K(f * alpha) = K(f) * alpha for every open f and ambient element alpha.
bool module_hom_check(const QTopology& t, const std::vector<Idx>& table);

struct SubmoduleReport {
  std::vector<std::vector<std::string>> submodules;  // element names, sorted
  std::vector<bool> involutive;
  bool ambient_independent = false;
};
SubmoduleReport submodules_of_q2();

struct TopologizationResult {
  QTopology topology;
  std::vector<std::pair<std::string, Presheaf>> base;  // named generators
  std::vector<Presheaf> generator_of;  // per source element: its presheaf
  bool base_form_matches = false;      // published family = generated closure
  bool phi_strong_hom = false;         // generator map is a strong homomorphism
  bool phi_involutive = false;
};
TopologizationResult spectral_topology(QPtr q, bool hermitian, int cap = 20000);

struct UQReport {
  bool strongly_spatial_by_definition = false;
  bool criterion = false;
  bool agree = false;
  bool product_rule_matches = false;
  int u_size = 0;
  int topology_size = 0;
};
UQReport u_q_and_prop6(QPtr q, int cap = 4096);

struct FrameTopologization {
  TopologizationResult result;
  std::vector<Idx> y_points;             // spectrum of the left part (parent indices)
  std::vector<std::pair<Idx, Idx>> phi;  // p |-> p v p'
  bool phi_bijective = false;
  bool routes_agree = false;  // the three evaluation routes for the basics
  QPtr source;                // involution-equipped quantic frame
};
FrameTopologization quantic_frame_topologize(QPtr q, int cap = 20000);

struct Prop8Report {
  bool equality_criterion = false;   // (a)
  bool normal_forms_unique = false;  // (b)
  bool left_part_matches = false;    // (c), factors only
  std::vector<std::string> left_sided_opens;
};
Prop8Report prop8_suite(QPtr q);

std::vector<std::vector<Idx>> reduced_subsets(QPtr q);  // subsets of ML(Q), parent indices
bool prop9_check(QPtr q, const std::vector<Idx>& c);

QTopology subspace(const QTopology& t, const std::vector<int>& injection,
                   std::vector<std::string> new_points);

}  // namespace qlab
