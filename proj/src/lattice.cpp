#include "qlab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace qlab {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotJoinPreserving: return "NotJoinPreserving";
    case ErrorKind::BottomNotPreserved: return "BottomNotPreserved";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotBimorphic: return "NotBimorphic";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::BadInvolution: return "BadInvolution";
    case ErrorKind::NoInvolution: return "NoInvolution";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NotSemiIntegral: return "NotSemiIntegral";
    case ErrorKind::NotSemiUnital: return "NotSemiUnital";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::StructureMissing: return "StructureMissing";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::InconsistentExtension: return "InconsistentExtension";
    case ErrorKind::Eq22Violated: return "Eq22Violated";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotHoms: return "NotHoms";
    case ErrorKind::NucleusNotInvolutive: return "NucleusNotInvolutive";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotAQuanticFrame: return "NotAQuanticFrame";
    case ErrorKind::NotAFilter: return "NotAFilter";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptySpectrum: return "EmptySpectrum";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "UnknownError";
}

unsigned long qlab_seed() {
  if (const char* s = std::getenv("QLAB_SEED")) return std::strtoul(s, nullptr, 10);
  return 0;
}

Idx FiniteLattice::join_all(std::span<const Idx> s) const {
  Idx acc = bottom;
  for (Idx x : s) acc = join(acc, x);
  return acc;
}

Idx FiniteLattice::meet_all(std::span<const Idx> s) const {
  Idx acc = top;
  for (Idx x : s) acc = meet(acc, x);
  return acc;
}

Idx FiniteLattice::index_of(const std::string& name) const {
  auto f = find(name);
  if (!f) fail(ErrorKind::UnknownElement, "no element named '" + name + "'");
  return *f;
}

std::optional<Idx> FiniteLattice::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

bool FiniteLattice::covers(Idx a, Idx b) const {
  if (a == b || !leq(a, b)) return false;
  for (int z = 0; z < size(); ++z)
    if (z != a && z != b && leq(a, z) && leq(z, b)) return false;
  return true;
}

std::vector<std::pair<Idx, Idx>> FiniteLattice::hasse_edges() const {
  std::vector<std::pair<Idx, Idx>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (covers(a, b)) out.emplace_back(a, b);
  return out;
}

LatPtr validate_lattice_rel(std::vector<std::string> carrier, std::vector<std::uint8_t> rel) {
  const int n = static_cast<int>(carrier.size());
  if (n == 0) fail(ErrorKind::NoBounds, "empty carrier has no universal bounds");
  {
    std::set<std::string> seen;
    for (auto& s : carrier)
      if (!seen.insert(s).second)
        fail(ErrorKind::NotAPoset, "duplicate element name '" + s + "'");
  }
  auto at = [&](Idx a, Idx b) -> std::uint8_t& { return rel[static_cast<size_t>(a) * n + b]; };
  for (int i = 0; i < n; ++i) at(i, i) = 1;
  // reflexive-transitive closure (Warshall)
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (at(i, k))
        for (int j = 0; j < n; ++j)
          if (at(k, j)) at(i, j) = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (at(a, b) && at(b, a))
        fail(ErrorKind::NotAPoset,
             "antisymmetry fails between '" + carrier[a] + "' and '" + carrier[b] + "'");

  auto lat = std::make_shared<FiniteLattice>();
  lat->names = std::move(carrier);
  lat->leq_ = std::move(rel);
  lat->join_.assign(static_cast<size_t>(n) * n, -1);
  lat->meet_.assign(static_cast<size_t>(n) * n, -1);

  auto bound = [&](Idx a, Idx b, bool upper) -> Idx {
    // least element of the set of common upper (resp. lower) bounds
    std::vector<Idx> cand;
    for (int z = 0; z < n; ++z) {
      bool ok = upper ? (lat->leq(a, z) && lat->leq(b, z)) : (lat->leq(z, a) && lat->leq(z, b));
      if (ok) cand.push_back(z);
    }
    for (Idx z : cand) {
      bool extremal = true;
      for (Idx w : cand) {
        bool cmp = upper ? lat->leq(z, w) : lat->leq(w, z);
        if (!cmp) { extremal = false; break; }
      }
      if (extremal) return z;
    }
    return -1;
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Idx j = bound(a, b, true);
      if (j < 0)
        fail(ErrorKind::NotALattice,
             "pair ('" + lat->names[a] + "','" + lat->names[b] + "') has no least upper bound");
      Idx m = bound(a, b, false);
      if (m < 0)
        fail(ErrorKind::NotALattice,
             "pair ('" + lat->names[a] + "','" + lat->names[b] + "') has no greatest lower bound");
      lat->join_[static_cast<size_t>(a) * n + b] = j;
      lat->meet_[static_cast<size_t>(a) * n + b] = m;
    }

  for (int z = 0; z < n; ++z) {
    bool below_all = true, above_all = true;
    for (int w = 0; w < n; ++w) {
      if (!lat->leq(z, w)) below_all = false;
      if (!lat->leq(w, z)) above_all = false;
    }
    if (below_all) lat->bottom = z;
    if (above_all) lat->top = z;
  }
  if (lat->bottom < 0 || lat->top < 0) fail(ErrorKind::NoBounds, "no global top/bottom");
  return lat;
}

LatPtr validate_lattice(std::vector<std::string> carrier,
                        const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  const int n = static_cast<int>(carrier.size());
  std::map<std::string, Idx> pos;
  for (int i = 0; i < n; ++i) pos[carrier[i]] = i;
  std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
  for (auto& [a, b] : leq_pairs) {
    auto ia = pos.find(a), ib = pos.find(b);
    if (ia == pos.end()) fail(ErrorKind::UnknownElement, "no element named '" + a + "'");
    if (ib == pos.end()) fail(ErrorKind::UnknownElement, "no element named '" + b + "'");
    rel[static_cast<size_t>(ia->second) * n + ib->second] = 1;
  }
  return validate_lattice_rel(std::move(carrier), std::move(rel));
}

static std::vector<Idx> indices_of(const FiniteLattice& l, const std::vector<std::string>& subset) {
  std::vector<Idx> out;
  out.reserve(subset.size());
  for (auto& s : subset) out.push_back(l.index_of(s));
  return out;
}

Idx lattice_join(const FiniteLattice& l, const std::vector<std::string>& subset) {
  auto idx = indices_of(l, subset);
  return l.join_all(idx);
}

Idx lattice_meet(const FiniteLattice& l, const std::vector<std::string>& subset) {
  auto idx = indices_of(l, subset);
  return l.meet_all(idx);
}

bool check_all_subset_bounds(const FiniteLattice& l, int max_carrier) {
  const int n = l.size();
  if (n > max_carrier) return true;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Idx> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(i);
    Idx j = l.join_all(sub);
    Idx m = l.meet_all(sub);
    for (Idx x : sub)
      if (!l.leq(x, j) || !l.leq(m, x)) return false;
    for (int z = 0; z < n; ++z) {
      bool ub = true, lb = true;
      for (Idx x : sub) {
        if (!l.leq(x, z)) ub = false;
        if (!l.leq(z, x)) lb = false;
      }
      if (ub && !l.leq(j, z)) return false;
      if (lb && !l.leq(z, m)) return false;
    }
  }
  return true;
}

bool is_join_preserving_table(const FiniteLattice& dom, const FiniteLattice& cod,
                              const std::vector<Idx>& table, std::string* witness) {
  if (table[dom.bottom] != cod.bottom) {
    if (witness) *witness = "bottom maps to '" + cod.names[table[dom.bottom]] + "'";
    return false;
  }
  for (int a = 0; a < dom.size(); ++a)
    for (int b = 0; b < dom.size(); ++b) {
      if (table[dom.join(a, b)] != cod.join(table[a], table[b])) {
        if (witness) *witness = "('" + dom.names[a] + "','" + dom.names[b] + "')";
        return false;
      }
    }
  return true;
}

SupMap validate_supmap(LatPtr dom, LatPtr cod, std::vector<Idx> table) {
  if (static_cast<int>(table.size()) != dom->size())
    fail(ErrorKind::DomainMismatch, "table size does not match domain carrier");
  for (Idx v : table)
    if (v < 0 || v >= cod->size()) fail(ErrorKind::UnknownElement, "table value out of range");
  if (table[dom->bottom] != cod->bottom)
    fail(ErrorKind::BottomNotPreserved,
         "bottom maps to '" + cod->names[table[dom->bottom]] + "'");
  std::string w;
  if (!is_join_preserving_table(*dom, *cod, table, &w))
    fail(ErrorKind::NotJoinPreserving, "join not preserved at pair " + w);
  return SupMap{std::move(dom), std::move(cod), std::move(table)};
}

SupMap validate_supmap(LatPtr dom, LatPtr cod,
                       const std::vector<std::pair<std::string, std::string>>& table) {
  std::vector<Idx> t(dom->size(), -1);
  for (auto& [a, b] : table) t[dom->index_of(a)] = cod->index_of(b);
  for (int i = 0; i < dom->size(); ++i)
    if (t[i] < 0)
      fail(ErrorKind::UnknownElement, "no image given for '" + dom->names[i] + "'");
  return validate_supmap(std::move(dom), std::move(cod), std::move(t));
}

std::vector<Idx> right_adjoint(const SupMap& f) {
  const auto& dom = *f.dom;
  const auto& cod = *f.cod;
  std::vector<Idx> adj(cod.size());
  for (int b = 0; b < cod.size(); ++b) {
    Idx acc = dom.bottom;
    for (int a = 0; a < dom.size(); ++a)
      if (cod.leq(f.table[a], b)) acc = dom.join(acc, a);
    adj[b] = acc;
  }
  return adj;
}

SupMap compose(const SupMap& f, const SupMap& g) {
  if (g.cod.get() != f.dom.get())
    fail(ErrorKind::DomainMismatch, "compose: codomain of inner map is not domain of outer map");
  std::vector<Idx> t(g.dom->size());
  for (int a = 0; a < g.dom->size(); ++a) t[a] = f.table[g.table[a]];
  return SupMap{g.dom, f.cod, std::move(t)};
}

SupMap identity_supmap(LatPtr l) {
  std::vector<Idx> t(l->size());
  std::iota(t.begin(), t.end(), 0);
  return SupMap{l, l, std::move(t)};
}

bool is_isomorphism(const SupMap& f) {
  if (f.dom->size() != f.cod->size()) return false;
  std::vector<int> hit(f.cod->size(), 0);
  for (Idx v : f.table) hit[v]++;
  for (int h : hit)
    if (h != 1) return false;
  std::vector<Idx> inv(f.cod->size());
  for (int a = 0; a < f.dom->size(); ++a) inv[f.table[a]] = a;
  return is_join_preserving_table(*f.cod, *f.dom, inv);
}

std::vector<Idx> join_irreducibles(const FiniteLattice& l) {
  std::vector<Idx> out;
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom) continue;
    Idx acc = l.bottom;
    for (int y = 0; y < l.size(); ++y)
      if (y != x && l.leq(y, x)) acc = l.join(acc, y);
    if (acc != x) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<Idx>> lattice_ideals(const FiniteLattice& l) {
  // Grow ideals by DFS over which elements are included, keeping the
  // down-closure + binary-join-closure invariant via a closure step.
  std::set<std::vector<Idx>> seen;
  std::vector<std::vector<Idx>> out;
  auto closure = [&](Bitset s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < l.size(); ++a) {
        if (!s.get(a)) continue;
        for (int b = 0; b < l.size(); ++b) {
          if (b != a && l.leq(b, a) && !s.get(b)) { s.set(b); changed = true; }
          if (s.get(b)) {
            Idx j = l.join(a, b);
            if (!s.get(j)) { s.set(j); changed = true; }
          }
        }
      }
    }
    return s;
  };
  std::vector<Bitset> work;
  Bitset base(l.size());
  base.set(l.bottom);
  work.push_back(base);
  while (!work.empty()) {
    Bitset cur = work.back();
    work.pop_back();
    std::vector<Idx> key;
    for (int i = 0; i < l.size(); ++i)
      if (cur.get(i)) key.push_back(i);
    if (!seen.insert(key).second) continue;
    out.push_back(key);
    for (int x = 0; x < l.size(); ++x) {
      if (cur.get(x)) continue;
      Bitset next = cur;
      next.set(x);
      work.push_back(closure(next));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

LatPtr sublattice(const FiniteLattice& parent, const std::vector<Idx>& elems) {
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (Idx e : elems) names.push_back(parent.names[e]);
  const int n = static_cast<int>(elems.size());
  std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      rel[static_cast<size_t>(a) * n + b] = parent.leq(elems[a], elems[b]);
  return validate_lattice_rel(std::move(names), std::move(rel));
}

namespace {

// Iterative invariant refinement shared by the order-isomorphism search.
std::vector<long> order_colors(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<long> col(n, 0);
  std::vector<int> up(n, 0), down(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && l.leq(a, b)) { up[a]++; down[b]++; }
  for (int a = 0; a < n; ++a) col[a] = up[a] * 1009 + down[a];
  for (int round = 0; round < 4; ++round) {
    std::vector<long> next(n, 0);
    for (int a = 0; a < n; ++a) {
      long h = col[a] * 31 + 7;
      for (int b = 0; b < n; ++b) {
        if (l.leq(a, b)) h += col[b] * 131;
        if (l.leq(b, a)) h += col[b] * 257;
      }
      next[a] = h;
    }
    col = next;
  }
  return col;
}

bool extend_order_iso(const FiniteLattice& a, const FiniteLattice& b, std::vector<Idx>& map,
                      std::vector<char>& used, int pos, const std::vector<int>& order,
                      const std::vector<long>& ca, const std::vector<long>& cb) {
  if (pos == a.size()) return true;
  int x = order[pos];
  for (int y = 0; y < b.size(); ++y) {
    if (used[y] || ca[x] != cb[y]) continue;
    bool ok = true;
    for (int p = 0; p < pos && ok; ++p) {
      int u = order[p];
      if (a.leq(x, u) != b.leq(y, map[u])) ok = false;
      if (a.leq(u, x) != b.leq(map[u], y)) ok = false;
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = 1;
    if (extend_order_iso(a, b, map, used, pos + 1, order, ca, cb)) return true;
    used[y] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Idx>> lattice_isomorphism(const FiniteLattice& a,
                                                    const FiniteLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ca = order_colors(a), cb = order_colors(b);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  // most-constrained-first: rare colors early
  std::map<long, int> freq;
  for (long c : ca) freq[c]++;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[ca[x]] != freq[ca[y]]) return freq[ca[x]] < freq[ca[y]];
    return x < y;
  });
  std::vector<Idx> map(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  if (extend_order_iso(a, b, map, used, 0, order, ca, cb)) return map;
  return std::nullopt;
}

}  // namespace qlab
