#include "qlab/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace qlab {

QPtr default_ambient() {
  static QPtr amb = enumerate_strictly_quantized().at(0);
  return amb;
}

std::vector<Idx> quantization_range(const Quantale& ambient) {
  std::vector<Idx> r;
  for (const char* n : {"bot", "b", "a_l", "a_r", "c", "top"})
    r.push_back(ambient.index_of(n));
  std::sort(r.begin(), r.end());
  return r;
}

Presheaf constant_presheaf(const QTopology& t, Idx value) {
  return Presheaf(t.points.size(), value);
}

Presheaf presheaf_join(const Quantale& amb, const Presheaf& f, const Presheaf& g) {
  Presheaf h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = amb.lat->join(f[i], g[i]);
  return h;
}

Presheaf presheaf_mult(const Quantale& amb, const Presheaf& f, const Presheaf& g) {
  Presheaf h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = amb.mult(f[i], g[i]);
  return h;
}

Presheaf presheaf_act(const Quantale& amb, const Presheaf& f, Idx alpha) {
  Presheaf h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = amb.mult(f[i], alpha);
  return h;
}

Presheaf presheaf_act_left(const Quantale& amb, Idx alpha, const Presheaf& f) {
  Presheaf h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = amb.mult(alpha, f[i]);
  return h;
}

Presheaf presheaf_inv(const Quantale& amb, const Presheaf& f) {
  Presheaf h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = amb.inv(f[i]);
  return h;
}

bool presheaf_leq(const Quantale& amb, const Presheaf& f, const Presheaf& g) {
  for (size_t i = 0; i < f.size(); ++i)
    if (!amb.lat->leq(f[i], g[i])) return false;
  return true;
}

bool presheaf_left_sided(const Quantale& amb, const Presheaf& f) {
  for (Idx v : f)
    if (!amb.lat->leq(amb.mult(amb.top(), v), v)) return false;
  return true;
}

bool presheaf_right_sided(const Quantale& amb, const Presheaf& f) {
  for (Idx v : f)
    if (!amb.lat->leq(amb.mult(v, amb.top()), v)) return false;
  return true;
}

QTopology generate_topology(std::vector<std::string> points, const std::vector<Presheaf>& subbase,
                            QPtr ambient, std::vector<Idx> range, bool involutive,
                            int cap) {
  if (involutive && !ambient->involutive())
    fail(ErrorKind::StructureMissing, "involutive topology needs an involutive ambient");
  std::sort(range.begin(), range.end());
  auto in_range = [&](const Presheaf& f) {
    for (Idx v : f)
      if (!std::binary_search(range.begin(), range.end(), v)) return false;
    return true;
  };
  if (!std::binary_search(range.begin(), range.end(), ambient->bottom()) ||
      !std::binary_search(range.begin(), range.end(), ambient->top()))
    fail(ErrorKind::StructureMissing, "range must contain the universal bounds");

  QTopology t;
  t.points = std::move(points);
  t.ambient = ambient;
  t.range = range;
  t.involutive = involutive;

  std::set<Presheaf> seen;
  std::vector<Presheaf> work;
  auto push = [&](Presheaf f) {
    if (!in_range(f))
      fail(ErrorKind::StructureMissing, "range is not closed under the topology operations");
    if (seen.insert(f).second) {
      if (static_cast<int>(seen.size()) > cap)
        fail(ErrorKind::SizeCapExceeded, "open-set count exceeds the cap");
      work.push_back(std::move(f));
    }
  };
  push(constant_presheaf(t, ambient->bottom()));
  push(constant_presheaf(t, ambient->top()));
  for (auto& f : subbase) {
    if (static_cast<int>(f.size()) != t.point_count())
      fail(ErrorKind::DomainMismatch, "subbase presheaf has the wrong arity");
    push(f);
  }
  while (!work.empty()) {
    Presheaf f = std::move(work.back());
    work.pop_back();
    for (int a = 0; a < ambient->size(); ++a) push(presheaf_act(*ambient, f, a));
    if (involutive) push(presheaf_inv(*ambient, f));
    std::vector<Presheaf> snapshot(seen.begin(), seen.end());
    for (auto& g : snapshot) {
      push(presheaf_join(*ambient, f, g));
      push(presheaf_mult(*ambient, f, g));
      push(presheaf_mult(*ambient, g, f));
    }
  }
  t.opens.assign(seen.begin(), seen.end());

  // the generator is not trusted: re-verify every closure property
  const Quantale& amb = *ambient;
  if (!t.is_open(constant_presheaf(t, amb.top())))
    fail(ErrorKind::InternalError, "constant top missing from the closure");
  for (auto& f : t.opens) {
    for (auto& g : t.opens) {
      if (!t.is_open(presheaf_join(amb, f, g)) || !t.is_open(presheaf_mult(amb, f, g)))
        fail(ErrorKind::InternalError, "closure is not closed under joins or products");
    }
    for (int a = 0; a < amb.size(); ++a)
      if (!t.is_open(presheaf_act(amb, f, a)))
        fail(ErrorKind::InternalError, "closure is not closed under the right action");
    if (involutive && !t.is_open(presheaf_inv(amb, f)))
      fail(ErrorKind::InternalError, "closure is not closed under the involution");
  }
  return t;
}

QPtr opens_quantale(const QTopology& t) {
  const Quantale& amb = *t.ambient;
  const int n = static_cast<int>(t.opens.size());
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    if (t.opens[i].empty()) {
      names[i] = "unit";
      continue;
    }
    std::string s;
    for (size_t k = 0; k < t.opens[i].size(); ++k) {
      if (k) s += ".";
      s += amb.name(t.opens[i][k]);
    }
    names[i] = s;
  }
  std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rel[static_cast<size_t>(i) * n + j] = presheaf_leq(amb, t.opens[i], t.opens[j]);
  LatPtr lat = validate_lattice_rel(std::move(names), std::move(rel));
  auto find = [&](const Presheaf& f) {
    auto it = std::lower_bound(t.opens.begin(), t.opens.end(), f);
    if (it == t.opens.end() || *it != f)
      fail(ErrorKind::InternalError, "pointwise operation left the opens");
    return static_cast<Idx>(it - t.opens.begin());
  };
  std::vector<Idx> mult(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mult[static_cast<size_t>(i) * n + j] = find(presheaf_mult(amb, t.opens[i], t.opens[j]));
  std::optional<std::vector<Idx>> invol;
  if (t.involutive) {
    invol.emplace(n);
    for (int i = 0; i < n; ++i) (*invol)[i] = find(presheaf_inv(amb, t.opens[i]));
  }
  return validate_quantale(lat, std::move(mult), std::nullopt, std::move(invol));
}

Presheaf interior(const QTopology& t, const Presheaf& f) {
  Presheaf acc = constant_presheaf(t, t.ambient->bottom());
  for (auto& g : t.opens)
    if (presheaf_leq(*t.ambient, g, f)) acc = presheaf_join(*t.ambient, acc, g);
  return acc;
}

Idx neighborhood(const QTopology& t, int x, const Presheaf& f) { return interior(t, f)[x]; }

namespace {

// iterate over all presheaves with values in `values`
template <typename F>
void for_all_presheaves(const std::vector<Idx>& values, int points, F&& fn) {
  if (points == 0) {
    fn(Presheaf{});
    return;
  }
  Presheaf f(points, values.empty() ? 0 : values[0]);
  std::vector<int> digit(points, 0);
  for (;;) {
    for (int i = 0; i < points; ++i) f[i] = values[digit[i]];
    fn(f);
    int k = 0;
    while (k < points && ++digit[k] == static_cast<int>(values.size())) digit[k++] = 0;
    if (k == points) break;
  }
}

}  // namespace

Lemma3Report lemma3_check(const QTopology& t, int sweep_cap) {
  const Quantale& amb = *t.ambient;
  if (!amb.involutive()) fail(ErrorKind::StructureMissing, "ambient carries no involution");
  Lemma3Report rep;
  rep.involutive_as_set = true;
  for (auto& f : t.opens)
    if (!t.is_open(presheaf_inv(amb, f))) rep.involutive_as_set = false;

  double total = 1;
  for (int i = 0; i < t.point_count(); ++i) total *= static_cast<double>(t.range.size());
  rep.interior_condition = true;
  auto check_one = [&](const Presheaf& f) {
    if (!rep.interior_condition) return;
    Presheaf lhs = presheaf_inv(amb, interior(t, f));
    Presheaf rhs = interior(t, presheaf_inv(amb, f));
    if (!presheaf_leq(amb, lhs, rhs)) {
      rep.interior_condition = false;
      std::string w = "f = (";
      for (size_t k = 0; k < f.size(); ++k) w += (k ? " " : "") + amb.name(f[k]);
      rep.witness = w + ")";
    }
  };
  if (total <= static_cast<double>(sweep_cap)) {
    for_all_presheaves(t.range, t.point_count(), check_one);
  } else {
    rep.exhaustive = false;
    std::mt19937_64 rng(qlab_seed());
    for (int it = 0; it < sweep_cap / 10; ++it) {
      Presheaf f(t.point_count());
      for (auto& v : f) v = t.range[rng() % t.range.size()];
      check_one(f);
    }
  }
  rep.agree = rep.involutive_as_set == rep.interior_condition;
  return rep;
}

SeparationReport separation_report(const QTopology& t) {
  const Quantale& amb = *t.ambient;
  const int n = t.point_count();
  SeparationReport rep;
  rep.t0 = rep.frechet = rep.hausdorff = rep.strong_t2 = true;
  std::vector<Presheaf> lefts, rights;
  for (auto& f : t.opens) {
    if (presheaf_left_sided(amb, f)) lefts.push_back(f);
    if (presheaf_right_sided(amb, f)) rights.push_back(f);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool distinguishable = false, escapes = false;
      for (auto& f : t.opens)
        if (f[x] != f[y]) distinguishable = true;
      for (auto& f : t.opens)
        if (!amb.lat->leq(f[x], f[y])) escapes = true;
      if (!distinguishable) rep.t0 = false;
      if (!escapes) rep.frechet = false;

      bool haus = false;
      for (auto& f1 : t.opens)
        for (auto& f2 : t.opens) {
          Idx lhs1 = amb.mult(f1[x], f2[y]);
          Idx lhs2 = amb.mult(f2[y], f1[x]);
          Idx b1 = amb.bottom(), b2 = amb.bottom();
          for (int z = 0; z < n; ++z) {
            b1 = amb.lat->join(b1, amb.mult(f1[z], f2[z]));
            b2 = amb.lat->join(b2, amb.mult(f2[z], f1[z]));
          }
          if (!amb.lat->leq(lhs1, b1) || !amb.lat->leq(lhs2, b2)) haus = true;
        }
      if (!haus) rep.hausdorff = false;

      bool strong = false;
      for (auto& f1 : lefts)
        for (auto& f2 : rights) {
          Idx lhs = amb.mult(f2[x], f1[y]);
          Idx bound = amb.bottom();
          for (int z = 0; z < n; ++z) bound = amb.lat->join(bound, amb.mult(f2[z], f1[z]));
          if (!amb.lat->leq(lhs, bound)) strong = true;
        }
      if (!strong) rep.strong_t2 = false;
    }
  return rep;
}

long presheaf_universe_size(const QTopology& t) {
  long total = 1;
  for (int i = 0; i < t.point_count(); ++i) {
    total *= t.ambient->size();
    if (total > 1000000) fail(ErrorKind::SizeCapExceeded, "presheaf universe too large");
  }
  return total;
}

long pack_presheaf(const Quantale& amb, const Presheaf& f) {
  long id = 0;
  for (size_t i = f.size(); i-- > 0;) id = id * amb.size() + f[i];
  return id;
}

Presheaf unpack_presheaf(const Quantale& amb, int points, long id) {
  Presheaf f(points);
  for (int i = 0; i < points; ++i) {
    f[i] = static_cast<Idx>(id % amb.size());
    id /= amb.size();
  }
  return f;
}

bool validate_qfilter(const QFilter& w, std::string* witness) {
  const Quantale& amb = *w.ambient;
  const long total = static_cast<long>(w.table.size());
  auto name_of = [&](long id) {
    Presheaf f = unpack_presheaf(amb, w.points, id);
    std::string s = "(";
    for (size_t k = 0; k < f.size(); ++k) s += (k ? " " : "") + amb.name(f[k]);
    return s + ")";
  };
  std::vector<Presheaf> all(total);
  for (long id = 0; id < total; ++id) all[id] = unpack_presheaf(amb, w.points, id);
  for (long i = 0; i < total; ++i)
    for (long j = 0; j < total; ++j)
      if (presheaf_leq(amb, all[i], all[j]) && !amb.lat->leq(w.table[i], w.table[j])) {
        if (witness) *witness = "isotonicity fails at " + name_of(i) + " <= " + name_of(j);
        return false;
      }
  for (long i = 0; i < total; ++i)
    for (int a = 0; a < amb.size(); ++a) {
      long j = pack_presheaf(amb, presheaf_act(amb, all[i], a));
      if (!amb.lat->leq(amb.mult(w.table[i], a), w.table[j])) {
        if (witness) *witness = "F0 fails at " + name_of(i) + " acted by '" + amb.name(a) + "'";
        return false;
      }
    }
  {
    long top_id = pack_presheaf(amb, Presheaf(w.points, amb.top()));
    if (w.table[top_id] != amb.top()) {
      if (witness) *witness = "F1 fails: the constant top is not sent to top";
      return false;
    }
  }
  for (long i = 0; i < total; ++i)
    for (long j = 0; j < total; ++j) {
      long k = pack_presheaf(amb, presheaf_mult(amb, all[i], all[j]));
      if (!amb.lat->leq(amb.mult(w.table[i], w.table[j]), w.table[k])) {
        if (witness) *witness = "F2 fails at " + name_of(i) + " , " + name_of(j);
        return false;
      }
    }
  for (long i = 0; i < total; ++i) {
    Idx bound = amb.bottom();
    for (Idx v : all[i]) bound = amb.lat->join(bound, v);
    if (!amb.lat->leq(w.table[i], bound)) {
      if (witness) *witness = "F3 fails at " + name_of(i);
      return false;
    }
  }
  return true;
}

std::pair<std::vector<int>, std::vector<int>> limits(const QFilter& w, const QTopology& t) {
  const Quantale& amb = *t.ambient;
  std::vector<int> left, right;
  const long total = static_cast<long>(w.table.size());
  for (int x = 0; x < t.point_count(); ++x) {
    bool is_left = true, is_right = true;
    for (long id = 0; id < total; ++id) {
      Presheaf f = unpack_presheaf(amb, w.points, id);
      bool ls = presheaf_left_sided(amb, f);
      bool rs = presheaf_right_sided(amb, f);
      if (!ls && !rs) continue;
      Idx nu = neighborhood(t, x, f);
      if (ls && !amb.lat->leq(nu, w.table[id])) is_left = false;
      if (rs && !amb.lat->leq(nu, w.table[id])) is_right = false;
      if (!is_left && !is_right) break;
    }
    if (is_left) left.push_back(x);
    if (is_right) right.push_back(x);
  }
  return {left, right};
}

QFilter proof_filter(const QTopology& t, int x, int y) {
  const Quantale& amb = *t.ambient;
  const long total = presheaf_universe_size(t);
  QFilter w;
  w.points = t.point_count();
  w.ambient = t.ambient;
  w.table.assign(total, amb.bottom());
  struct Pair {
    Presheaf prod;
    Idx value;
  };
  std::vector<Pair> pairs;
  for (auto& f : t.opens) {
    if (!presheaf_left_sided(amb, f)) continue;
    for (auto& g : t.opens) {
      if (!presheaf_right_sided(amb, g)) continue;
      pairs.push_back({presheaf_mult(amb, g, f), amb.mult(g[y], f[x])});
    }
  }
  for (long id = 0; id < total; ++id) {
    Presheaf h = unpack_presheaf(amb, w.points, id);
    Idx acc = amb.bottom();
    for (auto& p : pairs)
      if (presheaf_leq(amb, p.prod, h)) acc = amb.lat->join(acc, p.value);
    w.table[id] = acc;
  }
  return w;
}

QFilter coarsest_filter(const QTopology& t) {
  const Quantale& amb = *t.ambient;
  const long total = presheaf_universe_size(t);
  QFilter w;
  w.points = t.point_count();
  w.ambient = t.ambient;
  w.table.assign(total, amb.bottom());
  for (long id = 0; id < total; ++id) {
    Presheaf f = unpack_presheaf(amb, w.points, id);
    Idx acc = amb.bottom();
    for (Idx v : f) acc = amb.lat->join(acc, v);
    w.table[id] = acc;
  }
  return w;
}

QFilter point_filter(const QTopology& t, int x) {
  const Quantale& amb = *t.ambient;
  const long total = presheaf_universe_size(t);
  QFilter w;
  w.points = t.point_count();
  w.ambient = t.ambient;
  w.table.assign(total, amb.bottom());
  for (long id = 0; id < total; ++id)
    w.table[id] = neighborhood(t, x, unpack_presheaf(amb, w.points, id));
  return w;
}

ConvergenceReport convergence_theorem_check(const QTopology& t) {
  ConvergenceReport rep;
  rep.strong_t2 = separation_report(t).strong_t2;
  rep.unique_limits = true;
  // a filter with x as left limit and y as right limit exists precisely
  // when the canonical candidate for (x, y) is one, so scanning the
  // canonical candidates decides the property over all filters
  for (int x = 0; x < t.point_count(); ++x)
    for (int y = 0; y < t.point_count(); ++y) {
      if (x == y) continue;
      QFilter w = proof_filter(t, x, y);
      if (!validate_qfilter(w)) continue;
      auto [left, right] = limits(w, t);
      bool xl = std::find(left.begin(), left.end(), x) != left.end();
      bool yr = std::find(right.begin(), right.end(), y) != right.end();
      if (xl && yr) {
        rep.unique_limits = false;
        rep.witnesses.emplace_back(x, y);
      }
    }
  rep.agree = rep.strong_t2 == rep.unique_limits;
  return rep;
}

bool module_hom_check(const QTopology& t, const std::vector<Idx>& table) {
  const Quantale& amb = *t.ambient;
  if (table.size() != t.opens.size())
    fail(ErrorKind::DomainMismatch, "table size does not match the opens");
  for (size_t i = 0; i < t.opens.size(); ++i)
    for (int a = 0; a < amb.size(); ++a) {
      Presheaf fa = presheaf_act(amb, t.opens[i], a);
      auto it = std::lower_bound(t.opens.begin(), t.opens.end(), fa);
      if (it == t.opens.end() || *it != fa)
        fail(ErrorKind::InternalError, "opens are not module-closed");
      if (table[it - t.opens.begin()] != amb.mult(table[i], a)) return false;
    }
  return true;
}

SoberReport sober_check(const QTopology& t, const std::vector<Idx>& s_elems) {
  const Quantale& amb = *t.ambient;
  if (!amb.involutive() || !t.involutive)
    fail(ErrorKind::StructureMissing, "sobriety is defined for involutive topologies");
  auto in_s = [&](Idx v) { return std::binary_search(s_elems.begin(), s_elems.end(), v); };
  if (!in_s(amb.bottom()) || !in_s(amb.top()))
    fail(ErrorKind::StructureMissing, "the value subquantale must contain the bounds");
  for (Idx s : s_elems) {
    if (!in_s(amb.inv(s)))
      fail(ErrorKind::StructureMissing, "the value subquantale is not involutive");
    for (Idx u : s_elems)
      if (!in_s(amb.lat->join(s, u)) || !in_s(amb.mult(s, u)))
        fail(ErrorKind::StructureMissing, "the value set is not a subquantale");
    for (int a = 0; a < amb.size(); ++a)
      if (!in_s(amb.mult(s, a)))
        fail(ErrorKind::StructureMissing, "the value set is not a right submodule");
  }

  SoberReport rep;
  rep.t0 = separation_report(t).t0;
  QPtr tq = opens_quantale(t);
  const int n = tq->size();
  auto ji = join_irreducibles(*tq->lat);
  std::vector<Idx> assign(ji.size(), -1);
  std::vector<std::vector<Idx>> homs;

  auto open_index = [&](const Presheaf& f) {
    auto it = std::lower_bound(t.opens.begin(), t.opens.end(), f);
    return static_cast<Idx>(it - t.opens.begin());
  };
  auto leaf = [&]() {
    std::vector<Idx> k(n);
    for (int i = 0; i < n; ++i) {
      Idx acc = amb.bottom();
      for (size_t j = 0; j < ji.size(); ++j)
        if (tq->lat->leq(ji[j], i)) acc = amb.lat->join(acc, assign[j]);
      k[i] = acc;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (k[tq->lat->join(i, j)] != amb.lat->join(k[i], k[j])) return;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (k[open_index(presheaf_mult(amb, t.opens[i], t.opens[j]))] !=
            amb.mult(k[i], k[j]))
          return;
    if (k[open_index(constant_presheaf(t, amb.top()))] != amb.top()) return;
    for (int i = 0; i < n; ++i)
      if (k[open_index(presheaf_inv(amb, t.opens[i]))] != amb.inv(k[i])) return;
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < amb.size(); ++a)
        if (k[open_index(presheaf_act(amb, t.opens[i], a))] != amb.mult(k[i], a)) return;
    homs.push_back(std::move(k));
  };
  auto dfs = [&](auto&& self, size_t pos) -> void {
    if (pos == ji.size()) {
      leaf();
      return;
    }
    for (Idx v : s_elems) {
      bool ok = true;
      for (size_t p = 0; p < pos && ok; ++p) {
        if (tq->lat->leq(ji[p], ji[pos]) && !amb.lat->leq(assign[p], v)) ok = false;
        if (tq->lat->leq(ji[pos], ji[p]) && !amb.lat->leq(v, assign[p])) ok = false;
      }
      if (!ok) continue;
      assign[pos] = v;
      self(self, pos + 1);
    }
    assign[pos] = -1;
  };
  dfs(dfs, 0);

  rep.hom_count = static_cast<int>(homs.size());
  rep.sober = rep.t0;
  for (auto& k : homs) {
    int inducing = -1;
    for (int x = 0; x < t.point_count(); ++x) {
      bool match = true;
      for (int i = 0; i < n; ++i)
        if (k[i] != t.opens[i][x]) match = false;
      if (match) {
        if (inducing >= 0) rep.sober = false;
        inducing = x;
      }
    }
    if (inducing < 0) rep.sober = false;
    rep.inducing_points.push_back(inducing);
  }
  return rep;
}

SubmoduleReport submodules_of_q2() {
  SubmoduleReport rep;
  rep.ambient_independent = true;
  bool first = true;
  for (QPtr amb : enumerate_strictly_quantized()) {
    auto q2r = quantization_range(*amb);
    std::vector<std::vector<std::string>> mods;
    std::vector<bool> inv_flags;
    const int k = static_cast<int>(q2r.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<Idx> s;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) s.push_back(q2r[i]);
      auto in_s = [&](Idx v) { return std::binary_search(s.begin(), s.end(), v); };
      if (!in_s(amb->top()) || !in_s(amb->bottom())) continue;
      bool ok = true;
      for (Idx a : s)
        for (Idx b : s)
          if (!in_s(amb->lat->join(a, b))) ok = false;
      for (Idx a : s)
        for (int x = 0; x < amb->size() && ok; ++x)
          if (!in_s(amb->mult(a, x))) ok = false;
      if (!ok) continue;
      std::vector<std::string> names;
      for (Idx a : s) names.push_back(amb->name(a));
      std::sort(names.begin(), names.end());
      bool invol = true;
      for (Idx a : s)
        if (!in_s(amb->inv(a))) invol = false;
      mods.push_back(names);
      inv_flags.push_back(invol);
    }
    std::vector<int> order(mods.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (mods[a].size() != mods[b].size()) return mods[a].size() < mods[b].size();
      return mods[a] < mods[b];
    });
    std::vector<std::vector<std::string>> sorted_mods;
    std::vector<bool> sorted_inv;
    for (int i : order) {
      sorted_mods.push_back(mods[i]);
      sorted_inv.push_back(inv_flags[i]);
    }
    if (first) {
      rep.submodules = sorted_mods;
      rep.involutive = sorted_inv;
      first = false;
    } else if (rep.submodules != sorted_mods || rep.involutive != sorted_inv) {
      rep.ambient_independent = false;
    }
  }
  return rep;
}

namespace {

struct SpectralData {
  std::vector<Idx> spec;                 // points as source elements
  std::vector<std::vector<Idx>> h_tabs;  // per point: the map table into the ambient
};

SpectralData spectral_data(QPtr q, bool hermitian, const Quantale& amb) {
  QPtr q2 = catalog("q2");
  std::vector<Idx> to_amb(q2->size());
  for (int i = 0; i < q2->size(); ++i) to_amb[i] = amb.index_of(q2->name(i));
  SpectralData d;
  d.spec = hermitian ? hermitian_spectrum(*q) : strong_spectrum(*q);
  for (Idx p : d.spec) {
    SupMap h = h_p(q, p);
    std::vector<Idx> tab(q->size());
    for (int a = 0; a < q->size(); ++a) tab[a] = to_amb[h.table[a]];
    if (hermitian) {
      for (int a = 0; a < q->size(); ++a)
        if (amb.inv(tab[a]) != tab[q->inv(a)])
          fail(ErrorKind::InternalError, "hermitian prime induced a non-involutive map");
    }
    d.h_tabs.push_back(std::move(tab));
  }
  return d;
}

std::vector<Presheaf> distinct_sorted(std::vector<Presheaf> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TopologizationResult spectral_topology(QPtr q, bool hermitian, int cap) {
  if (hermitian && !q->involutive())
    fail(ErrorKind::NoInvolution, "hermitian topologization needs an involution");
  QPtr amb = default_ambient();
  SpectralData d = spectral_data(q, hermitian, *amb);

  TopologizationResult res;
  std::vector<std::string> points;
  for (Idx p : d.spec) points.push_back(q->name(p));
  const int np = static_cast<int>(points.size());

  std::vector<Presheaf> a_of(q->size(), Presheaf(np));
  for (int alpha = 0; alpha < q->size(); ++alpha)
    for (int i = 0; i < np; ++i) a_of[alpha][i] = d.h_tabs[i][alpha];
  res.generator_of = a_of;

  res.topology = generate_topology(points, a_of, amb, quantization_range(*amb), hermitian, cap);

  const Quantale& A = *amb;
  const Idx al = A.index_of("a_l"), ar = A.index_of("a_r");
  // published family forms, compared as generated sets
  std::set<Presheaf> family;
  if (!hermitian) {
    for (int alpha = 0; alpha < q->size(); ++alpha)
      for (int beta = 0; beta < q->size(); ++beta) {
        if (!is_right_sided_elem(*q, beta)) continue;
        family.insert(presheaf_join(A, a_of[alpha], presheaf_act(A, a_of[beta], al)));
      }
  } else {
    auto fam1 = distinct_sorted(a_of);
    std::vector<Presheaf> fam2, fam3, fam4;
    for (auto& f : fam1) {
      fam2.push_back(presheaf_act(A, f, al));
      fam3.push_back(presheaf_act_left(A, ar, f));
      fam4.push_back(presheaf_act(A, presheaf_act_left(A, ar, f), al));
    }
    fam2 = distinct_sorted(fam2);
    fam3 = distinct_sorted(fam3);
    fam4 = distinct_sorted(fam4);
    for (auto& f1 : fam1)
      for (auto& f2 : fam2)
        for (auto& f3 : fam3)
          for (auto& f4 : fam4)
            family.insert(
                presheaf_join(A, presheaf_join(A, f1, f2), presheaf_join(A, f3, f4)));
  }
  res.base_form_matches =
      family == std::set<Presheaf>(res.topology.opens.begin(), res.topology.opens.end());

  // generator map as a homomorphism into the opens
  res.phi_strong_hom = true;
  for (int x = 0; x < q->size(); ++x) {
    for (int y = 0; y < q->size(); ++y) {
      if (a_of[q->lat->join(x, y)] != presheaf_join(A, a_of[x], a_of[y]))
        res.phi_strong_hom = false;
      if (a_of[q->mult(x, y)] != presheaf_mult(A, a_of[x], a_of[y])) res.phi_strong_hom = false;
    }
    if (!res.topology.is_open(a_of[x])) res.phi_strong_hom = false;
  }
  if (a_of[q->top()] != constant_presheaf(res.topology, A.top())) res.phi_strong_hom = false;
  if (hermitian) {
    res.phi_involutive = true;
    for (int x = 0; x < q->size(); ++x)
      if (a_of[q->inv(x)] != presheaf_inv(A, a_of[x])) res.phi_involutive = false;
  }

  // named base: the single-generator terms of the published family
  std::set<Presheaf> taken;
  Presheaf bot_const = constant_presheaf(res.topology, A.bottom());
  auto add_base = [&](const std::string& name, const Presheaf& f) {
    if (f == bot_const) return;
    if (taken.insert(f).second) res.base.emplace_back(name, f);
  };
  for (int alpha = 0; alpha < q->size(); ++alpha)
    add_base("A[" + q->name(alpha) + "]", a_of[alpha]);
  if (!hermitian) {
    for (int beta = 0; beta < q->size(); ++beta)
      if (is_right_sided_elem(*q, beta))
        add_base("A[" + q->name(beta) + "]*a_l", presheaf_act(A, a_of[beta], al));
  } else {
    for (int alpha = 0; alpha < q->size(); ++alpha)
      add_base("A[" + q->name(alpha) + "]*a_l", presheaf_act(A, a_of[alpha], al));
    for (int alpha = 0; alpha < q->size(); ++alpha)
      add_base("a_r*A[" + q->name(alpha) + "]", presheaf_act_left(A, ar, a_of[alpha]));
    for (int alpha = 0; alpha < q->size(); ++alpha)
      add_base("a_r*A[" + q->name(alpha) + "]*a_l",
               presheaf_act(A, presheaf_act_left(A, ar, a_of[alpha]), al));
  }
  return res;
}

UQReport u_q_and_prop6(QPtr q, int cap) {
  UQReport rep;
  rep.strongly_spatial_by_definition = is_strongly_spatial(*q);

  QPtr c3 = catalog("c3l");
  auto t = tensor_quantale(q, c3, cap);
  const Idx a3 = c3->index_of("a"), top3 = c3->lat->top;
  auto u_elem = [&](Idx alpha, Idx beta) {
    return t.product->lat->join(t.elem(alpha, top3), t.elem(beta, a3));
  };
  std::vector<Idx> u_set;
  std::map<Idx, std::pair<Idx, Idx>> u_pair;
  for (int beta = 0; beta < q->size(); ++beta) {
    if (!is_right_sided_elem(*q, beta)) continue;
    for (int alpha = 0; alpha < q->size(); ++alpha) {
      if (!q->lat->leq(alpha, beta)) continue;
      Idx u = u_elem(alpha, beta);
      u_set.push_back(u);
      u_pair.emplace(u, std::make_pair(alpha, beta));
    }
  }
  std::sort(u_set.begin(), u_set.end());
  u_set.erase(std::unique(u_set.begin(), u_set.end()), u_set.end());
  Subquantale usub = make_subquantale(t.product, u_set, "custom");
  rep.u_size = static_cast<int>(u_set.size());

  rep.product_rule_matches = true;
  for (auto& [u1, p1] : u_pair)
    for (auto& [u2, p2] : u_pair) {
      Idx lhs = t.product->mult(u1, u2);
      Idx rhs = u_elem(q->mult(p1.second, p2.first), q->mult(p1.second, p2.second));
      if (lhs != rhs) rep.product_rule_matches = false;
    }

  TopologizationResult st = spectral_topology(q, false);
  QPtr tq = opens_quantale(st.topology);
  rep.topology_size = tq->size();
  bool iso = quantale_isomorphism(*tq, *usub.quantale).has_value();

  bool injective_hom = false;
  // the canonical candidate from the strongly spatial case first
  {
    std::vector<Idx> phi(q->size());
    bool defined = true;
    for (int alpha = 0; alpha < q->size(); ++alpha) {
      Idx beta = q->mult(alpha, q->top());
      if (!q->lat->leq(alpha, beta)) {
        defined = false;
        break;
      }
      auto it = std::lower_bound(u_set.begin(), u_set.end(), u_elem(alpha, beta));
      phi[alpha] = static_cast<Idx>(it - u_set.begin());
    }
    if (defined && hom_check(*q, *usub.quantale, phi, HomKind::StrongHom)) {
      std::set<Idx> img(phi.begin(), phi.end());
      if (img.size() == phi.size()) injective_hom = true;
    }
  }
  if (!injective_hom) {
    for (auto& h : enumerate_homs(*q, *usub.quantale, {.strong = true})) {
      std::set<Idx> img(h.begin(), h.end());
      if (img.size() == h.size()) {
        injective_hom = true;
        break;
      }
    }
  }
  rep.criterion = iso && injective_hom;
  rep.agree = rep.criterion == rep.strongly_spatial_by_definition;
  return rep;
}

FrameTopologization quantic_frame_topologize(QPtr q_in, int cap) {
  QuanticFrameReport frame = quantic_frame_check(q_in);
  if (!frame.is_quantic_frame)
    fail(ErrorKind::NotAQuanticFrame,
         frame.preconditions_ok ? "pushout conditions fail"
                                : "precondition fails: " + frame.failed_precondition);
  QPtr q = frame.tensor->left_part.parent;
  const Subquantale& lpart = frame.tensor->left_part;
  const Subquantale& rpart = frame.tensor->right_part;

  FrameTopologization out;
  out.source = q;
  for (Idx p : spectrum(*lpart.quantale)) out.y_points.push_back(lpart.elements[p]);

  auto herm = hermitian_spectrum(*q);
  out.phi_bijective = true;
  std::set<Idx> phi_img;
  for (Idx p : out.y_points) {
    Idx v = q->lat->join(p, q->inv(p));
    out.phi.emplace_back(p, v);
    phi_img.insert(v);
    if (!std::binary_search(herm.begin(), herm.end(), v)) out.phi_bijective = false;
  }
  if (phi_img.size() != out.y_points.size() ||
      phi_img != std::set<Idx>(herm.begin(), herm.end()))
    out.phi_bijective = false;

  QPtr amb = default_ambient();
  const Quantale& A = *amb;
  QPtr q2 = catalog("q2");
  std::vector<Idx> to_amb(q2->size());
  for (int i = 0; i < q2->size(); ++i) to_amb[i] = A.index_of(q2->name(i));
  const Idx al = A.index_of("a_l"), ar = A.index_of("a_r");
  const int np = static_cast<int>(out.y_points.size());

  std::map<Idx, std::vector<Idx>> h_phi;  // per hermitian prime: the map table
  for (auto& [p, v] : out.phi)
    if (!h_phi.count(v)) {
      SupMap h = h_p(q, v);
      std::vector<Idx> tab(q->size());
      for (int a = 0; a < q->size(); ++a) tab[a] = to_amb[h.table[a]];
      h_phi[v] = tab;
    }

  const int nl = static_cast<int>(lpart.elements.size());
  const int nr = static_cast<int>(rpart.elements.size());
  std::vector<Presheaf> b_of(static_cast<size_t>(nl) * nr, Presheaf(np));
  out.routes_agree = true;
  for (int ia = 0; ia < nl; ++ia)
    for (int ib = 0; ib < nr; ++ib) {
      Idx alpha = lpart.elements[ia], beta = rpart.elements[ib];
      Presheaf& b = b_of[static_cast<size_t>(ia) * nr + ib];
      for (int i = 0; i < np; ++i) {
        Idx p = out.y_points[i];
        Idx pprime = q->inv(p);
        // route 1: evaluate the composite at the image of the tensor
        Idx r1 = h_phi[out.phi[i].second][q->mult(beta, alpha)];
        // route 2: the five-case form over the left part
        Idx bprime = q->inv(beta);
        Idx r2;
        bool c1 = q->lat->leq(q->mult(bprime, q->top()), p);
        bool c2 = q->lat->leq(q->mult(alpha, q->top()), p);
        bool ab = q->lat->leq(q->mult(alpha, bprime), p);
        bool ba = q->lat->leq(q->mult(bprime, alpha), p);
        if (c1 || c2)
          r2 = A.bottom();
        else if (ab && ba)
          r2 = A.index_of("b");
        else if (!ab && ba)
          r2 = al;
        else if (ab && !ba)
          r2 = ar;
        else
          r2 = A.top();
        // route 3: the split three-case maps on the sided parts
        Idx hl, hr;
        if (q->lat->leq(q->mult(alpha, q->top()), p))
          hl = A.bottom();
        else if (q->lat->leq(alpha, p))
          hl = al;
        else
          hl = A.top();
        if (q->lat->leq(q->mult(q->top(), beta), pprime))
          hr = A.bottom();
        else if (q->lat->leq(beta, pprime))
          hr = ar;
        else
          hr = A.top();
        Idx r3 = A.mult(hr, hl);
        if (r1 != r2 || r2 != r3) out.routes_agree = false;
        b[i] = r1;
      }
    }

  std::vector<std::string> point_names;
  for (Idx p : out.y_points) point_names.push_back(q->name(p));
  out.result.topology = generate_topology(point_names, b_of, amb, quantization_range(A), true, cap);
  out.result.generator_of = b_of;

  // transported topology must coincide with the generated one
  {
    TopologizationResult hx = spectral_topology(q, true);
    auto x_names = hx.topology.points;
    std::vector<int> pos(np);
    for (int i = 0; i < np; ++i) {
      Idx v = out.phi[i].second;
      auto it = std::find(x_names.begin(), x_names.end(), q->name(v));
      if (it == x_names.end()) fail(ErrorKind::InternalError, "transport point missing");
      pos[i] = static_cast<int>(it - x_names.begin());
    }
    std::set<Presheaf> transported;
    for (auto& f : hx.topology.opens) {
      Presheaf g(np);
      for (int i = 0; i < np; ++i) g[i] = f[pos[i]];
      transported.insert(g);
    }
    if (transported != std::set<Presheaf>(out.result.topology.opens.begin(),
                                          out.result.topology.opens.end()))
      fail(ErrorKind::InternalError, "transported topology differs from the generated one");
  }

  // the four-term family equals the topology
  auto fam1 = distinct_sorted(b_of);
  std::vector<Presheaf> fam2, fam3, fam4;
  for (auto& f : fam1) {
    fam2.push_back(presheaf_act(A, f, al));
    fam3.push_back(presheaf_act_left(A, ar, f));
    fam4.push_back(presheaf_act(A, presheaf_act_left(A, ar, f), al));
  }
  fam2 = distinct_sorted(fam2);
  fam3 = distinct_sorted(fam3);
  fam4 = distinct_sorted(fam4);
  std::set<Presheaf> family;
  for (auto& f1 : fam1)
    for (auto& f2 : fam2)
      for (auto& f3 : fam3)
        for (auto& f4 : fam4)
          family.insert(presheaf_join(A, presheaf_join(A, f1, f2), presheaf_join(A, f3, f4)));
  out.result.base_form_matches = family == std::set<Presheaf>(
      out.result.topology.opens.begin(), out.result.topology.opens.end());

  // named base: the single terms of the four families
  std::set<Presheaf> taken;
  Presheaf bot_const = constant_presheaf(out.result.topology, A.bottom());
  auto add_base = [&](const std::string& name, const Presheaf& f) {
    if (f == bot_const) return;
    if (taken.insert(f).second) out.result.base.emplace_back(name, f);
  };
  auto bname = [&](int ia, int ib) {
    return "B[" + q->name(lpart.elements[ia]) + "(x)" + q->name(rpart.elements[ib]) + "]";
  };
  for (int ia = 0; ia < nl; ++ia)
    for (int ib = 0; ib < nr; ++ib)
      add_base(bname(ia, ib), b_of[static_cast<size_t>(ia) * nr + ib]);
  for (int ia = 0; ia < nl; ++ia)
    for (int ib = 0; ib < nr; ++ib)
      add_base(bname(ia, ib) + "*a_l",
               presheaf_act(A, b_of[static_cast<size_t>(ia) * nr + ib], al));
  for (int ia = 0; ia < nl; ++ia)
    for (int ib = 0; ib < nr; ++ib)
      add_base("a_r*" + bname(ia, ib),
               presheaf_act_left(A, ar, b_of[static_cast<size_t>(ia) * nr + ib]));
  for (int ia = 0; ia < nl; ++ia)
    for (int ib = 0; ib < nr; ++ib)
      add_base("a_r*" + bname(ia, ib) + "*a_l",
               presheaf_act(A, presheaf_act_left(A, ar, b_of[static_cast<size_t>(ia) * nr + ib]),
                            al));
  return out;
}

Prop8Report prop8_suite(QPtr q_in) {
  FrameTopologization ft = quantic_frame_topologize(q_in);
  QPtr q = ft.source;
  Subquantale lpart = sided_subquantale(q, 'L');
  Subquantale rpart = sided_subquantale(q, 'R');
  Subquantale ipart = sided_subquantale(q, 'I');
  if (!is_spatial(*lpart.quantale))
    fail(ErrorKind::HypothesisFailed, "the left part must be spatial");
  const Quantale& A = *ft.result.topology.ambient;
  const Idx al = A.index_of("a_l");
  const int nl = static_cast<int>(lpart.elements.size());
  const int nr = static_cast<int>(rpart.elements.size());
  auto b_at = [&](int ia, int ib) -> const Presheaf& {
    return ft.result.generator_of[static_cast<size_t>(ia) * nr + ib];
  };

  Prop8Report rep;
  rep.equality_criterion = true;
  for (int ia1 = 0; ia1 < nl; ++ia1)
    for (int ib1 = 0; ib1 < nr; ++ib1)
      for (int ia2 = 0; ia2 < nl; ++ia2)
        for (int ib2 = 0; ib2 < nr; ++ib2) {
          Idx a1 = lpart.elements[ia1], b1 = q->inv(rpart.elements[ib1]);
          Idx a2 = lpart.elements[ia2], b2 = q->inv(rpart.elements[ib2]);
          bool same = b_at(ia1, ib1) == b_at(ia2, ib2);
          bool crit = q->mult(b1, a1) == q->mult(b2, a2) && q->mult(a1, b1) == q->mult(a2, b2);
          if (same != crit) rep.equality_criterion = false;
        }

  auto pos_in = [&](const std::vector<Idx>& v, Idx x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    return static_cast<int>(it - v.begin());
  };
  int rtop = pos_in(rpart.elements, q->top());
  rep.normal_forms_unique = true;
  for (auto& f : ft.result.topology.opens) {
    if (!presheaf_left_sided(A, f)) continue;
    std::string s = "(";
    for (size_t k = 0; k < f.size(); ++k) s += (k ? " " : "") + A.name(f[k]);
    rep.left_sided_opens.push_back(s + ")");
    int count = 0;
    for (int ia = 0; ia < nl; ++ia)
      for (Idx g : ipart.elements) {
        Idx alpha = lpart.elements[ia];
        if (!q->lat->leq(alpha, g)) continue;
        int ig = pos_in(lpart.elements, g);
        Presheaf cand = presheaf_join(A, b_at(ia, rtop), presheaf_act(A, b_at(ig, rtop), al));
        if (cand == f) count++;
      }
    if (count != 1) rep.normal_forms_unique = false;
  }

  PropertyReport pr = property_report(*q);
  if (pr.get("factor")) {
    QPtr tq = opens_quantale(ft.result.topology);
    Presheaf alc = constant_presheaf(ft.result.topology, al);
    std::vector<Idx> keep;
    for (int v = 0; v < tq->size(); ++v) {
      if (!is_left_sided_elem(*tq, v)) continue;
      if (ft.result.topology.opens[v] == alc) continue;
      keep.push_back(v);
    }
    bool ok = true;
    try {
      Subquantale sub = make_subquantale(tq, keep, "custom");
      ok = quantale_isomorphism(*sub.quantale, *lpart.quantale).has_value();
    } catch (const qlab_error&) {
      ok = false;
    }
    rep.left_part_matches = ok;
  }
  return rep;
}

std::vector<std::vector<Idx>> reduced_subsets(QPtr q_in) {
  QuanticFrameReport frame = quantic_frame_check(q_in);
  if (!frame.is_quantic_frame) fail(ErrorKind::NotAQuanticFrame, "not a quantic frame");
  QPtr q = frame.tensor->left_part.parent;
  auto ml = maximal_sided_primality_check(*q).max_left;
  Subquantale lpart = sided_subquantale(q, 'L');
  auto lpos = [&](Idx x) {
    auto it = std::lower_bound(lpart.elements.begin(), lpart.elements.end(), x);
    return static_cast<Idx>(it - lpart.elements.begin());
  };
  std::vector<std::vector<Idx>> out;
  const int m = static_cast<int>(ml.size());
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<Idx> c;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) c.push_back(ml[i]);
    bool reduced = true;
    for (Idx alpha : c) {
      Idx acc = lpart.quantale->lat->top;
      for (Idx beta : c)
        if (beta != alpha) acc = lpart.quantale->lat->meet(acc, lpos(beta));
      Idx acc_parent = lpart.elements[acc];
      if (q->lat->leq(acc_parent, alpha)) reduced = false;
    }
    if (reduced) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool prop9_check(QPtr q_in, const std::vector<Idx>& c) {
  FrameTopologization ft = quantic_frame_topologize(q_in);
  QPtr q = ft.source;
  if (c.empty()) fail(ErrorKind::NotReduced, "the subset must be nonempty");
  auto reduced = reduced_subsets(q_in);
  {
    std::vector<Idx> sorted_c = c;
    std::sort(sorted_c.begin(), sorted_c.end());
    if (std::find(reduced.begin(), reduced.end(), sorted_c) == reduced.end())
      fail(ErrorKind::NotReduced, "the subset is not reduced");
  }
  std::vector<int> where;
  std::vector<std::string> names;
  for (Idx alpha : c) {
    auto it = std::find(ft.y_points.begin(), ft.y_points.end(), alpha);
    if (it == ft.y_points.end())
      fail(ErrorKind::InternalError, "maximal left-sided element is not a spectrum point");
    where.push_back(static_cast<int>(it - ft.y_points.begin()));
    names.push_back(q->name(alpha));
  }
  QTopology sub = subspace(ft.result.topology, where, names);
  bool strong = separation_report(sub).strong_t2;
  if (c.size() < 2) return strong;

  // the published witnesses separate every ordered pair
  Subquantale lpart = sided_subquantale(q, 'L');
  Subquantale rpart = sided_subquantale(q, 'R');
  const Quantale& A = *sub.ambient;
  auto lpos = [&](Idx x) {
    auto it = std::lower_bound(lpart.elements.begin(), lpart.elements.end(), x);
    return static_cast<Idx>(it - lpart.elements.begin());
  };
  auto rpos = [&](Idx x) {
    auto it = std::lower_bound(rpart.elements.begin(), rpart.elements.end(), x);
    return static_cast<Idx>(it - rpart.elements.begin());
  };
  const int nr = static_cast<int>(rpart.elements.size());
  auto meet_without = [&](Idx skip) {
    Idx acc = lpart.quantale->lat->top;
    for (Idx o : c)
      if (o != skip) acc = lpart.quantale->lat->meet(acc, lpos(o));
    return lpart.elements[acc];
  };
  bool witnesses_ok = true;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) {
      if (i == j) continue;
      Idx beta1 = meet_without(c[i]);
      Idx beta2 = meet_without(c[j]);
      const Presheaf& f1full =
          ft.result.generator_of[static_cast<size_t>(lpos(beta1)) * nr + rpos(q->top())];
      const Presheaf& f2full =
          ft.result.generator_of[static_cast<size_t>(lpos(q->top())) * nr +
                                 rpos(q->inv(beta2))];
      Presheaf f1(c.size()), f2(c.size());
      for (size_t k = 0; k < c.size(); ++k) {
        f1[k] = f1full[where[k]];
        f2[k] = f2full[where[k]];
      }
      if (!presheaf_left_sided(A, f1) || !presheaf_right_sided(A, f2)) witnesses_ok = false;
      Idx lhs = A.mult(f2[j], f1[i]);
      Idx bound = A.bottom();
      for (size_t z = 0; z < c.size(); ++z) bound = A.lat->join(bound, A.mult(f2[z], f1[z]));
      if (A.lat->leq(lhs, bound)) witnesses_ok = false;
    }
  return strong && witnesses_ok;
}

QTopology subspace(const QTopology& t, const std::vector<int>& injection,
                   std::vector<std::string> new_points) {
  std::set<int> img(injection.begin(), injection.end());
  if (img.size() != injection.size())
    fail(ErrorKind::NotInjective, "subspace map repeats a point");
  for (int x : injection)
    if (x < 0 || x >= t.point_count()) fail(ErrorKind::UnknownElement, "point out of range");
  if (new_points.size() != injection.size())
    fail(ErrorKind::DomainMismatch, "point name count mismatch");
  QTopology sub;
  sub.points = std::move(new_points);
  sub.ambient = t.ambient;
  sub.range = t.range;
  sub.involutive = t.involutive;
  std::set<Presheaf> opens;
  for (auto& f : t.opens) {
    Presheaf g(injection.size());
    for (size_t k = 0; k < injection.size(); ++k) g[k] = f[injection[k]];
    opens.insert(g);
  }
  sub.opens.assign(opens.begin(), opens.end());
  // relative topologies stay closed under the axioms; re-verify
  const Quantale& amb = *t.ambient;
  for (auto& f : sub.opens) {
    for (auto& g : sub.opens)
      if (!sub.is_open(presheaf_join(amb, f, g)) || !sub.is_open(presheaf_mult(amb, f, g)))
        fail(ErrorKind::InternalError, "relative topology not closed");
    for (int a = 0; a < amb.size(); ++a)
      if (!sub.is_open(presheaf_act(amb, f, a)))
        fail(ErrorKind::InternalError, "relative topology not module-closed");
    if (sub.involutive && !sub.is_open(presheaf_inv(amb, f)))
      fail(ErrorKind::InternalError, "relative topology not involution-closed");
  }
  return sub;
}

}  // namespace qlab
