#include "qlab/quantale.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace qlab {

QPtr validate_quantale(LatPtr lat, std::vector<Idx> mult, std::optional<Idx> unit,
                       std::optional<std::vector<Idx>> invol) {
  const int n = lat->size();
  if (static_cast<int>(mult.size()) != n * n)
    fail(ErrorKind::DomainMismatch, "multiplication table size mismatch");
  for (Idx v : mult)
    if (v < 0 || v >= n) fail(ErrorKind::UnknownElement, "multiplication value out of range");
  auto m = [&](Idx a, Idx b) { return mult[static_cast<size_t>(a) * n + b]; };
  auto nm = [&](Idx a) -> const std::string& { return lat->names[a]; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          fail(ErrorKind::NotAssociative,
               "witness ('" + nm(a) + "','" + nm(b) + "','" + nm(c) + "')");

  for (int x = 0; x < n; ++x) {
    if (m(lat->bottom, x) != lat->bottom || m(x, lat->bottom) != lat->bottom)
      fail(ErrorKind::NotBimorphic, "bottom not absorbed at '" + nm(x) + "'");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (m(lat->join(a, b), x) != lat->join(m(a, x), m(b, x)))
          fail(ErrorKind::NotBimorphic,
               "left joins fail at ('" + nm(a) + "','" + nm(b) + "','" + nm(x) + "')");
        if (m(x, lat->join(a, b)) != lat->join(m(x, a), m(x, b)))
          fail(ErrorKind::NotBimorphic,
               "right joins fail at ('" + nm(a) + "','" + nm(b) + "','" + nm(x) + "')");
      }
  }

  if (unit) {
    if (*unit < 0 || *unit >= n) fail(ErrorKind::BadUnit, "unit out of range");
    for (int x = 0; x < n; ++x)
      if (m(*unit, x) != x || m(x, *unit) != x)
        fail(ErrorKind::BadUnit, "'" + nm(*unit) + "' is not a unit at '" + nm(x) + "'");
  }

  if (invol) {
    if (static_cast<int>(invol->size()) != n)
      fail(ErrorKind::BadInvolution, "involution table size mismatch");
    std::string w;
    if (!is_join_preserving_table(*lat, *lat, *invol, &w))
      fail(ErrorKind::BadInvolution, "involution not join-preserving at " + w);
    for (int a = 0; a < n; ++a)
      if ((*invol)[(*invol)[a]] != a)
        fail(ErrorKind::BadInvolution, "not an involution at '" + nm(a) + "'");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((*invol)[m(a, b)] != m((*invol)[b], (*invol)[a]))
          fail(ErrorKind::BadInvolution,
               "anti-homomorphism fails at ('" + nm(a) + "','" + nm(b) + "')");
  }

  auto q = std::make_shared<Quantale>();
  q->lat = std::move(lat);
  q->mult_ = std::move(mult);
  q->unit = unit;
  q->invol = std::move(invol);
  return q;
}

Idx left_implication(const Quantale& q, Idx alpha, Idx beta) {
  Idx acc = q.bottom();
  for (int g = 0; g < q.size(); ++g)
    if (q.lat->leq(q.mult(g, beta), alpha)) acc = q.lat->join(acc, g);
  return acc;
}

Idx right_implication(const Quantale& q, Idx alpha, Idx beta) {
  Idx acc = q.bottom();
  for (int g = 0; g < q.size(); ++g)
    if (q.lat->leq(q.mult(alpha, g), beta)) acc = q.lat->join(acc, g);
  return acc;
}

std::pair<Idx, Idx> implications(const Quantale& q, Idx alpha, Idx beta) {
  return {left_implication(q, alpha, beta), right_implication(q, alpha, beta)};
}

bool is_dualizing(const Quantale& q, Idx delta) {
  for (int a = 0; a < q.size(); ++a) {
    if (left_implication(q, delta, right_implication(q, a, delta)) != a) return false;
    if (right_implication(q, left_implication(q, delta, a), delta) != a) return false;
  }
  return true;
}

bool is_left_sided_elem(const Quantale& q, Idx a) { return q.lat->leq(q.mult(q.top(), a), a); }
bool is_right_sided_elem(const Quantale& q, Idx a) { return q.lat->leq(q.mult(a, q.top()), a); }
bool is_two_sided_elem(const Quantale& q, Idx a) {
  return is_left_sided_elem(q, a) && is_right_sided_elem(q, a);
}
bool is_hermitian_elem(const Quantale& q, Idx a) { return q.involutive() && q.inv(a) == a; }

bool is_prime(const Quantale& q, Idx p) {
  if (p == q.top()) return false;
  const Idx t = q.top();
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (q.lat->leq(q.mult(a, b), p) && !q.lat->leq(q.mult(a, t), p) &&
          !q.lat->leq(q.mult(t, b), p))
        return false;
  return true;
}

bool is_strongly_prime(const Quantale& q, Idx p) {
  if (!is_prime(q, p)) return false;
  const Idx t = q.top();
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      if (!q.lat->leq(q.mult(a, b), p)) continue;
      bool la = q.lat->leq(q.lat->join(a, q.mult(a, t)), p);
      bool rb = q.lat->leq(q.lat->join(b, q.mult(t, b)), p);
      if (!la && !rb) return false;
    }
  return true;
}

std::vector<Idx> spectrum(const Quantale& q) {
  std::vector<Idx> out;
  for (int p = 0; p < q.size(); ++p)
    if (is_prime(q, p)) out.push_back(p);
  return out;
}

std::vector<Idx> strong_spectrum(const Quantale& q) {
  std::vector<Idx> out;
  for (int p = 0; p < q.size(); ++p)
    if (is_strongly_prime(q, p)) out.push_back(p);
  return out;
}

std::vector<Idx> hermitian_spectrum(const Quantale& q) {
  if (!q.involutive()) fail(ErrorKind::NoInvolution, "hermitian spectrum needs an involution");
  std::vector<Idx> out;
  for (Idx p : strong_spectrum(q))
    if (q.inv(p) == p) out.push_back(p);
  return out;
}

namespace {

bool meet_of_set_covers(const Quantale& q, const std::vector<Idx>& ps) {
  for (int a = 0; a < q.size(); ++a) {
    Idx acc = q.top();
    for (Idx p : ps)
      if (q.lat->leq(a, p)) acc = q.lat->meet(acc, p);
    if (acc != a) return false;
  }
  return true;
}

}  // namespace

bool is_spatial(const Quantale& q) { return meet_of_set_covers(q, spectrum(q)); }
bool is_strongly_spatial(const Quantale& q) { return meet_of_set_covers(q, strong_spectrum(q)); }

bool PropertyReport::get(const std::string& k) const {
  for (auto& [name, v] : flags)
    if (name == k) return v;
  fail(ErrorKind::UnknownName, "no property flag '" + k + "'");
}

PropertyReport property_report(const Quantale& q) {
  const int n = q.size();
  const Idx t = q.top();
  auto all = [&](auto pred) {
    for (int a = 0; a < n; ++a)
      if (!pred(a)) return false;
    return true;
  };
  bool balanced = q.mult(t, t) == t;
  bool unital = q.unit.has_value();
  if (!unital) {
    for (int e = 0; e < n && !unital; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = q.mult(e, x) == x && q.mult(x, e) == x;
      unital = ok;
    }
  }
  bool semi_unital =
      all([&](Idx a) { return q.lat->leq(a, q.mult(t, a)) && q.lat->leq(a, q.mult(a, t)); });
  bool semi_integral = true;
  for (int a = 0; a < n && semi_integral; ++a)
    for (int b = 0; b < n && semi_integral; ++b)
      if (!q.lat->leq(q.mult(q.mult(a, t), b), q.mult(a, b))) semi_integral = false;
  bool bisym = true;
  for (int a = 0; a < n && bisym; ++a)
    for (int b1 = 0; b1 < n && bisym; ++b1)
      for (int b2 = 0; b2 < n && bisym; ++b2) {
        Idx l = q.mult(a, q.mult(b1, b2));
        Idx r = q.mult(a, q.mult(b2, b1));
        if (l == r) continue;
        for (int c = 0; c < n; ++c)
          if (q.mult(l, c) != q.mult(r, c)) { bisym = false; break; }
      }
  bool idem = all([&](Idx a) { return q.mult(a, a) == a; });
  bool pre_idem = all([&](Idx a) { return q.lat->leq(a, q.mult(a, a)); });
  bool left_sided = all([&](Idx a) { return is_left_sided_elem(q, a); });
  bool right_sided = all([&](Idx a) { return is_right_sided_elem(q, a); });
  bool commutative = true;
  for (int a = 0; a < n && commutative; ++a)
    for (int b = 0; b < n; ++b)
      if (q.mult(a, b) != q.mult(b, a)) { commutative = false; break; }
  bool factor = true;
  for (int a = 0; a < n; ++a)
    if (is_two_sided_elem(q, a) && a != q.bottom() && a != t) factor = false;
  bool zdf = !has_zero_divisors(q);
  bool involutive = q.involutive() || !find_involutions(q).empty();
  bool spatial = is_spatial(q);
  bool strongly_spatial = is_strongly_spatial(q);

  PropertyReport r;
  r.flags = {{"balanced", balanced},
             {"unital", unital},
             {"semi-unital", semi_unital},
             {"semi-integral", semi_integral},
             {"bisymmetric", bisym},
             {"idempotent", idem},
             {"pre-idempotent", pre_idem},
             {"left-sided", left_sided},
             {"right-sided", right_sided},
             {"two-sided", left_sided && right_sided},
             {"commutative", commutative},
             {"factor", factor},
             {"zero-divisor-free", zdf},
             {"involutive", involutive},
             {"spatial", spatial},
             {"strongly-spatial", strongly_spatial}};
  return r;
}

bool property_implications_ok(const PropertyReport& r, std::string* witness) {
  auto imp = [&](const char* a, const char* b) {
    if (r.get(a) && !r.get(b)) {
      if (witness) *witness = std::string(a) + " => " + b;
      return false;
    }
    return true;
  };
  return imp("unital", "semi-unital") && imp("pre-idempotent", "semi-unital") &&
         imp("semi-unital", "balanced") && imp("left-sided", "semi-integral") &&
         imp("right-sided", "semi-integral") && imp("idempotent", "pre-idempotent") &&
         (!r.get("strongly-spatial") ||
          (r.get("semi-unital") && r.get("pre-idempotent") && r.get("spatial"))) &&
         imp("strongly-spatial", "spatial");
}

Subquantale make_subquantale(QPtr q, std::vector<Idx> elements, std::string role) {
  std::sort(elements.begin(), elements.end());
  // join-closure inside the parent (the monomorphism condition)
  for (Idx a : elements)
    for (Idx b : elements) {
      Idx j = q->lat->join(a, b);
      if (!std::binary_search(elements.begin(), elements.end(), j))
        fail(ErrorKind::NotALattice, "subset not closed under joins at ('" + q->name(a) + "','" +
                                         q->name(b) + "')");
      Idx p = q->mult(a, b);
      if (!std::binary_search(elements.begin(), elements.end(), p))
        fail(ErrorKind::InconsistentExtension, "subset not closed under product at ('" +
                                                   q->name(a) + "','" + q->name(b) + "')");
    }
  if (!std::binary_search(elements.begin(), elements.end(), q->bottom()))
    fail(ErrorKind::NoBounds, "subset misses the bottom element");
  LatPtr sub = sublattice(*q->lat, elements);
  const int k = static_cast<int>(elements.size());
  std::vector<Idx> pos(q->size(), -1);
  for (int i = 0; i < k; ++i) pos[elements[i]] = i;
  std::vector<Idx> mult(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mult[static_cast<size_t>(i) * k + j] = pos[q->mult(elements[i], elements[j])];
  std::optional<std::vector<Idx>> invol;
  if (q->involutive()) {
    bool closed = true;
    for (Idx a : elements)
      if (pos[q->inv(a)] < 0) closed = false;
    if (closed) {
      invol.emplace(k);
      for (int i = 0; i < k; ++i) (*invol)[i] = pos[q->inv(elements[i])];
    }
  }
  QPtr inner = validate_quantale(sub, std::move(mult), std::nullopt, std::move(invol));
  std::vector<Idx> incl(k);
  for (int i = 0; i < k; ++i) incl[i] = elements[i];
  SupMap inclusion = validate_supmap(inner->lat, q->lat, std::move(incl));
  return Subquantale{std::move(q), std::move(role), std::move(elements), std::move(inner),
                     std::move(inclusion)};
}

Subquantale sided_subquantale(QPtr q, char which) {
  std::vector<Idx> elems;
  for (int a = 0; a < q->size(); ++a) {
    bool in = which == 'L'   ? is_left_sided_elem(*q, a)
              : which == 'R' ? is_right_sided_elem(*q, a)
                             : is_two_sided_elem(*q, a);
    if (in) elems.push_back(a);
  }
  return make_subquantale(q, std::move(elems), std::string(1, which));
}

MaximalSidedReport maximal_sided_primality_check(const Quantale& q) {
  PropertyReport pr = property_report(q);
  if (!pr.get("semi-integral"))
    fail(ErrorKind::NotSemiIntegral, "maximal sided primality needs a semi-integral quantale");
  MaximalSidedReport rep;
  auto collect = [&](bool left) {
    std::vector<Idx> sided;
    for (int a = 0; a < q.size(); ++a)
      if (a != q.top() && (left ? is_left_sided_elem(q, a) : is_right_sided_elem(q, a)))
        sided.push_back(a);
    std::vector<Idx> maximal;
    for (Idx a : sided) {
      bool is_max = true;
      for (Idx b : sided)
        if (b != a && q.lat->leq(a, b)) is_max = false;
      if (is_max) maximal.push_back(a);
    }
    return maximal;
  };
  rep.max_left = collect(true);
  rep.max_right = collect(false);
  rep.all_prime = true;
  for (Idx a : rep.max_left)
    if (!is_prime(q, a)) rep.all_prime = false;
  for (Idx a : rep.max_right)
    if (!is_prime(q, a)) rep.all_prime = false;
  return rep;
}

QPtr semi_unitalization(const Quantale& q) {
  const int n = q.size();
  std::vector<std::string> names = q.lat->names;
  std::string hat = "top^";
  while (q.lat->find(hat)) hat += "^";
  names.push_back(hat);
  const int m = n + 1;
  std::vector<std::uint8_t> rel(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rel[static_cast<size_t>(a) * m + b] = q.lat->leq(a, b);
  for (int a = 0; a < m; ++a) rel[static_cast<size_t>(a) * m + n] = 1;
  LatPtr lat = validate_lattice_rel(std::move(names), std::move(rel));
  std::vector<Idx> mult(static_cast<size_t>(m) * m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<size_t>(a) * m + b] = q.mult(a, b);
  for (int a = 0; a < n; ++a) {
    mult[static_cast<size_t>(a) * m + n] = q.lat->join(a, q.mult(a, q.top()));
    mult[static_cast<size_t>(n) * m + a] = q.lat->join(a, q.mult(q.top(), a));
  }
  mult[static_cast<size_t>(n) * m + n] = n;
  std::optional<std::vector<Idx>> invol;
  if (q.involutive()) {
    invol.emplace(m);
    for (int a = 0; a < n; ++a) (*invol)[a] = q.inv(a);
    (*invol)[n] = n;
  }
  return validate_quantale(std::move(lat), std::move(mult), std::nullopt, std::move(invol));
}

QPtr endomorphism_quantale(LatPtr l, int cap) {
  const int n = l->size();
  // all join-preserving self-maps, generated from join-irreducible assignments
  std::vector<Idx> ji = join_irreducibles(*l);
  std::vector<std::vector<Idx>> maps;
  std::vector<Idx> assign(ji.size(), 0);
  auto build = [&]() -> std::optional<std::vector<Idx>> {
    std::vector<Idx> t(n);
    for (int x = 0; x < n; ++x) {
      Idx acc = l->bottom;
      for (size_t k = 0; k < ji.size(); ++k)
        if (l->leq(ji[k], x)) acc = l->join(acc, assign[k]);
      t[x] = acc;
    }
    if (!is_join_preserving_table(*l, *l, t)) return std::nullopt;
    return t;
  };
  size_t total = 1;
  for (size_t k = 0; k < ji.size(); ++k) {
    total *= n;
    if (total > static_cast<size_t>(cap) * 64)
      fail(ErrorKind::CarrierTooLarge, "too many self-map candidates");
  }
  std::set<std::vector<Idx>> seen;
  for (size_t it = 0; it < total; ++it) {
    size_t v = it;
    for (size_t k = 0; k < ji.size(); ++k) {
      assign[k] = static_cast<Idx>(v % n);
      v /= n;
    }
    if (auto t = build()) {
      if (seen.insert(*t).second) maps.push_back(*t);
    }
  }
  if (static_cast<int>(maps.size()) > cap)
    fail(ErrorKind::CarrierTooLarge, "self-map quantale exceeds cap");
  std::sort(maps.begin(), maps.end());
  const int k = static_cast<int>(maps.size());
  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 0; i < k; ++i) names.push_back("f" + std::to_string(i));
  std::vector<std::uint8_t> rel(static_cast<size_t>(k) * k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      bool le = true;
      for (int x = 0; x < n; ++x)
        if (!l->leq(maps[a][x], maps[b][x])) { le = false; break; }
      rel[static_cast<size_t>(a) * k + b] = le;
    }
  LatPtr lat = validate_lattice_rel(std::move(names), std::move(rel));
  std::map<std::vector<Idx>, Idx> pos;
  for (int i = 0; i < k; ++i) pos[maps[i]] = i;
  std::vector<Idx> mult(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::vector<Idx> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = maps[a][maps[b][x]];
      auto it = pos.find(comp);
      if (it == pos.end())
        fail(ErrorKind::InternalError, "composition left the self-map carrier");
      mult[static_cast<size_t>(a) * k + b] = it->second;
    }
  std::optional<Idx> unit;
  std::vector<Idx> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (auto it = pos.find(id); it != pos.end()) unit = it->second;
  return validate_quantale(std::move(lat), std::move(mult), unit);
}

bool lemma1_absorption_check(const Quantale& q) {
  PropertyReport pr = property_report(q);
  for (const char* h : {"semi-unital", "semi-integral", "factor"})
    if (!pr.get(h)) fail(ErrorKind::HypothesisFailed, std::string("quantale is not ") + h);
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      for (int g = 0; g < q.size(); ++g) {
        if (g == q.bottom()) continue;
        if (q.mult(q.mult(a, g), b) != q.mult(a, b)) return false;
      }
  return true;
}

bool has_zero_divisors(const Quantale& q) {
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (a != q.bottom() && b != q.bottom() && q.mult(a, b) == q.bottom()) return true;
  return false;
}

ZeroDivisorReport zero_divisor_checks(QPtr q) {
  PropertyReport pr = property_report(*q);
  if (!pr.get("semi-unital"))
    fail(ErrorKind::NotSemiUnital, "zero divisor checks assume a semi-unital quantale");
  ZeroDivisorReport rep;
  Subquantale sl = sided_subquantale(q, 'L');
  Subquantale sr = sided_subquantale(q, 'R');
  Subquantale si = sided_subquantale(q, 'I');
  rep.ideal_free = !has_zero_divisors(*si.quantale);
  rep.left_free = !has_zero_divisors(*sl.quantale);
  rep.right_free = !has_zero_divisors(*sr.quantale);
  rep.whole_free = !has_zero_divisors(*q);
  rep.implications_hold = true;
  if (rep.ideal_free && !(rep.left_free && rep.right_free)) {
    rep.implications_hold = false;
    rep.witness = "ideal part free but a sided part is not";
  }
  if (rep.left_free) {
    for (int a = 0; a < q->size() && rep.implications_hold; ++a)
      for (Idx b : sl.elements)
        if (a != q->bottom() && b != q->bottom() && q->mult(a, b) == q->bottom()) {
          rep.implications_hold = false;
          rep.witness = "('" + q->name(a) + "','" + q->name(b) + "')";
        }
  }
  if (rep.right_free) {
    for (Idx a : sr.elements)
      for (int b = 0; b < q->size() && rep.implications_hold; ++b)
        if (a != q->bottom() && b != q->bottom() && q->mult(b, a) == q->bottom()) {
          rep.implications_hold = false;
          rep.witness = "('" + q->name(b) + "','" + q->name(a) + "')";
        }
  }
  return rep;
}

namespace {

void automorphism_dfs(const FiniteLattice& l, std::vector<Idx>& map, std::vector<char>& used,
                      int pos, const std::vector<int>& order, const std::vector<long>& col,
                      std::vector<std::vector<Idx>>& out) {
  if (pos == l.size()) {
    out.push_back(map);
    return;
  }
  int x = order[pos];
  for (int y = 0; y < l.size(); ++y) {
    if (used[y] || col[x] != col[y]) continue;
    bool ok = true;
    for (int p = 0; p < pos && ok; ++p) {
      int u = order[p];
      if (l.leq(x, u) != l.leq(y, map[u])) ok = false;
      if (l.leq(u, x) != l.leq(map[u], y)) ok = false;
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = 1;
    automorphism_dfs(l, map, used, pos + 1, order, col, out);
    used[y] = 0;
  }
}

std::vector<long> order_colors_for_autos(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<long> col(n, 0);
  std::vector<int> up(n, 0), down(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && l.leq(a, b)) { up[a]++; down[b]++; }
  for (int a = 0; a < n; ++a) col[a] = up[a] * 1009 + down[a];
  for (int round = 0; round < 3; ++round) {
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

}  // namespace

std::vector<std::vector<Idx>> lattice_automorphisms(const FiniteLattice& l) {
  auto col = order_colors_for_autos(l);
  std::vector<int> order(l.size());
  std::iota(order.begin(), order.end(), 0);
  std::map<long, int> freq;
  for (long c : col) freq[c]++;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[col[x]] != freq[col[y]]) return freq[col[x]] < freq[col[y]];
    return x < y;
  });
  std::vector<Idx> map(l.size(), -1);
  std::vector<char> used(l.size(), 0);
  std::vector<std::vector<Idx>> out;
  automorphism_dfs(l, map, used, 0, order, col, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Idx>> find_involutions(const Quantale& q) {
  std::vector<std::vector<Idx>> out;
  for (auto& phi : lattice_automorphisms(*q.lat)) {
    bool ok = true;
    for (int a = 0; a < q.size() && ok; ++a)
      if (phi[phi[a]] != a) ok = false;
    for (int a = 0; a < q.size() && ok; ++a)
      for (int b = 0; b < q.size(); ++b)
        if (phi[q.mult(a, b)] != q.mult(phi[b], phi[a])) { ok = false; break; }
    if (ok) out.push_back(phi);
  }
  return out;
}

bool hom_check(const Quantale& dom, const Quantale& cod, const std::vector<Idx>& table,
               HomKind kind, std::string* witness) {
  std::string w;
  if (!is_join_preserving_table(*dom.lat, *cod.lat, table, &w)) {
    if (witness) *witness = "not join-preserving at " + w;
    return false;
  }
  if (kind == HomKind::InvolutiveHom && (!dom.involutive() || !cod.involutive()))
    fail(ErrorKind::StructureMissing, "involutive homomorphism check needs involutions");
  for (int a = 0; a < dom.size(); ++a)
    for (int b = 0; b < dom.size(); ++b) {
      Idx lhs = table[dom.mult(a, b)];
      Idx rhs = kind == HomKind::AntiHom ? cod.mult(table[b], table[a])
                                         : cod.mult(table[a], table[b]);
      if (lhs != rhs) {
        if (witness)
          *witness = "multiplication law fails at ('" + dom.name(a) + "','" + dom.name(b) + "')";
        return false;
      }
    }
  if (kind == HomKind::StrongHom && table[dom.top()] != cod.top()) {
    if (witness) *witness = "top not preserved";
    return false;
  }
  if (kind == HomKind::InvolutiveHom) {
    for (int a = 0; a < dom.size(); ++a)
      if (table[dom.inv(a)] != cod.inv(table[a])) {
        if (witness) *witness = "involution not preserved at '" + dom.name(a) + "'";
        return false;
      }
  }
  return true;
}

std::vector<std::vector<Idx>> enumerate_homs(const Quantale& dom, const Quantale& cod,
                                             HomOptions opt) {
  std::vector<Idx> ji = join_irreducibles(*dom.lat);
  std::vector<std::vector<Idx>> out;
  std::vector<Idx> assign(ji.size(), -1);

  auto leaf = [&]() {
    std::vector<Idx> t(dom.size());
    for (int x = 0; x < dom.size(); ++x) {
      Idx acc = cod.bottom();
      for (size_t k = 0; k < ji.size(); ++k)
        if (dom.lat->leq(ji[k], x)) acc = cod.lat->join(acc, assign[k]);
      t[x] = acc;
    }
    if (!is_join_preserving_table(*dom.lat, *cod.lat, t)) return;
    HomKind kind = opt.anti ? HomKind::AntiHom : HomKind::Hom;
    if (!hom_check(dom, cod, t, kind)) return;
    if (opt.strong && t[dom.top()] != cod.top()) return;
    if (opt.involutive) {
      if (!dom.involutive() || !cod.involutive()) return;
      for (int a = 0; a < dom.size(); ++a)
        if (t[dom.inv(a)] != cod.inv(t[a])) return;
    }
    out.push_back(std::move(t));
  };

  auto dfs = [&](auto&& self, size_t pos) -> void {
    if (pos == ji.size()) {
      leaf();
      return;
    }
    for (int v = 0; v < cod.size(); ++v) {
      bool ok = true;
      for (size_t p = 0; p < pos && ok; ++p) {
        if (dom.lat->leq(ji[p], ji[pos]) && !cod.lat->leq(assign[p], v)) ok = false;
        if (dom.lat->leq(ji[pos], ji[p]) && !cod.lat->leq(v, assign[p])) ok = false;
      }
      if (!ok) continue;
      assign[pos] = v;
      self(self, pos + 1);
    }
    assign[pos] = -1;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SupMap h_p(QPtr q, Idx p) {
  QPtr q2 = catalog("q2");
  PropertyReport pr = property_report(*q);
  if (!pr.get("semi-unital")) {
    // route through the semi-unitalization and restrict
    QPtr hat = semi_unitalization(*q);
    if (!is_strongly_prime(*q, p))
      fail(ErrorKind::NotPrime, "'" + q->name(p) + "' is not strongly prime");
    SupMap lifted = h_p(hat, p);
    std::vector<Idx> t(q->size());
    for (int a = 0; a < q->size(); ++a) t[a] = lifted.table[a];
    return validate_supmap(q->lat, q2->lat, std::move(t));
  }
  if (!is_prime(*q, p)) fail(ErrorKind::NotPrime, "'" + q->name(p) + "' is not prime");
  const Idx t_ = q->top();
  const Idx vb = q2->index_of("b"), val = q2->index_of("a_l"), var = q2->index_of("a_r"),
            vc = q2->index_of("c"), vtop = q2->index_of("top"), vbot = q2->index_of("bot");
  std::vector<Idx> tab(q->size());
  for (int a = 0; a < q->size(); ++a) {
    bool below = q->lat->leq(a, p);
    bool r = q->lat->leq(q->mult(a, t_), p);
    bool l = q->lat->leq(q->mult(t_, a), p);
    bool tt = q->lat->leq(q->mult(q->mult(t_, a), t_), p);
    if (tt)
      tab[a] = vbot;
    else if (r && l)
      tab[a] = vb;
    else if (!r && l)
      tab[a] = val;
    else if (r && !l)
      tab[a] = var;
    else if (below)
      tab[a] = vc;
    else
      tab[a] = vtop;
  }
  SupMap h = validate_supmap(q->lat, q2->lat, std::move(tab));
  if (!hom_check(*q, *q2, h.table, HomKind::StrongHom))
    fail(ErrorKind::InternalError, "prime-induced map is not a strong homomorphism");
  if (right_adjoint(h)[vc] != p)
    fail(ErrorKind::InternalError, "prime-induced map does not recover its prime");
  return h;
}

std::vector<std::vector<Idx>> strong_homs_to_q2(QPtr q) {
  return enumerate_homs(*q, *catalog("q2"), HomOptions{.strong = true});
}

namespace {

QPtr build_catalog(const std::string& name) {
  auto mk = [](std::vector<std::string> names,
               std::vector<std::pair<std::string, std::string>> order,
               std::vector<std::tuple<std::string, std::string, std::string>> products,
               std::optional<std::string> unit,
               std::vector<std::pair<std::string, std::string>> invol) -> QPtr {
    LatPtr lat = validate_lattice(names, order);
    const int n = lat->size();
    std::vector<Idx> mult(static_cast<size_t>(n) * n, lat->bottom);
    for (auto& [a, b, v] : products)
      mult[static_cast<size_t>(lat->index_of(a)) * n + lat->index_of(b)] = lat->index_of(v);
    std::optional<Idx> u;
    if (unit) u = lat->index_of(*unit);
    std::optional<std::vector<Idx>> inv;
    if (!invol.empty()) {
      inv.emplace(n);
      for (auto& [a, b] : invol) (*inv)[lat->index_of(a)] = lat->index_of(b);
    }
    return validate_quantale(lat, std::move(mult), u, std::move(inv));
  };

  if (name == "two")
    return mk({"bot", "top"}, {{"bot", "top"}}, {{"top", "top", "top"}}, "top",
              {{"bot", "bot"}, {"top", "top"}});
  if (name == "c3l")
    return mk({"bot", "a", "top"}, {{"bot", "a"}, {"a", "top"}},
              {{"a", "a", "a"}, {"a", "top", "top"}, {"top", "a", "a"}, {"top", "top", "top"}},
              std::nullopt, {});
  if (name == "c3r")
    return mk({"bot", "a", "top"}, {{"bot", "a"}, {"a", "top"}},
              {{"a", "a", "a"}, {"a", "top", "a"}, {"top", "a", "top"}, {"top", "top", "top"}},
              std::nullopt, {});
  if (name == "c3trivial")
    return mk({"bot", "a", "top"}, {{"bot", "a"}, {"a", "top"}}, {}, std::nullopt, {});
  if (name == "q2") {
    std::vector<std::tuple<std::string, std::string, std::string>> prods;
    const char* elems[5] = {"b", "a_l", "a_r", "c", "top"};
    const char* table[5][5] = {
        {"b", "b", "a_r", "a_r", "a_r"},
        {"a_l", "a_l", "top", "top", "top"},
        {"b", "b", "a_r", "a_r", "a_r"},
        {"a_l", "a_l", "top", "top", "top"},
        {"a_l", "a_l", "top", "top", "top"},
    };
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) prods.emplace_back(elems[i], elems[j], table[i][j]);
    return mk({"bot", "b", "a_l", "a_r", "c", "top"},
              {{"bot", "b"}, {"b", "a_l"}, {"b", "a_r"}, {"a_l", "c"}, {"a_r", "c"}, {"c", "top"}},
              prods, std::nullopt,
              {{"bot", "bot"},
               {"b", "b"},
               {"a_l", "a_r"},
               {"a_r", "a_l"},
               {"c", "c"},
               {"top", "top"}});
  }
  fail(ErrorKind::UnknownName, "no catalog quantale named '" + name + "'");
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"two",   "c3l",   "c3r",   "c3trivial",
                                                 "q2",    "sq2-1", "sq2-2", "sq2-3",
                                                 "sq2-4", "sq2-5", "sq2-6"};
  return names;
}

QPtr catalog(const std::string& name) {
  static std::map<std::string, QPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  QPtr q;
  if (name.rfind("sq2-", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(name.substr(4));
    } catch (...) {
      fail(ErrorKind::UnknownName, "no catalog quantale named '" + name + "'");
    }
    auto all = enumerate_strictly_quantized();
    if (k < 1 || k > static_cast<int>(all.size()))
      fail(ErrorKind::UnknownName, "no catalog quantale named '" + name + "'");
    q = all[k - 1];
  } else {
    q = build_catalog(name);
  }
  cache[name] = q;
  return q;
}

namespace {

// Canonical serialization used to order the strictly quantized classes.
std::string quantale_signature(const Quantale& q) {
  std::string s = std::to_string(q.size()) + ";";
  for (int a = 0; a < q.size(); ++a) s += q.name(a) + ",";
  s += ";";
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) s += std::to_string(q.lat->leq(a, b));
  s += ";";
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) s += q.name(q.mult(a, b)) + ",";
  return s;
}

}  // namespace

std::vector<QPtr> enumerate_strictly_quantized() {
  static std::vector<QPtr> cache;
  if (!cache.empty()) return cache;

  QPtr q2 = catalog("q2");
  const FiniteLattice& K = *q2->lat;
  const int nk = K.size();
  auto ideals = lattice_ideals(K);  // join-closed down-sets of q2

  // up-sets of q2 containing top
  std::vector<std::vector<Idx>> upsets;
  for (std::uint32_t mask = 0; mask < (1u << nk); ++mask) {
    if (!(mask & (1u << K.top))) continue;
    bool ok = true;
    std::vector<Idx> u;
    for (int a = 0; a < nk && ok; ++a) {
      if (!(mask & (1u << a))) continue;
      u.push_back(a);
      for (int b = 0; b < nk; ++b)
        if (K.leq(a, b) && !(mask & (1u << b))) ok = false;
    }
    if (ok) upsets.push_back(u);
  }

  // generators of the adjoined part: bot (giving e itself), b, a_l, a_r, c
  std::vector<Idx> gens;
  for (int a = 0; a < nk; ++a)
    if (a != K.top) gens.push_back(a);
  std::sort(gens.begin(), gens.end());
  const int ng = static_cast<int>(gens.size());

  std::vector<QPtr> found;
  std::vector<int> choice(ng, 0);

  auto contains = [](const std::vector<Idx>& v, Idx x) {
    return std::binary_search(v.begin(), v.end(), x);
  };

  for (const auto& U : upsets) {
    // candidate down-sets per generator, all ideals containing D and down(gen)
    for (size_t di = 0; di < ideals.size(); ++di) {
      const auto& D = ideals[di];
      bool du_ok = true;
      for (Idx d : D)
        for (Idx u : U)
          if (!K.leq(d, u)) du_ok = false;
      for (Idx d : D)
        if (contains(U, d)) du_ok = false;
      if (!du_ok) continue;

      std::vector<std::vector<int>> cand(ng);
      for (int g = 0; g < ng; ++g) {
        for (size_t i = 0; i < ideals.size(); ++i) {
          const auto& I = ideals[i];
          bool ok = true;
          for (Idx d : D)
            if (!contains(I, d)) ok = false;
          for (int z = 0; z < nk && ok; ++z)
            if (K.leq(z, gens[g]) && !contains(I, z)) ok = false;
          if (ok) cand[g].push_back(static_cast<int>(i));
        }
      }

      auto try_candidate = [&](const std::vector<int>& pick) {
        // pick[g] indexes ideals: the K-down-set of gens[g] v e
        std::vector<const std::vector<Idx>*> dn(ng);
        for (int g = 0; g < ng; ++g) dn[g] = &ideals[pick[g]];
        // monotone coherence: x in Dy implies Dx subset of Dy
        for (int g = 0; g < ng; ++g)
          for (int h = 0; h < ng; ++h)
            if (contains(*dn[h], gens[g]))
              for (Idx z : *dn[g])
                if (!contains(*dn[h], z)) return;
        // identify classes: E_g == E_h when mutually below; E_g == k in K
        // when k in Dn[g], k >= gens[g], k in U
        std::vector<int> cls(ng, -1);  // -1 fresh, else identified with K elem or earlier gen
        std::vector<Idx> as_k(ng, -1);
        for (int g = 0; g < ng; ++g) {
          for (Idx k = 0; k < nk; ++k)
            if (contains(*dn[g], k) && K.leq(gens[g], k) && contains(U, k)) {
              if (as_k[g] >= 0 && as_k[g] != k) return;  // two identifications
              as_k[g] = k;
            }
          if (as_k[g] >= 0) {
            // the down-set must then be exactly down(as_k)
            for (int z = 0; z < nk; ++z)
              if (contains(*dn[g], z) != static_cast<bool>(K.leq(z, as_k[g]))) return;
          }
        }
        for (int g = 0; g < ng; ++g)
          for (int h = g + 1; h < ng; ++h) {
            bool gh = contains(*dn[h], gens[g]);
            bool hg = contains(*dn[g], gens[h]);
            if (gh && hg) {
              if (*dn[g] != *dn[h]) return;
              if (cls[h] < 0) cls[h] = g;
            }
          }

        // assemble carrier: K elements + fresh adjoined elements
        std::vector<std::string> names = K.names;
        std::vector<int> rep(ng, -1);  // index in carrier for E_g
        for (int g = 0; g < ng; ++g) {
          if (as_k[g] >= 0) {
            rep[g] = as_k[g];
            continue;
          }
          if (cls[g] >= 0) {
            rep[g] = rep[cls[g]];
            continue;
          }
          rep[g] = static_cast<int>(names.size());
          names.push_back(gens[g] == K.bottom ? std::string("e") : K.names[gens[g]] + "_e");
        }
        const int n = static_cast<int>(names.size());
        std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
        auto setle = [&](int a, int b) { rel[static_cast<size_t>(a) * n + b] = 1; };
        for (int a = 0; a < nk; ++a)
          for (int b = 0; b < nk; ++b)
            if (K.leq(a, b)) setle(a, b);
        for (int g = 0; g < ng; ++g) {
          for (Idx k = 0; k < nk; ++k) {
            if (contains(*dn[g], k)) setle(k, rep[g]);
            if (K.leq(gens[g], k) && contains(U, k)) setle(rep[g], k);
          }
          for (int h = 0; h < ng; ++h)
            if (contains(*dn[h], gens[g]) || K.leq(gens[g], gens[h])) setle(rep[g], rep[h]);
          setle(rep[g], rep[g]);
        }
        LatPtr lat;
        try {
          lat = validate_lattice_rel(names, rel);
        } catch (const qlab_error&) {
          return;
        }
        // the adjunction must not disturb q2's order or joins
        for (int a = 0; a < nk; ++a)
          for (int b = 0; b < nk; ++b) {
            if (lat->leq(a, b) != static_cast<bool>(K.leq(a, b))) return;
            if (lat->join(a, b) != K.join(a, b)) return;
          }
        if (lat->top != K.top || lat->bottom != K.bottom) return;
        // the adjoined join map must be realized: rep[g] == join(gens[g], e)
        int e_idx = rep[0];  // gens[0] == bottom
        if (gens[0] != K.bottom) fail(ErrorKind::InternalError, "generator order broken");
        for (int g = 0; g < ng; ++g)
          if (lat->join(gens[g], e_idx) != rep[g]) return;
        // K must be join-dense with e: every element is a K-element or a join with e
        // (holds by construction of the carrier)

        // multiplication: forced by bimorphism and the unit laws
        auto decomp = [&](int x, Idx& k, bool& with_e) {
          if (x < nk) {
            k = x;
            with_e = false;
            return;
          }
          for (int g = 0; g < ng; ++g)
            if (rep[g] == x) {
              k = gens[g];
              with_e = true;
              return;
            }
          fail(ErrorKind::InternalError, "unknown carrier element");
        };
        std::vector<Idx> mult(static_cast<size_t>(n) * n);
        bool mult_ok = true;
        for (int x = 0; x < n && mult_ok; ++x)
          for (int y = 0; y < n; ++y) {
            Idx kx, ky;
            bool ex, ey;
            decomp(x, kx, ex);
            decomp(y, ky, ey);
            Idx base = q2->mult(kx, ky);
            Idx acc = base;
            if (ex) acc = lat->join(acc, ky);
            if (ey) acc = lat->join(acc, kx);
            if (ex && ey) acc = lat->join(acc, e_idx);
            mult[static_cast<size_t>(x) * n + y] = acc;
          }
        if (!mult_ok) return;
        // products of K elements must stay exactly q2's
        for (int a = 0; a < nk; ++a)
          for (int b = 0; b < nk; ++b)
            if (mult[static_cast<size_t>(a) * n + b] != q2->mult(a, b)) return;
        QPtr cand_q;
        try {
          cand_q = validate_quantale(lat, mult, e_idx);
        } catch (const qlab_error&) {
          return;
        }
        // the involution on q2 extends along joins with the hermitian unit
        std::vector<Idx> invol(n);
        for (int a = 0; a < nk; ++a) invol[a] = q2->inv(a);
        for (int g = 0; g < ng; ++g)
          if (rep[g] >= nk) invol[rep[g]] = lat->join(q2->inv(gens[g]), e_idx);
        try {
          cand_q = validate_quantale(lat, std::move(mult), e_idx, invol);
        } catch (const qlab_error&) {
          // keep the non-involutive structure; tests flag this if it occurs
        }
        for (auto& prev : found)
          if (quantale_isomorphism(*prev, *cand_q)) return;
        found.push_back(cand_q);
      };

      std::vector<int> pick(ng, 0);
      // the down-set of the unit itself is exactly D
      int d_self = -1;
      for (int c : cand[0])
        if (ideals[c] == D) d_self = c;
      if (d_self < 0) continue;
      pick[0] = d_self;
      auto iterate = [&](auto&& self, int g) -> void {
        if (g == ng) {
          try_candidate(pick);
          return;
        }
        for (int c : cand[g]) {
          pick[g] = c;
          self(self, g + 1);
        }
      };
      iterate(iterate, 1);
    }
  }

  std::sort(found.begin(), found.end(), [](const QPtr& a, const QPtr& b) {
    if (a->size() != b->size()) return a->size() < b->size();
    return quantale_signature(*a) < quantale_signature(*b);
  });
  cache = found;
  return cache;
}

namespace {

std::vector<long> quantale_colors(const Quantale& q, bool with_invol) {
  const int n = q.size();
  std::vector<long> col(n, 0);
  for (int a = 0; a < n; ++a) {
    long h = 0;
    for (int b = 0; b < n; ++b) {
      if (a != b && q.lat->leq(a, b)) h += 3;
      if (a != b && q.lat->leq(b, a)) h += 7;
    }
    if (q.mult(a, a) == a) h += 1000;
    if (is_left_sided_elem(q, a)) h += 3000;
    if (is_right_sided_elem(q, a)) h += 9000;
    if (with_invol && q.involutive() && q.inv(a) == a) h += 27000;
    col[a] = h;
  }
  for (int round = 0; round < 4; ++round) {
    std::vector<long> next(n, 0);
    for (int a = 0; a < n; ++a) {
      long h = col[a] * 31 + 11;
      for (int b = 0; b < n; ++b) {
        if (q.lat->leq(a, b)) h += col[b] * 131;
        if (q.lat->leq(b, a)) h += col[b] * 257;
        h += (col[q.mult(a, b)] ^ (col[b] >> 1)) * 17;
        h += (col[q.mult(b, a)] ^ (col[b] >> 2)) * 19;
      }
      next[a] = h;
    }
    col = next;
  }
  return col;
}

bool quantale_iso_dfs(const Quantale& a, const Quantale& b, bool match_invol,
                      std::vector<Idx>& map, std::vector<char>& used, int pos,
                      const std::vector<int>& order, const std::vector<long>& ca,
                      const std::vector<long>& cb, std::vector<std::vector<Idx>>* collect) {
  if (pos == a.size()) {
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        if (map[a.mult(x, y)] != b.mult(map[x], map[y])) return false;
    if (match_invol)
      for (int x = 0; x < a.size(); ++x)
        if (map[a.inv(x)] != b.inv(map[x])) return false;
    if (a.unit && b.unit && map[*a.unit] != *b.unit) return false;
    if (collect) {
      collect->push_back(map);
      return false;  // keep searching
    }
    return true;
  }
  int x = order[pos];
  for (int y = 0; y < b.size(); ++y) {
    if (used[y] || ca[x] != cb[y]) continue;
    bool ok = true;
    for (int p = 0; p < pos && ok; ++p) {
      int u = order[p];
      if (a.lat->leq(x, u) != b.lat->leq(y, map[u])) ok = false;
      if (a.lat->leq(u, x) != b.lat->leq(map[u], y)) ok = false;
      if (ok) {
        // partial multiplicative coherence when products are already placed
        Idx pxy = a.mult(x, u), pyx = a.mult(u, x);
        if (pxy == x && b.mult(y, map[u]) != y) ok = false;
        if (pyx == x && b.mult(map[u], y) != y) ok = false;
        if (pxy == u && b.mult(y, map[u]) != map[u]) ok = false;
        if (pyx == u && b.mult(map[u], y) != map[u]) ok = false;
      }
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = 1;
    if (quantale_iso_dfs(a, b, match_invol, map, used, pos + 1, order, ca, cb, collect))
      return true;
    used[y] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Idx>> quantale_isomorphism(const Quantale& a, const Quantale& b,
                                                     bool match_involution) {
  if (a.size() != b.size()) return std::nullopt;
  if (match_involution && (!a.involutive() || !b.involutive()))
    fail(ErrorKind::StructureMissing, "involutive isomorphism needs involutions on both sides");
  auto ca = quantale_colors(a, match_involution), cb = quantale_colors(b, match_involution);
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::map<long, int> freq;
  for (long c : ca) freq[c]++;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[ca[x]] != freq[ca[y]]) return freq[ca[x]] < freq[ca[y]];
    return x < y;
  });
  std::vector<Idx> map(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  if (quantale_iso_dfs(a, b, match_involution, map, used, 0, order, ca, cb, nullptr)) return map;
  return std::nullopt;
}

std::vector<std::vector<Idx>> quantale_automorphisms(const Quantale& q) {
  auto ca = quantale_colors(q, false);
  std::vector<int> order(q.size());
  std::iota(order.begin(), order.end(), 0);
  std::map<long, int> freq;
  for (long c : ca) freq[c]++;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[ca[x]] != freq[ca[y]]) return freq[ca[x]] < freq[ca[y]];
    return x < y;
  });
  std::vector<Idx> map(q.size(), -1);
  std::vector<char> used(q.size(), 0);
  std::vector<std::vector<Idx>> out;
  quantale_iso_dfs(q, q, false, map, used, 0, order, ca, ca, &out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qlab
