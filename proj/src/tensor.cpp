#include "qlab/tensor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace qlab {

namespace {

// Least bi-ideal containing the given pair set: down-close, then close
// under coordinatewise joins, to a fixpoint.
Bitset bi_ideal_closure(const FiniteLattice& x, const FiniteLattice& y, Bitset s) {
  const int ny = y.size();
  auto bit = [&](Idx a, Idx b) { return a * ny + b; };
  for (int a = 0; a < x.size(); ++a) s.set(bit(a, y.bottom));
  for (int b = 0; b < ny; ++b) s.set(bit(x.bottom, b));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < ny; ++b) {
        if (!s.get(bit(a, b))) continue;
        for (int c = 0; c < x.size(); ++c)
          if (x.leq(c, a))
            for (int d = 0; d < ny; ++d)
              if (y.leq(d, b) && !s.get(bit(c, d))) {
                s.set(bit(c, d));
                changed = true;
              }
        for (int c = 0; c < x.size(); ++c)
          for (int d = 0; d < ny; ++d) {
            if (!s.get(bit(c, d))) continue;
            if (d == b && !s.get(bit(x.join(a, c), b))) {
              s.set(bit(x.join(a, c), b));
              changed = true;
            }
            if (c == a && !s.get(bit(a, y.join(b, d)))) {
              s.set(bit(a, y.join(b, d)));
              changed = true;
            }
          }
      }
  }
  return s;
}

std::string tensor_elem_name(int k) { return "t" + std::to_string(k); }

}  // namespace

std::vector<std::pair<Idx, Idx>> TensorQuantale::factorization(Idx t) const {
  const auto& x = *left->lat;
  const auto& y = *right->lat;
  std::vector<std::pair<Idx, Idx>> maximal;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < y.size(); ++b) {
      if (!pair_in(t, a, b)) continue;
      bool is_max = true;
      for (int c = 0; c < x.size() && is_max; ++c)
        for (int d = 0; d < y.size(); ++d)
          if (pair_in(t, c, d) && x.leq(a, c) && y.leq(b, d) && (a != c || b != d)) {
            is_max = false;
            break;
          }
      if (is_max) maximal.emplace_back(a, b);
    }
  return maximal;
}

TensorQuantale tensor_quantale(QPtr q, QPtr r, int cap) {
  const FiniteLattice& x = *q->lat;
  const FiniteLattice& y = *r->lat;
  const int nx = x.size(), ny = y.size();
  const int bits = nx * ny;

  // generate the carrier: all joins of elementary tensors
  std::map<Bitset, Idx> index;
  std::vector<Bitset> members;
  auto add = [&](const Bitset& s) -> Idx {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    Idx id = static_cast<Idx>(members.size());
    if (id >= cap) fail(ErrorKind::SizeCapExceeded, "bi-ideal count exceeds the tensor cap");
    index.emplace(s, id);
    members.push_back(s);
    return id;
  };
  std::vector<Idx> elem(static_cast<size_t>(nx) * ny);
  Bitset bottom_cross = bi_ideal_closure(x, y, Bitset(bits));
  add(bottom_cross);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b) {
      Bitset s(bits);
      s.set(a * ny + b);
      elem[static_cast<size_t>(a) * ny + b] = add(bi_ideal_closure(x, y, s));
    }
  // join-closure (worklist over pairs)
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Bitset u = members[i];
      u.or_with(members[j]);
      add(bi_ideal_closure(x, y, u));
    }

  // canonical carrier order: by popcount then mask
  std::vector<Idx> perm(members.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](Idx a, Idx b) {
    int ca = members[a].count(), cb = members[b].count();
    if (ca != cb) return ca < cb;
    return members[a] < members[b];
  });
  std::vector<Idx> rank(members.size());
  for (size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<Idx>(i);
  std::vector<Bitset> sorted(members.size());
  for (size_t i = 0; i < perm.size(); ++i) sorted[i] = members[perm[i]];
  members = std::move(sorted);
  for (auto& e : elem) e = rank[e];

  const int n = static_cast<int>(members.size());
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = tensor_elem_name(i);
  std::vector<std::uint8_t> rel(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rel[static_cast<size_t>(i) * n + j] = members[i].subset_of(members[j]);
  LatPtr lat = validate_lattice_rel(std::move(names), std::move(rel));

  // product: join-extension of the elementary rule over all member pairs
  std::vector<Idx> mult(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Bitset pr(bits);
      for (int a1 = 0; a1 < nx; ++a1)
        for (int b1 = 0; b1 < ny; ++b1) {
          if (!members[i].get(a1 * ny + b1)) continue;
          for (int a2 = 0; a2 < nx; ++a2)
            for (int b2 = 0; b2 < ny; ++b2) {
              if (!members[j].get(a2 * ny + b2)) continue;
              pr.set(q->mult(a1, a2) * ny + r->mult(b1, b2));
            }
        }
      auto it = index.find(bi_ideal_closure(x, y, pr));
      if (it == index.end())
        fail(ErrorKind::InconsistentExtension, "product left the generated carrier");
      mult[static_cast<size_t>(i) * n + j] = rank[it->second];
    }

  QPtr product = validate_quantale(lat, std::move(mult));

  TensorQuantale t;
  t.left = q;
  t.right = r;
  t.product = product;
  t.members = std::move(members);
  t.elem_ = std::move(elem);

  // invariants of the representation, re-verified rather than assumed
  for (int a = 0; a < nx; ++a)
    if (t.elem(a, y.bottom) != product->bottom())
      fail(ErrorKind::InconsistentExtension, "bottom cross broken on the left");
  for (int b = 0; b < ny; ++b)
    if (t.elem(x.bottom, b) != product->bottom())
      fail(ErrorKind::InconsistentExtension, "bottom cross broken on the right");
  for (int a1 = 0; a1 < nx; ++a1)
    for (int a2 = 0; a2 < nx; ++a2)
      for (int b = 0; b < ny; ++b)
        if (product->lat->join(t.elem(a1, b), t.elem(a2, b)) != t.elem(x.join(a1, a2), b))
          fail(ErrorKind::InconsistentExtension, "elementary tensors not a bimorphism (left)");
  for (int b1 = 0; b1 < ny; ++b1)
    for (int b2 = 0; b2 < ny; ++b2)
      for (int a = 0; a < nx; ++a)
        if (product->lat->join(t.elem(a, b1), t.elem(a, b2)) != t.elem(a, y.join(b1, b2)))
          fail(ErrorKind::InconsistentExtension, "elementary tensors not a bimorphism (right)");
  for (int a1 = 0; a1 < nx; ++a1)
    for (int b1 = 0; b1 < ny; ++b1)
      for (int a2 = 0; a2 < nx; ++a2)
        for (int b2 = 0; b2 < ny; ++b2)
          if (product->mult(t.elem(a1, b1), t.elem(a2, b2)) !=
              t.elem(q->mult(a1, a2), r->mult(b1, b2)))
            fail(ErrorKind::InconsistentExtension, "elementary product rule broken");
  // every element is a join of the elementary tensors it contains
  for (int i = 0; i < n; ++i) {
    Idx acc = product->bottom();
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < ny; ++b)
        if (t.pair_in(i, a, b)) acc = product->lat->join(acc, t.elem(a, b));
    if (acc != i)
      fail(ErrorKind::InconsistentExtension, "element is not a join of elementary tensors");
  }

  std::vector<Idx> jq(nx), jr(ny);
  for (int a = 0; a < nx; ++a) jq[a] = t.elem(a, y.top);
  for (int b = 0; b < ny; ++b) jr[b] = t.elem(x.top, b);
  t.embed_left = validate_supmap(q->lat, product->lat, std::move(jq));
  t.embed_right = validate_supmap(r->lat, product->lat, std::move(jr));
  return t;
}

SupMap symmetry_map(const TensorQuantale& qr, const TensorQuantale& rq) {
  if (qr.left.get() != rq.right.get() || qr.right.get() != rq.left.get())
    fail(ErrorKind::DomainMismatch, "symmetry needs the swapped tensor of the same factors");
  const int ny = qr.right->size();
  const int my = rq.right->size();
  std::vector<Idx> table(qr.product->size(), -1);
  for (int i = 0; i < qr.product->size(); ++i) {
    Bitset sw(rq.left->size() * my);
    for (int a = 0; a < qr.left->size(); ++a)
      for (int b = 0; b < ny; ++b)
        if (qr.members[i].get(a * ny + b)) sw.set(b * my + a);
    Idx found = -1;
    for (int j = 0; j < rq.product->size(); ++j)
      if (rq.members[j] == sw) found = j;
    if (found < 0) fail(ErrorKind::InternalError, "swapped member set is not a bi-ideal");
    table[i] = found;
  }
  return validate_supmap(qr.product->lat, rq.product->lat, std::move(table));
}

QPtr opposite_quantale(QPtr q) {
  const int n = q->size();
  std::vector<Idx> mult(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<size_t>(a) * n + b] = q->mult(b, a);
  return validate_quantale(q->lat, std::move(mult), q->unit, q->invol);
}

TensorInvolutionResult tensor_involution(const TensorQuantale& t, const SupMap& theta_q,
                                         const SupMap& theta_r) {
  QPtr q = t.left, r = t.right;
  if (theta_q.dom.get() != q->lat.get() || theta_q.cod.get() != r->lat.get() ||
      theta_r.dom.get() != r->lat.get() || theta_r.cod.get() != q->lat.get())
    fail(ErrorKind::DomainMismatch, "anti-homomorphism pair does not match the factors");
  std::string w;
  if (!hom_check(*q, *r, theta_q.table, HomKind::AntiHom, &w))
    fail(ErrorKind::Eq22Violated, "left map is not an anti-homomorphism: " + w);
  if (!hom_check(*r, *q, theta_r.table, HomKind::AntiHom, &w))
    fail(ErrorKind::Eq22Violated, "right map is not an anti-homomorphism: " + w);
  for (int a = 0; a < q->size(); ++a)
    if (theta_r.table[theta_q.table[a]] != a)
      fail(ErrorKind::Eq22Violated, "round trip fails at '" + q->name(a) + "'");
  for (int b = 0; b < r->size(); ++b)
    if (theta_q.table[theta_r.table[b]] != b)
      fail(ErrorKind::Eq22Violated, "round trip fails at '" + r->name(b) + "'");

  const auto& prod = *t.product;
  const int n = prod.size();
  const int ny = r->size();
  std::vector<Idx> inv(n);
  for (int i = 0; i < n; ++i) {
    // join-extension of alpha(x)beta |-> theta_r(beta) (x) theta_q(alpha)
    Idx acc = prod.bottom();
    for (int a = 0; a < q->size(); ++a)
      for (int b = 0; b < ny; ++b)
        if (t.members[i].get(a * ny + b))
          acc = prod.lat->join(acc, t.elem(theta_r.table[b], theta_q.table[a]));
    inv[i] = acc;
  }
  // re-validate as a genuine involution on the product
  QPtr with_inv = validate_quantale(prod.lat, prod.mult_, prod.unit, inv);
  (void)with_inv;

  TensorInvolutionResult res;
  res.involution = inv;
  res.diagram_commutes = true;
  for (int a = 0; a < q->size(); ++a)
    if (inv[t.embed_left.table[a]] != t.embed_right.table[theta_q.table[a]])
      res.diagram_commutes = false;
  for (int b = 0; b < ny; ++b)
    if (inv[t.embed_right.table[b]] != t.embed_left.table[theta_r.table[b]])
      res.diagram_commutes = false;

  PropertyReport pq = property_report(*q), pr = property_report(*r);
  if (pq.get("left-sided") && pr.get("right-sided") && pq.get("semi-unital") &&
      pr.get("semi-unital")) {
    int matching = 0;
    for (auto& cand : find_involutions(prod)) {
      bool comm = true;
      for (int a = 0; a < q->size() && comm; ++a)
        if (cand[t.embed_left.table[a]] != t.embed_right.table[theta_q.table[a]]) comm = false;
      for (int b = 0; b < ny && comm; ++b)
        if (cand[t.embed_right.table[b]] != t.embed_left.table[theta_r.table[b]]) comm = false;
      if (comm) {
        matching++;
        if (cand != inv) matching++;  // a distinct match disproves uniqueness
      }
    }
    res.unique_for_diagram = matching == 1;
  }
  return res;
}

TensoriallyInvolutive tensorially_involutive(QPtr q) {
  if (!q->involutive()) fail(ErrorKind::NotInvolutive, "tensorially involutive needs an involution");
  PropertyReport pr = property_report(*q);
  if (!pr.get("semi-unital"))
    fail(ErrorKind::NotSemiUnital, "tensorially involutive needs a semi-unital quantale");
  TensoriallyInvolutive out{sided_subquantale(q, 'L'), sided_subquantale(q, 'R'), {}};
  out.tensor = tensor_quantale(out.left_part.quantale, out.right_part.quantale);

  // restrictions of the involution swap the sided parts
  const auto& le = out.left_part.elements;
  const auto& re = out.right_part.elements;
  auto pos = [](const std::vector<Idx>& v, Idx x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) fail(ErrorKind::InternalError, "involution leaves the sided part");
    return static_cast<Idx>(it - v.begin());
  };
  std::vector<Idx> tq(le.size()), tr(re.size());
  for (size_t i = 0; i < le.size(); ++i) tq[i] = pos(re, q->inv(le[i]));
  for (size_t i = 0; i < re.size(); ++i) tr[i] = pos(le, q->inv(re[i]));
  SupMap theta_q = validate_supmap(out.left_part.quantale->lat, out.right_part.quantale->lat, tq);
  SupMap theta_r = validate_supmap(out.right_part.quantale->lat, out.left_part.quantale->lat, tr);
  auto invres = tensor_involution(out.tensor, theta_q, theta_r);
  out.tensor.product = validate_quantale(out.tensor.product->lat, out.tensor.product->mult_,
                                         out.tensor.product->unit, invres.involution);
  return out;
}

TensorPrimesReport tensor_primes(const TensorQuantale& t) {
  PropertyReport pq = property_report(*t.left), pr = property_report(*t.right);
  if (!pq.get("semi-unital") || !pr.get("semi-unital") || !pq.get("left-sided") ||
      !pr.get("right-sided"))
    fail(ErrorKind::HypothesisFailed,
         "prime factorization needs a semi-unital left-sided (x) right-sided pair");
  TensorPrimesReport rep;
  rep.brute_force = spectrum(*t.product);
  const auto& prod = *t.product;
  std::map<Idx, std::pair<Idx, Idx>> factor_of;
  bool unique = true;
  for (Idx qp : spectrum(*t.left))
    for (Idx rp : spectrum(*t.right)) {
      Idx p = prod.lat->join(t.embed_left.table[qp], t.embed_right.table[rp]);
      auto [it, fresh] = factor_of.emplace(p, std::make_pair(qp, rp));
      if (!fresh && it->second != std::make_pair(qp, rp)) unique = false;
      (void)it;
    }
  for (auto& [p, f] : factor_of) {
    rep.from_formula.push_back(p);
    rep.factorization.push_back({p, f.first, f.second});
  }
  std::sort(rep.from_formula.begin(), rep.from_formula.end());
  rep.agree = rep.from_formula == rep.brute_force;
  rep.factors_unique = unique;
  return rep;
}

}  // namespace qlab
