#include "qlab/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace qlab {

namespace {

std::vector<Idx> closure_table(const Quantale& q, const std::vector<Idx>& fixed) {
  std::vector<Idx> c(q.size());
  for (int a = 0; a < q.size(); ++a) {
    Idx acc = q.top();
    for (Idx s : fixed)
      if (q.lat->leq(a, s)) acc = q.lat->meet(acc, s);
    c[a] = acc;
  }
  return c;
}

void check_nucleus_laws(const Quantale& q, const std::vector<Idx>& c) {
  for (int a = 0; a < q.size(); ++a) {
    if (!q.lat->leq(a, c[a]))
      fail(ErrorKind::InternalError, "closure not inflationary at '" + q.name(a) + "'");
    if (c[c[a]] != c[a])
      fail(ErrorKind::InternalError, "closure not idempotent at '" + q.name(a) + "'");
    for (int b = 0; b < q.size(); ++b) {
      if (q.lat->leq(a, b) && !q.lat->leq(c[a], c[b]))
        fail(ErrorKind::InternalError, "closure not monotone");
      if (!q.lat->leq(q.mult(c[a], c[b]), c[q.mult(a, b)]))
        fail(ErrorKind::InternalError,
             "nucleus law fails at ('" + q.name(a) + "','" + q.name(b) + "')");
    }
  }
}

}  // namespace

Nucleus nucleus_from_fixed(QPtr q, std::vector<Idx> fixed) {
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
  auto has = [&](Idx x) { return std::binary_search(fixed.begin(), fixed.end(), x); };
  if (!has(q->top())) fail(ErrorKind::NotAHom, "fixed set misses the top element");
  for (Idx s : fixed)
    for (Idx t : fixed)
      if (!has(q->lat->meet(s, t)))
        fail(ErrorKind::NotAHom, "fixed set not meet-closed at ('" + q->name(s) + "','" +
                                     q->name(t) + "')");
  for (Idx s : fixed)
    for (int a = 0; a < q->size(); ++a) {
      if (!has(right_implication(*q, a, s)))
        fail(ErrorKind::NotAHom,
             "fixed set not closed under the right implication from '" + q->name(a) + "'");
      if (!has(left_implication(*q, s, a)))
        fail(ErrorKind::NotAHom,
             "fixed set not closed under the left implication from '" + q->name(a) + "'");
    }
  Nucleus n;
  n.quantale = std::move(q);
  n.closure = closure_table(*n.quantale, fixed);
  n.fixed = std::move(fixed);
  check_nucleus_laws(*n.quantale, n.closure);
  return n;
}

Nucleus identity_nucleus(QPtr q) {
  std::vector<Idx> all(q->size());
  std::iota(all.begin(), all.end(), 0);
  return nucleus_from_fixed(std::move(q), std::move(all));
}

Nucleus nucleus_of_hom(QPtr dom, const Quantale& cod, const std::vector<Idx>& h) {
  std::string w;
  if (!hom_check(*dom, cod, h, HomKind::Hom, &w)) fail(ErrorKind::NotAHom, w);
  SupMap hm{dom->lat, cod.lat, h};
  auto adj = right_adjoint(hm);
  std::vector<Idx> fixed;
  for (int a = 0; a < dom->size(); ++a)
    if (adj[h[a]] == a) fixed.push_back(a);
  Nucleus n = nucleus_from_fixed(dom, fixed);
  for (int a = 0; a < dom->size(); ++a)
    if (n.closure[a] != adj[h[a]])
      fail(ErrorKind::InternalError, "fixed-point closure disagrees with the adjoint composite");
  return n;
}

bool is_involutive_nucleus(const Nucleus& n) {
  const Quantale& q = *n.quantale;
  if (!q.involutive()) fail(ErrorKind::NoInvolution, "nucleus involutivity needs an involution");
  bool ineq = true;
  for (int a = 0; a < q.size(); ++a)
    if (!q.lat->leq(q.inv(n.c(a)), n.c(q.inv(a)))) ineq = false;
  // cross-validation: the inequality is equivalent to conjugation invariance
  bool conj = true;
  for (int a = 0; a < q.size(); ++a)
    if (q.inv(n.c(q.inv(a))) != n.c(a)) conj = false;
  if (ineq != conj) fail(ErrorKind::InternalError, "involutivity criteria disagree");
  return ineq;
}

QuotientQuantale quotient_by(Nucleus n) {
  QPtr src = n.quantale;
  const auto& fixed = n.fixed;
  const int k = static_cast<int>(fixed.size());
  std::vector<Idx> pos(src->size(), -1);
  for (int i = 0; i < k; ++i) pos[fixed[i]] = i;
  std::vector<std::string> names;
  names.reserve(k);
  for (Idx s : fixed) names.push_back(src->name(s));
  std::vector<std::uint8_t> rel(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      rel[static_cast<size_t>(i) * k + j] = src->lat->leq(fixed[i], fixed[j]);
  LatPtr lat = validate_lattice_rel(std::move(names), std::move(rel));
  std::vector<Idx> mult(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      mult[static_cast<size_t>(i) * k + j] = pos[n.c(src->mult(fixed[i], fixed[j]))];
  QPtr quot = validate_quantale(lat, std::move(mult));
  std::vector<Idx> proj(src->size());
  for (int a = 0; a < src->size(); ++a) proj[a] = pos[n.c(a)];
  SupMap projection = validate_supmap(src->lat, quot->lat, proj);
  std::string w;
  if (!hom_check(*src, *quot, projection.table, HomKind::Hom, &w))
    fail(ErrorKind::InternalError, "projection is not a homomorphism: " + w);
  // projection composed with its right adjoint is the identity on the quotient
  auto adj = right_adjoint(projection);
  for (int v = 0; v < k; ++v)
    if (projection.table[adj[v]] != v)
      fail(ErrorKind::InternalError, "projection is not split by its adjoint");
  QuotientQuantale out;
  out.source = src;
  out.embed = fixed;
  out.nucleus = std::move(n);
  out.quotient = quot;
  out.projection = std::move(projection);
  return out;
}

Nucleus least_coequalizing_nucleus(QPtr q, const Quantale& src, const std::vector<Idx>& f,
                                   const std::vector<Idx>& g) {
  std::string w;
  if (!hom_check(src, *q, f, HomKind::Hom, &w)) fail(ErrorKind::NotHoms, "first map: " + w);
  if (!hom_check(src, *q, g, HomKind::Hom, &w)) fail(ErrorKind::NotHoms, "second map: " + w);

  // admissible elements: those that cannot tell f(x) from g(x)
  auto admissible = [&](Idx s) {
    for (int x = 0; x < src.size(); ++x)
      if (q->lat->leq(f[x], s) != q->lat->leq(g[x], s)) return false;
    return true;
  };
  std::vector<char> in(q->size(), 0);
  for (int s = 0; s < q->size(); ++s) in[s] = admissible(s);
  // keep only elements whose implications stay inside, to a fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < q->size(); ++s) {
      if (!in[s]) continue;
      for (int a = 0; a < q->size(); ++a) {
        if (!in[right_implication(*q, a, s)] || !in[left_implication(*q, s, a)]) {
          in[s] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<Idx> fixed;
  for (int s = 0; s < q->size(); ++s)
    if (in[s]) fixed.push_back(s);
  Nucleus n = nucleus_from_fixed(q, fixed);

  // minimality certificate: adjoining any admissible outsider breaks closure
  auto probe = [&](std::set<Idx> cur) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Idx> items(cur.begin(), cur.end());
      for (Idx s : items) {
        if (!admissible(s)) return false;
        for (Idx t : items)
          if (cur.insert(q->lat->meet(s, t)).second) grew = true;
        for (int a = 0; a < q->size(); ++a) {
          if (cur.insert(right_implication(*q, a, s)).second) grew = true;
          if (cur.insert(left_implication(*q, s, a)).second) grew = true;
        }
      }
    }
    for (Idx s : cur)
      if (!admissible(s)) return false;
    return true;
  };
  for (int s = 0; s < q->size(); ++s) {
    if (in[s] || !admissible(s)) continue;
    std::set<Idx> start(fixed.begin(), fixed.end());
    start.insert(s);
    if (probe(std::move(start)))
      fail(ErrorKind::InternalError, "a larger admissible fixed set exists; nucleus not least");
  }
  if (q->size() <= 12) {
    // exhaustive cross-check over subsets of the admissible region
    std::vector<Idx> adm;
    for (int s = 0; s < q->size(); ++s)
      if (admissible(s)) adm.push_back(s);
    const int m = static_cast<int>(adm.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::set<Idx> cand;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) cand.insert(adm[i]);
      cand.insert(q->top());
      bool closed = true;
      for (Idx s : cand) {
        for (Idx t : cand)
          if (!cand.count(q->lat->meet(s, t))) closed = false;
        for (int a = 0; a < q->size() && closed; ++a)
          if (!cand.count(right_implication(*q, a, s)) ||
              !cand.count(left_implication(*q, s, a)))
            closed = false;
        if (!closed) break;
      }
      if (!closed) continue;
      for (Idx s : cand)
        if (!in[s])
          fail(ErrorKind::InternalError, "exhaustive scan found a larger coequalizing nucleus");
    }
  }
  return n;
}

QuotientQuantale coequalizer(QPtr q, const Quantale& src, const std::vector<Idx>& f,
                             const std::vector<Idx>& g) {
  return quotient_by(least_coequalizing_nucleus(std::move(q), src, f, g));
}

bool coequalizer_universal_property(const QuotientQuantale& quot, const Quantale& src,
                                    const std::vector<Idx>& f, const std::vector<Idx>& g,
                                    const Quantale& cod) {
  const Quantale& q = *quot.source;
  auto homs = enumerate_homs(q, cod);
  auto quot_homs = enumerate_homs(*quot.quotient, cod);
  for (auto& k : homs) {
    bool equalizes = true;
    for (int x = 0; x < src.size(); ++x)
      if (k[f[x]] != k[g[x]]) equalizes = false;
    if (!equalizes) continue;
    int factorings = 0;
    for (auto& kb : quot_homs) {
      bool matches = true;
      for (int a = 0; a < q.size(); ++a)
        if (kb[quot.projection.table[a]] != k[a]) matches = false;
      if (matches) factorings++;
    }
    if (factorings != 1) return false;
  }
  return true;
}

std::vector<Idx> induce_involution(const QuotientQuantale& quot) {
  const Quantale& src = *quot.source;
  if (!src.involutive()) fail(ErrorKind::NoInvolution, "source carries no involution");
  if (!is_involutive_nucleus(quot.nucleus))
    fail(ErrorKind::NucleusNotInvolutive, "the nucleus does not commute with the involution");
  const int k = quot.quotient->size();
  std::vector<Idx> inv(k);
  for (int v = 0; v < k; ++v) inv[v] = quot.projection.table[src.inv(quot.embed[v])];
  // re-validate and confirm the projection becomes involutive
  QPtr with =
      validate_quantale(quot.quotient->lat, quot.quotient->mult_, quot.quotient->unit, inv);
  (void)with;
  for (int a = 0; a < src.size(); ++a)
    if (inv[quot.projection.table[a]] != quot.projection.table[src.inv(a)])
      fail(ErrorKind::InternalError, "projection fails to be involutive");
  return inv;
}

QuotientQuantale with_induced_involution(QuotientQuantale quot) {
  auto inv = induce_involution(quot);
  quot.quotient =
      validate_quantale(quot.quotient->lat, quot.quotient->mult_, quot.quotient->unit, inv);
  return quot;
}

Thm2Report coequalizer_involutivity_check(const TensorQuantale& t, const Quantale& src,
                                          const SupMap& q_left, const SupMap& q_right,
                                          const SupMap& theta_left, const SupMap& theta_right) {
  QPtr l = t.left, r = t.right;
  if (l->mult(l->top(), l->top()) != l->top() || r->mult(r->top(), r->top()) != r->top())
    fail(ErrorKind::HypothesisFailed, "factors must be balanced");
  std::string w;
  if (!hom_check(src, *l, q_left.table, HomKind::StrongHom, &w))
    fail(ErrorKind::HypothesisFailed, "left leg: " + w);
  if (!hom_check(src, *r, q_right.table, HomKind::StrongHom, &w))
    fail(ErrorKind::HypothesisFailed, "right leg: " + w);
  auto invres = tensor_involution(t, theta_left, theta_right);
  if (!invres.diagram_commutes)
    fail(ErrorKind::HypothesisFailed, "embedding diagram does not commute with the involution");

  const int n = src.size();
  std::vector<Idx> f(n), g(n), ft(n), gt(n);
  for (int x = 0; x < n; ++x) {
    f[x] = t.embed_left.table[q_left.table[x]];
    g[x] = t.embed_right.table[q_right.table[x]];
    ft[x] = t.embed_left.table[theta_right.table[q_right.table[x]]];
    gt[x] = t.embed_right.table[theta_left.table[q_left.table[x]]];
  }
  Thm2Report rep;
  rep.straight = least_coequalizing_nucleus(t.product, src, f, g);
  rep.twisted = least_coequalizing_nucleus(t.product, src, ft, gt);
  rep.nuclei_equal = rep.straight.fixed == rep.twisted.fixed;
  QPtr with_inv =
      validate_quantale(t.product->lat, t.product->mult_, t.product->unit, invres.involution);
  Nucleus straight_on_inv = rep.straight;
  straight_on_inv.quantale = with_inv;
  rep.straight_involutive = is_involutive_nucleus(straight_on_inv);
  rep.equivalence_holds = rep.straight_involutive == rep.nuclei_equal;
  return rep;
}

namespace {

QPtr ensure_involution(QPtr q, std::string* failed) {
  if (q->involutive()) return q;
  PropertyReport pr = property_report(*q);
  if (pr.get("commutative")) {
    std::vector<Idx> id(q->size());
    std::iota(id.begin(), id.end(), 0);
    return validate_quantale(q->lat, q->mult_, q->unit, id);
  }
  if (failed) *failed = "involutive";
  return nullptr;
}

}  // namespace

QuanticFrameReport quantic_frame_check(QPtr q_in) {
  QuanticFrameReport rep;
  QPtr q = ensure_involution(q_in, &rep.failed_precondition);
  if (!q) return rep;
  PropertyReport pr = property_report(*q);
  for (const char* pre : {"bisymmetric", "semi-unital"})
    if (!pr.get(pre)) {
      rep.failed_precondition = pre;
      return rep;
    }
  rep.preconditions_ok = true;

  rep.cond_idempotent_sided = true;
  for (int a = 0; a < q->size(); ++a)
    if ((is_left_sided_elem(*q, a) || is_right_sided_elem(*q, a)) && q->mult(a, a) != a) {
      rep.cond_idempotent_sided = false;
      rep.witness = "non-idempotent sided element '" + q->name(a) + "'";
    }
  rep.cond_hermitian_two_sided = true;
  for (int a = 0; a < q->size(); ++a)
    if (is_two_sided_elem(*q, a) && q->inv(a) != a) {
      rep.cond_hermitian_two_sided = false;
      rep.witness = "non-hermitian two-sided element '" + q->name(a) + "'";
    }

  rep.tensor = std::make_shared<TensoriallyInvolutive>(tensorially_involutive(q));
  const TensorQuantale& t = rep.tensor->tensor;
  const auto& le = rep.tensor->left_part.elements;
  const auto& re = rep.tensor->right_part.elements;
  const int nt = t.product->size();

  // comparison map: join-extension of alpha (x) beta |-> beta * alpha
  rep.comparison.assign(nt, q->bottom());
  for (int i = 0; i < nt; ++i) {
    Idx acc = q->bottom();
    for (size_t a = 0; a < le.size(); ++a)
      for (size_t b = 0; b < re.size(); ++b)
        if (t.members[i].get(static_cast<int>(a * re.size() + b)))
          acc = q->lat->join(acc, q->mult(re[b], le[a]));
    rep.comparison[i] = acc;
  }
  std::string w;
  if (!hom_check(*t.product, *q, rep.comparison, HomKind::StrongHom, &w)) {
    rep.cond_pushout = false;
    rep.witness = "comparison map is not a strong homomorphism: " + w;
    rep.is_quantic_frame = false;
    return rep;
  }

  // coequalizer data: both legs embed the two-sided part
  Subquantale ipart = sided_subquantale(q, 'I');
  const auto& ie = ipart.elements;
  auto pos_of = [](const std::vector<Idx>& v, Idx x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x)
      fail(ErrorKind::InternalError, "two-sided element escapes a sided part");
    return static_cast<Idx>(it - v.begin());
  };
  std::vector<Idx> f(ie.size()), g(ie.size());
  for (size_t x = 0; x < ie.size(); ++x) {
    f[x] = t.embed_left.table[pos_of(le, ie[x])];
    g[x] = t.embed_right.table[pos_of(re, ie[x])];
  }
  for (size_t x = 0; x < ie.size(); ++x)
    if (rep.comparison[f[x]] != rep.comparison[g[x]])
      fail(ErrorKind::InternalError, "comparison map fails to equalize the canonical pair");

  rep.comparison_nucleus = nucleus_of_hom(t.product, *q, rep.comparison);
  rep.least_nucleus = least_coequalizing_nucleus(t.product, *ipart.quantale, f, g);
  bool surjective;
  {
    std::vector<char> hit(q->size(), 0);
    for (Idx v : rep.comparison) hit[v] = 1;
    surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }
  rep.cond_pushout = surjective && rep.comparison_nucleus.fixed == rep.least_nucleus.fixed;
  if (!rep.cond_pushout && rep.witness.empty()) {
    if (!surjective)
      rep.witness = "comparison map is not surjective";
    else
      for (int u = 0; u < nt && rep.witness.empty(); ++u)
        for (int v = 0; v < nt; ++v)
          if (u != v && rep.comparison[u] == rep.comparison[v] &&
              rep.least_nucleus.c(u) != rep.least_nucleus.c(v)) {
            rep.witness = "comparison identifies '" + t.product->name(u) + "' and '" +
                          t.product->name(v) + "' beyond the coequalizer";
            break;
          }
  }
  rep.is_quantic_frame = rep.preconditions_ok && rep.cond_idempotent_sided &&
                         rep.cond_hermitian_two_sided && rep.cond_pushout;
  return rep;
}

PushoutSpectrumResult spectrum_pushout(QPtr left, QPtr right, QPtr part, const SupMap& q_left,
                                       const SupMap& q_right, const SupMap& theta_left,
                                       const SupMap& theta_right) {
  PropertyReport pl = property_report(*left), pr = property_report(*right);
  if (!pl.get("left-sided") || !pl.get("semi-unital"))
    fail(ErrorKind::HypothesisFailed, "left factor must be left-sided and semi-unital");
  if (!pr.get("right-sided") || !pr.get("semi-unital"))
    fail(ErrorKind::HypothesisFailed, "right factor must be right-sided and semi-unital");
  std::string w;
  if (!hom_check(*part, *left, q_left.table, HomKind::StrongHom, &w))
    fail(ErrorKind::HypothesisFailed, "left leg: " + w);
  if (!hom_check(*part, *right, q_right.table, HomKind::StrongHom, &w))
    fail(ErrorKind::HypothesisFailed, "right leg: " + w);
  for (int x = 0; x < part->size(); ++x) {
    if (theta_left.table[q_left.table[x]] != q_right.table[x])
      fail(ErrorKind::HypothesisFailed, "legs are not exchanged by the left anti-isomorphism");
    if (theta_right.table[q_right.table[x]] != q_left.table[x])
      fail(ErrorKind::HypothesisFailed, "legs are not exchanged by the right anti-isomorphism");
  }

  auto tensor = std::make_shared<TensorQuantale>(tensor_quantale(left, right));
  auto invres = tensor_involution(*tensor, theta_left, theta_right);
  tensor->product = validate_quantale(tensor->product->lat, tensor->product->mult_,
                                      tensor->product->unit, invres.involution);
  std::vector<Idx> f(part->size()), g(part->size());
  for (int x = 0; x < part->size(); ++x) {
    f[x] = tensor->embed_left.table[q_left.table[x]];
    g[x] = tensor->embed_right.table[q_right.table[x]];
  }
  QuotientQuantale quot = coequalizer(tensor->product, *part, f, g);
  quot = with_induced_involution(std::move(quot));

  PushoutSpectrumResult out;
  out.tensor = tensor;
  // the left factor lands isomorphically onto the left-sided part
  std::vector<Idx> lmap(left->size());
  for (int a = 0; a < left->size(); ++a)
    lmap[a] = quot.projection.table[tensor->embed_left.table[a]];
  std::set<Idx> image(lmap.begin(), lmap.end());
  bool injective = image.size() == lmap.size();
  bool hom_ok = hom_check(*left, *quot.quotient, lmap, HomKind::StrongHom);
  std::set<Idx> lster;
  for (int v = 0; v < quot.quotient->size(); ++v)
    if (is_left_sided_elem(*quot.quotient, v)) lster.insert(v);
  out.left_part_isomorphic = injective && hom_ok && image == lster;
  out.quotient = std::move(quot);
  return out;
}

Prop4Report prop4_suite(QPtr q_in) {
  QuanticFrameReport frame = quantic_frame_check(q_in);
  if (!frame.is_quantic_frame)
    fail(ErrorKind::NotAQuanticFrame,
         frame.preconditions_ok ? "pushout conditions fail: " + frame.witness
                                : "precondition fails: " + frame.failed_precondition);
  QPtr q = frame.tensor->left_part.parent;  // the involution-equipped copy
  const TensorQuantale& t = frame.tensor->tensor;
  const auto& le = frame.tensor->left_part.elements;
  const auto& re = frame.tensor->right_part.elements;

  Prop4Report rep;
  Subquantale ipart = sided_subquantale(q, 'I');
  rep.ideal_part_zdf = !has_zero_divisors(*ipart.quantale);
  if (rep.ideal_part_zdf) {
    for (size_t a = 0; a < le.size(); ++a)
      for (size_t b = 0; b < re.size(); ++b) {
        if (le[a] == q->bottom() || re[b] == q->bottom()) continue;
        if (frame.comparison[t.elem(static_cast<Idx>(a), static_cast<Idx>(b))] == q->bottom())
          rep.sided_products_nonzero = false;
      }
  }

  rep.projection_involutive = true;
  for (int i = 0; i < t.product->size(); ++i)
    if (frame.comparison[t.product->inv(i)] != q->inv(frame.comparison[i]))
      rep.projection_involutive = false;

  SupMap pi{t.product->lat, q->lat, frame.comparison};
  auto adj = right_adjoint(pi);
  auto herm_q = hermitian_spectrum(*q);
  auto herm_t = hermitian_spectrum(*t.product);
  std::set<Idx> image_up;
  rep.adjoint_bijects_spectra = true;
  for (Idx p : herm_q) {
    Idx up = adj[p];
    if (!std::binary_search(herm_t.begin(), herm_t.end(), up))
      rep.adjoint_bijects_spectra = false;
    image_up.insert(up);
  }
  if (image_up.size() != herm_q.size() ||
      image_up != std::set<Idx>(herm_t.begin(), herm_t.end()))
    rep.adjoint_bijects_spectra = false;
  std::set<Idx> image_down;
  rep.projection_bijects_spectra = true;
  for (Idx p : herm_t) {
    Idx dw = frame.comparison[p];
    if (!std::binary_search(herm_q.begin(), herm_q.end(), dw))
      rep.projection_bijects_spectra = false;
    image_down.insert(dw);
    if (adj[dw] != p) rep.projection_bijects_spectra = false;  // inverse to (c)
  }
  if (image_down != std::set<Idx>(herm_q.begin(), herm_q.end()))
    rep.projection_bijects_spectra = false;

  rep.zero_divisor_equivalence = (!has_zero_divisors(*q)) == rep.ideal_part_zdf;

  const Subquantale& lpart = frame.tensor->left_part;
  auto lspec = spectrum(*lpart.quantale);
  std::set<Idx> phi_image;
  rep.phi_bijection = true;
  for (Idx p : lspec) {
    Idx parent = lpart.elements[p];
    Idx phi = q->lat->join(parent, q->inv(parent));
    rep.phi.emplace_back(parent, phi);
    if (!std::binary_search(herm_q.begin(), herm_q.end(), phi)) rep.phi_bijection = false;
    phi_image.insert(phi);
  }
  if (phi_image.size() != lspec.size() ||
      phi_image != std::set<Idx>(herm_q.begin(), herm_q.end()))
    rep.phi_bijection = false;
  return rep;
}

}  // namespace qlab
