#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "qlab/quotient.hpp"

using namespace qlab;
using namespace qlab::fixtures;

namespace {

SupMap id_map(QPtr q) { return identity_supmap(q->lat); }

std::vector<Idx> identity_table(int n) {
  std::vector<Idx> t(n);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

}  // namespace

TEST_CASE("identity homomorphism induces the identity nucleus") {
  QPtr q = catalog("q2");
  Nucleus n = nucleus_of_hom(q, *q, identity_table(q->size()));
  CHECK(static_cast<int>(n.fixed.size()) == q->size());
}

TEST_CASE("projection of a quotient recovers its nucleus") {
  QPtr q = catalog("q2");
  // nucleus with fixed points {bot, a_l, top}
  Nucleus n = nucleus_from_fixed(
      q, {q->index_of("bot"), q->index_of("a_l"), q->index_of("top")});
  QuotientQuantale quot = quotient_by(n);
  Nucleus again = nucleus_of_hom(q, *quot.quotient, quot.projection.table);
  CHECK(again.fixed == n.fixed);
}

TEST_CASE("non-homomorphism is rejected with NotAHom") {
  QPtr q = catalog("q2");
  QPtr two = catalog("two");
  // collapse everything nonzero to top: h(b * b) = top but h(b)*h(b) = top, fine;
  // join-preservation holds; the multiplicative law fails for the trivial source
  std::vector<Idx> t(q->size(), two->top());
  t[q->bottom()] = two->bottom();
  // this one happens to be a hom for q2 (no zero divisors); break it instead
  QPtr triv = catalog("c3trivial");
  std::vector<Idx> bad(triv->size(), two->top());
  bad[triv->bottom()] = two->bottom();
  try {
    nucleus_of_hom(triv, *two, bad);
    CHECK(false);
  } catch (const qlab_error& e) {
    CHECK(e.kind() == ErrorKind::NotAHom);
  }
}

TEST_CASE("collapse-to-top map on q2 is a hom and gives a two-point fixed set") {
  QPtr q = catalog("q2");
  QPtr two = catalog("two");
  std::vector<Idx> t(q->size(), two->top());
  t[q->bottom()] = two->bottom();
  CHECK(hom_check(*q, *two, t, HomKind::Hom));
  Nucleus n = nucleus_of_hom(q, *two, t);
  CHECK(n.fixed == std::vector<Idx>{q->bottom(), q->top()});
}

TEST_CASE("involutive nuclei") {
  QPtr q = catalog("q2");
  CHECK(is_involutive_nucleus(identity_nucleus(q)));
  // involution-stable fixed set
  Nucleus stable = nucleus_from_fixed(q, {q->index_of("bot"), q->index_of("top")});
  CHECK(is_involutive_nucleus(stable));
  // one-sided fixed set is not involutive
  Nucleus onesided = nucleus_from_fixed(
      q, {q->index_of("bot"), q->index_of("a_l"), q->index_of("top")});
  CHECK(!is_involutive_nucleus(onesided));
}

TEST_CASE("bad fixed sets are rejected") {
  QPtr q = catalog("q2");
  // missing implications: {top} alone is not implication-closed on q2
  CHECK_THROWS_AS(nucleus_from_fixed(q, {q->index_of("top"), q->index_of("a_r")}), qlab_error);
}

TEST_CASE("equal maps coequalize by the identity nucleus") {
  QPtr q = catalog("q2");
  QPtr two = catalog("two");
  std::vector<Idx> f = {q->bottom(), q->top()};
  Nucleus n = least_coequalizing_nucleus(q, *two, f, f);
  CHECK(static_cast<int>(n.fixed.size()) == q->size());
}

TEST_CASE("canonical pair on the q2 tensor coequalizes trivially") {
  auto ti = tensorially_involutive(catalog("q2"));
  QPtr part = catalog("two");
  const auto& t = ti.tensor;
  // both legs send top to top(x)top and bot to bot
  std::vector<Idx> f = {t.product->bottom(),
                        t.embed_left.table[ti.left_part.quantale->lat->top]};
  std::vector<Idx> g = {t.product->bottom(),
                        t.embed_right.table[ti.right_part.quantale->lat->top]};
  CHECK(f == g);
  QuotientQuantale quot = coequalizer(t.product, *part, f, g);
  CHECK(quot.quotient->size() == t.product->size());
  CHECK(quantale_isomorphism(*quot.quotient, *catalog("q2")).has_value());
}

TEST_CASE("frame tensor collapses onto the frame along the fold") {
  QPtr f3 = frame_on(chain_lattice(3));
  auto t = tensor_quantale(f3, f3);
  CHECK(t.product->size() == 6);
  std::vector<Idx> fl(f3->size()), gr(f3->size());
  for (int i = 0; i < f3->size(); ++i) {
    fl[i] = t.embed_left.table[i];
    gr[i] = t.embed_right.table[i];
  }
  QuotientQuantale quot = coequalizer(t.product, *f3, fl, gr);
  CHECK(quot.quotient->size() == 3);
  CHECK(quantale_isomorphism(*quot.quotient, *f3).has_value());
}

TEST_CASE("coequalizer universal property on small instances") {
  // identity pair: everything factors
  QPtr q = catalog("q2");
  QPtr two = catalog("two");
  std::vector<Idx> f = {q->bottom(), q->top()};
  QuotientQuantale quot = coequalizer(q, *two, f, f);
  for (auto cod : {catalog("two"), catalog("c3l"), catalog("c3trivial"), catalog("q2")})
    CHECK(coequalizer_universal_property(quot, *two, f, f, *cod));

  // genuinely collapsing pair on the frame tensor
  QPtr f3 = frame_on(chain_lattice(3));
  auto t = tensor_quantale(f3, f3);
  std::vector<Idx> fl(f3->size()), gr(f3->size());
  for (int i = 0; i < f3->size(); ++i) {
    fl[i] = t.embed_left.table[i];
    gr[i] = t.embed_right.table[i];
  }
  QuotientQuantale quot2 = coequalizer(t.product, *f3, fl, gr);
  for (auto cod : {catalog("two"), catalog("c3l"), catalog("c3r"), catalog("q2")})
    CHECK(coequalizer_universal_property(quot2, *f3, fl, gr, *cod));
}

TEST_CASE("identity nucleus transports the involution unchanged") {
  QPtr q = catalog("q2");
  QuotientQuantale quot = quotient_by(identity_nucleus(q));
  auto inv = induce_involution(quot);
  for (int i = 0; i < q->size(); ++i) CHECK(inv[i] == q->inv(i));
}

TEST_CASE("non-involutive nucleus refuses an induced involution") {
  QPtr q = catalog("q2");
  Nucleus onesided = nucleus_from_fixed(
      q, {q->index_of("bot"), q->index_of("a_l"), q->index_of("top")});
  QuotientQuantale quot = quotient_by(onesided);
  try {
    induce_involution(quot);
    CHECK(false);
  } catch (const qlab_error& e) {
    CHECK(e.kind() == ErrorKind::NucleusNotInvolutive);
  }
  // the converse direction: no involution on the quotient makes the
  // projection involutive
  bool any = false;
  for (auto& ell : find_involutions(*quot.quotient)) {
    bool commutes = true;
    for (int a = 0; a < q->size(); ++a)
      if (ell[quot.projection.table[a]] != quot.projection.table[q->inv(a)]) commutes = false;
    any = any || commutes;
  }
  CHECK(!any);
}

TEST_CASE("coequalizer involutivity equivalence on the q2 tensor") {
  QPtr l = catalog("c3l"), r = catalog("c3r");
  auto t = tensor_quantale(l, r);
  QPtr part = catalog("two");
  SupMap ql = validate_supmap(part->lat, l->lat,
                              std::vector<std::pair<std::string, std::string>>{
                                  {"bot", "bot"}, {"top", "top"}});
  SupMap qr = validate_supmap(part->lat, r->lat,
                              std::vector<std::pair<std::string, std::string>>{
                                  {"bot", "bot"}, {"top", "top"}});
  SupMap tl = validate_supmap(l->lat, r->lat, identity_table(3));
  SupMap tr = validate_supmap(r->lat, l->lat, identity_table(3));
  auto rep = coequalizer_involutivity_check(t, *part, ql, qr, tl, tr);
  CHECK(rep.straight_involutive);
  CHECK(rep.nuclei_equal);
  CHECK(rep.equivalence_holds);
}

TEST_CASE("involutivity check rejects non-commuting diagrams") {
  QPtr l = catalog("c3l"), r = catalog("c3r");
  auto t = tensor_quantale(l, r);
  QPtr part = catalog("two");
  SupMap ql = validate_supmap(part->lat, l->lat,
                              std::vector<std::pair<std::string, std::string>>{
                                  {"bot", "bot"}, {"top", "top"}});
  // a leg that is not a strong homomorphism
  SupMap bad = validate_supmap(part->lat, r->lat,
                               std::vector<std::pair<std::string, std::string>>{
                                   {"bot", "bot"}, {"top", "a"}});
  SupMap tl = validate_supmap(l->lat, r->lat, identity_table(3));
  SupMap tr = validate_supmap(r->lat, l->lat, identity_table(3));
  CHECK_THROWS_AS(coequalizer_involutivity_check(t, *part, ql, bad, tl, tr), qlab_error);
}

TEST_CASE("q2 is a quantic frame") {
  auto rep = quantic_frame_check(catalog("q2"));
  CHECK(rep.preconditions_ok);
  CHECK(rep.cond_idempotent_sided);
  CHECK(rep.cond_hermitian_two_sided);
  CHECK(rep.cond_pushout);
  CHECK(rep.is_quantic_frame);
}

TEST_CASE("finite frames are quantic frames") {
  for (QPtr f : {catalog("two"), diamond_frame(), frame_on(chain_lattice(3))}) {
    auto rep = quantic_frame_check(f);
    CHECK(rep.is_quantic_frame);
  }
}

TEST_CASE("a commutative frame without a declared involution still certifies") {
  QPtr f = frame_on(chain_lattice(4));
  QPtr no_inv = validate_quantale(f->lat, f->mult_, f->unit);
  CHECK(quantic_frame_check(no_inv).is_quantic_frame);
}

TEST_CASE("non-involutive quantales fail the preconditions by name") {
  auto rep = quantic_frame_check(catalog("c3l"));
  CHECK(!rep.preconditions_ok);
  CHECK(rep.failed_precondition == "involutive");
}

TEST_CASE("pushout spectrum of the chain pair is q2") {
  QPtr l = catalog("c3l"), r = catalog("c3r"), part = catalog("two");
  SupMap ql = validate_supmap(part->lat, l->lat,
                              std::vector<std::pair<std::string, std::string>>{
                                  {"bot", "bot"}, {"top", "top"}});
  SupMap qr = validate_supmap(part->lat, r->lat,
                              std::vector<std::pair<std::string, std::string>>{
                                  {"bot", "bot"}, {"top", "top"}});
  SupMap tl = validate_supmap(l->lat, r->lat, identity_table(3));
  SupMap tr = validate_supmap(r->lat, l->lat, identity_table(3));
  auto res = spectrum_pushout(l, r, part, ql, qr, tl, tr);
  CHECK(res.left_part_isomorphic);
  CHECK(quantale_isomorphism(*res.quotient.quotient, *catalog("q2"), true).has_value());
}

TEST_CASE("pushout spectrum of a commutative frame is the frame itself") {
  QPtr f = diamond_frame();
  SupMap idm = id_map(f);
  auto res = spectrum_pushout(f, f, f, idm, idm, idm, idm);
  CHECK(res.left_part_isomorphic);
  auto iso = quantale_isomorphism(*res.quotient.quotient, *f, true);
  CHECK(iso.has_value());
  // identity involution on the result
  for (int v = 0; v < res.quotient.quotient->size(); ++v)
    CHECK(res.quotient.quotient->inv(v) == v);
}

TEST_CASE("pushout spectrum rejects mismatched hypotheses") {
  QPtr l = catalog("c3l"), r = catalog("c3r"), part = catalog("two");
  SupMap ql = validate_supmap(part->lat, l->lat,
                              std::vector<std::pair<std::string, std::string>>{
                                  {"bot", "bot"}, {"top", "top"}});
  SupMap qr = validate_supmap(part->lat, r->lat,
                              std::vector<std::pair<std::string, std::string>>{
                                  {"bot", "bot"}, {"top", "top"}});
  SupMap tl = validate_supmap(l->lat, r->lat, identity_table(3));
  SupMap tr = validate_supmap(r->lat, l->lat, identity_table(3));
  CHECK_THROWS_AS(spectrum_pushout(r, l, part, qr, ql, tr, tl), qlab_error);
}

TEST_CASE("hermitian spectra and the join bijection on q2") {
  auto rep = prop4_suite(catalog("q2"));
  CHECK(rep.ideal_part_zdf);
  CHECK(rep.sided_products_nonzero);
  CHECK(rep.projection_involutive);
  CHECK(rep.adjoint_bijects_spectra);
  CHECK(rep.projection_bijects_spectra);
  CHECK(rep.zero_divisor_equivalence);
  CHECK(rep.phi_bijection);
  QPtr q = catalog("q2");
  std::set<std::pair<std::string, std::string>> pairs;
  for (auto& [a, b] : rep.phi) pairs.insert({q->name(a), q->name(b)});
  CHECK(pairs == std::set<std::pair<std::string, std::string>>{{"bot", "bot"}, {"a_l", "c"}});
}

TEST_CASE("prop4 suite trivializes on frames and respects zero divisors") {
  auto rep = prop4_suite(diamond_frame());
  CHECK(rep.projection_involutive);
  CHECK(rep.adjoint_bijects_spectra);
  CHECK(rep.projection_bijects_spectra);
  CHECK(rep.phi_bijection);
  // the diamond frame has zero divisors and so does its two-sided part
  CHECK(!rep.ideal_part_zdf);
  CHECK(rep.zero_divisor_equivalence);
  CHECK_THROWS_AS(prop4_suite(catalog("c3l")), qlab_error);
}

TEST_CASE("certified quantic frames carry the expected flags") {
  for (QPtr q : {catalog("q2"), catalog("two"), diamond_frame(), frame_on(chain_lattice(3))}) {
    REQUIRE(quantic_frame_check(q).is_quantic_frame);
    auto r = property_report(*q);
    CHECK(r.get("semi-unital"));
    CHECK(r.get("semi-integral"));
    CHECK(r.get("pre-idempotent"));
  }
}
