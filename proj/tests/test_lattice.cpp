#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlab/lattice.hpp"

using namespace qlab;

namespace {

LatPtr chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> order;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) order.push_back({names[i], names[i + 1]});
  return validate_lattice(names, order);
}

LatPtr diamond() {
  return validate_lattice({"bot", "u", "v", "top"},
                          {{"bot", "u"}, {"bot", "v"}, {"u", "top"}, {"v", "top"}});
}

// all joins of arbitrary subsets preserved (independent of the binary check)
bool preserves_all_subset_joins(const SupMap& f) {
  const auto& d = *f.dom;
  const auto& c = *f.cod;
  for (std::uint32_t mask = 0; mask < (1u << d.size()); ++mask) {
    std::vector<Idx> sub;
    for (int i = 0; i < d.size(); ++i)
      if (mask & (1u << i)) sub.push_back(i);
    Idx j = d.join_all(sub);
    Idx img = c.bottom;
    for (Idx x : sub) img = c.join(img, f.table[x]);
    if (f.table[j] != img) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("two-chain validates with the expected bounds") {
  auto l = validate_lattice({"0", "1"}, {{"0", "1"}});
  CHECK(l->bottom == l->index_of("0"));
  CHECK(l->top == l->index_of("1"));
  CHECK(check_all_subset_bounds(*l));
}

TEST_CASE("three-chain validates") {
  auto l = validate_lattice({"bot", "a", "top"}, {{"bot", "a"}, {"a", "top"}});
  CHECK(l->size() == 3);
  CHECK(l->join(l->index_of("a"), l->index_of("bot")) == l->index_of("a"));
  CHECK(check_all_subset_bounds(*l));
}

TEST_CASE("poset without a join is rejected") {
  // N-shaped: a,b incomparable above bot, two incomparable tops
  CHECK_THROWS_AS(validate_lattice({"bot", "a", "b", "s", "t"},
                                   {{"bot", "a"}, {"bot", "b"}, {"a", "s"}, {"a", "t"},
                                    {"b", "s"}, {"b", "t"}}),
                  qlab_error);
  try {
    validate_lattice({"bot", "a", "b", "s", "t"}, {{"bot", "a"}, {"bot", "b"}, {"a", "s"},
                                                   {"a", "t"}, {"b", "s"}, {"b", "t"}});
  } catch (const qlab_error& e) {
    CHECK(e.kind() == ErrorKind::NotALattice);
  }
}

TEST_CASE("cycles are rejected as posets") {
  CHECK_THROWS_AS(validate_lattice({"a", "b"}, {{"a", "b"}, {"b", "a"}}), qlab_error);
}

TEST_CASE("empty joins and meets hit the bounds") {
  auto l = chain(3);
  CHECK(lattice_join(*l, {}) == l->bottom);
  CHECK(lattice_meet(*l, {}) == l->top);
  CHECK(lattice_join(*l, {"x1", "x2"}) == l->index_of("x2"));
  CHECK(lattice_meet(*l, {"x1", "x2"}) == l->index_of("x1"));
  CHECK_THROWS_AS(lattice_join(*l, {"nope"}), qlab_error);
}

TEST_CASE("diamond meet of incomparable atoms") {
  auto l = diamond();
  CHECK(l->meet(l->index_of("u"), l->index_of("v")) == l->bottom);
  CHECK(l->join(l->index_of("u"), l->index_of("v")) == l->top);
}

TEST_CASE("identity is a valid sup map and its own adjoint") {
  auto l = diamond();
  auto id = identity_supmap(l);
  CHECK(is_isomorphism(id));
  auto adj = right_adjoint(id);
  for (int i = 0; i < l->size(); ++i) CHECK(adj[i] == i);
}

TEST_CASE("order-reversing map on the three-chain is rejected") {
  auto l = chain(3);
  std::vector<Idx> t = {l->bottom, l->index_of("x2"), l->index_of("x1")};
  CHECK_THROWS_AS(validate_supmap(l, l, t), qlab_error);
}

TEST_CASE("map not preserving bottom is rejected") {
  auto l = chain(2);
  std::vector<Idx> t = {l->top, l->top};
  try {
    validate_supmap(l, l, t);
    CHECK(false);
  } catch (const qlab_error& e) {
    CHECK(e.kind() == ErrorKind::BottomNotPreserved);
  }
}

TEST_CASE("galois property of the right adjoint, exhaustively") {
  auto d = diamond();
  auto c = chain(3);
  SupMap f = validate_supmap(
      d, c, std::vector<std::pair<std::string, std::string>>{
                {"bot", "x0"}, {"u", "x1"}, {"v", "x2"}, {"top", "x2"}});
  auto adj = right_adjoint(f);
  for (int a = 0; a < d->size(); ++a)
    for (int b = 0; b < c->size(); ++b)
      CHECK(c->leq(f.table[a], b) == d->leq(a, adj[b]));
}

TEST_CASE("surjective sup map composed with its adjoint is the identity on the codomain") {
  auto d = diamond();
  auto c = chain(3);
  SupMap f = validate_supmap(
      d, c, std::vector<std::pair<std::string, std::string>>{
                {"bot", "x0"}, {"u", "x1"}, {"v", "x2"}, {"top", "x2"}});
  auto adj = right_adjoint(f);
  for (int b = 0; b < c->size(); ++b) CHECK(f.table[adj[b]] == b);
}

TEST_CASE("binary join preservation equals all-subset preservation on small lattices") {
  // brute-force oracle over every self-map of lattices with <= 4 elements
  for (auto l : {chain(2), chain(3), diamond()}) {
    const int n = l->size();
    std::vector<Idx> t(n, 0);
    size_t total = 1;
    for (int i = 0; i < n; ++i) total *= n;
    for (size_t it = 0; it < total; ++it) {
      size_t v = it;
      for (int i = 0; i < n; ++i) {
        t[i] = static_cast<Idx>(v % n);
        v /= n;
      }
      bool binary_ok = t[l->bottom] == l->bottom && is_join_preserving_table(*l, *l, t);
      SupMap f{l, l, t};
      CHECK(binary_ok == preserves_all_subset_joins(f));
    }
  }
}

TEST_CASE("compose and isomorphism checks") {
  auto l = diamond();
  // swap the two atoms
  SupMap swp = validate_supmap(l, l, std::vector<std::pair<std::string, std::string>>{
                                         {"bot", "bot"}, {"u", "v"}, {"v", "u"}, {"top", "top"}});
  CHECK(is_isomorphism(swp));
  auto twice = compose(swp, swp);
  for (int i = 0; i < l->size(); ++i) CHECK(twice.table[i] == i);
  // constant-bottom is not an isomorphism
  SupMap cb{l, l, std::vector<Idx>(l->size(), l->bottom)};
  CHECK(!is_isomorphism(cb));
}

TEST_CASE("join irreducibles of the diamond are its atoms") {
  auto l = diamond();
  auto ji = join_irreducibles(*l);
  REQUIRE(ji.size() == 2);
  CHECK(l->names[ji[0]] == "u");
  CHECK(l->names[ji[1]] == "v");
}

TEST_CASE("lattice ideals of the diamond") {
  auto l = diamond();
  auto ids = lattice_ideals(*l);
  // {bot}, {bot,u}, {bot,v}, all (the two-atom down-set is not join-closed)
  CHECK(ids.size() == 4);
}

TEST_CASE("sublattice recomputes meets inside the subset") {
  auto l = diamond();
  auto sub = sublattice(*l, {l->index_of("bot"), l->index_of("u"), l->index_of("top")});
  CHECK(sub->size() == 3);
  CHECK(sub->meet(sub->index_of("u"), sub->index_of("top")) == sub->index_of("u"));
}

TEST_CASE("lattice isomorphism finds the chain map and rejects different shapes") {
  auto a = chain(4);
  auto b = validate_lattice({"p", "q", "r", "s"}, {{"p", "q"}, {"q", "r"}, {"r", "s"}});
  auto iso = lattice_isomorphism(*a, *b);
  REQUIRE(iso.has_value());
  CHECK((*iso)[a->bottom] == b->bottom);
  CHECK(!lattice_isomorphism(*diamond(), *chain(4)).has_value());
}

TEST_CASE("join and meet tables satisfy the semilattice laws") {
  for (auto l : {chain(4), diamond()}) {
    for (int a = 0; a < l->size(); ++a) {
      CHECK(l->join(a, a) == a);
      CHECK(l->meet(a, a) == a);
      for (int b = 0; b < l->size(); ++b) {
        CHECK(l->join(a, b) == l->join(b, a));
        CHECK(l->meet(a, b) == l->meet(b, a));
        CHECK(l->join(a, l->meet(a, b)) == a);
        CHECK(l->meet(a, l->join(a, b)) == a);
        for (int c = 0; c < l->size(); ++c) {
          CHECK(l->join(l->join(a, b), c) == l->join(a, l->join(b, c)));
          CHECK(l->meet(l->meet(a, b), c) == l->meet(a, l->meet(b, c)));
        }
      }
    }
  }
}
