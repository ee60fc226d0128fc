#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "qlab/format.hpp"

using namespace qlab;
using namespace qlab::fixtures;

TEST_CASE("canonical export round-trips byte-identically") {
  for (auto& n : catalog_names()) {
    QPtr q = catalog(n);
    std::string text = export_quantale(n, *q);
    NamedQuantale back = parse_quantale_text(text);
    CHECK(back.name == n);
    CHECK(back.q->lat->names == q->lat->names);
    CHECK(back.q->mult_ == q->mult_);
    CHECK(back.q->unit == q->unit);
    CHECK(back.q->invol == q->invol);
    CHECK(export_quantale(back.name, *back.q) == text);
  }
}

TEST_CASE("parser accepts comments, hasse order, and explicit bottom rows") {
  std::string text =
      "# a three-chain with the left multiplication\n"
      "quantale demo\n"
      "elements: bot a top\n"
      "order: bot<a a<top\n"
      "mult: bot: bot bot\n"
      "mult: a: a top\n"
      "mult: top: a top\n"
      "unit: none\n"
      "involution: none\n";
  NamedQuantale nq = parse_quantale_text(text);
  CHECK(nq.q->size() == 3);
  CHECK(quantale_isomorphism(*nq.q, *catalog("c3l")).has_value());
}

TEST_CASE("parser accepts full-width rows with a bottom column") {
  std::string text =
      "quantale demo\n"
      "elements: bot top\n"
      "order: bot<top\n"
      "mult: top: bot top\n"
      "unit: top\n"
      "involution: bot->bot top->top\n";
  NamedQuantale nq = parse_quantale_text(text);
  CHECK(nq.q->mult(nq.q->top(), nq.q->top()) == nq.q->top());
}

TEST_CASE("parse errors carry positioned diagnostics") {
  CHECK_THROWS_AS(parse_quantale_text("quantale x\n"), qlab_error);
  CHECK_THROWS_AS(parse_quantale_text("nonsense\n"), qlab_error);
  // broken multiplication surfaces as a validation error with a witness
  std::string bad =
      "quantale bad\n"
      "elements: bot a top\n"
      "order: bot<a a<top\n"
      "mult: a: top bot\n"   // a*top = bot is not monotone
      "mult: top: a top\n"
      "unit: none\n"
      "involution: none\n";
  try {
    parse_quantale_text(bad);
    CHECK(false);
  } catch (const qlab_error& e) {
    CHECK((e.kind() == ErrorKind::NotBimorphic || e.kind() == ErrorKind::NotAssociative));
    CHECK(std::string(e.what()).find("'") != std::string::npos);
  }
  // the element cap guards the parser
  CHECK_THROWS_AS(parse_quantale_text("quantale t\nelements: a b c\norder: a<b b<c\n", 2),
                  qlab_error);
}

TEST_CASE("catalog references load through the same entry point") {
  NamedQuantale nq = load_quantale("catalog:q2");
  CHECK(nq.name == "q2");
  CHECK(nq.q->size() == 6);
  CHECK_THROWS_AS(load_quantale("catalog:nope"), qlab_error);
  CHECK_THROWS_AS(load_quantale("/no/such/file.qnt"), qlab_error);
}

TEST_CASE("tensor export records elementary factorizations") {
  auto t = tensor_quantale(catalog("c3l"), catalog("c3r"));
  std::string text = export_tensor_quantale("t", t);
  CHECK(text.find("# factorization into elementary tensors") != std::string::npos);
  CHECK(text.find("(x)") != std::string::npos);
  // the exported table still parses (comments are skipped)
  NamedQuantale back = parse_quantale_text(text);
  CHECK(back.q->size() == 6);
}

TEST_CASE("quotient export names the nucleus fixed points") {
  QPtr q = catalog("q2");
  QPtr two = catalog("two");
  std::vector<Idx> f = {q->bottom(), q->top()};
  auto quot = coequalizer(q, *two, f, f);
  std::string text = export_quotient_quantale("quot", quot);
  CHECK(text.find("# nucleus fixed points:") != std::string::npos);
}

TEST_CASE("topology export is stable and line-oriented") {
  auto ft = quantic_frame_topologize(catalog("q2"));
  std::string text = export_topology(ft.result.topology, "sq2-1");
  CHECK(text.find("points: bot a_l") != std::string::npos);
  size_t count = 0;
  for (size_t pos = 0; (pos = text.find("open:", pos)) != std::string::npos; ++pos) count++;
  CHECK(count == ft.result.topology.opens.size());
  CHECK(export_topology(ft.result.topology, "sq2-1") == text);
}

TEST_CASE("pushout and coequalizer specs parse and run") {
  std::string ptext =
      "pushout omega\n"
      "left: catalog:c3l\n"
      "right: catalog:c3r\n"
      "part: catalog:two\n"
      "q_left: bot->bot top->top\n"
      "q_right: bot->bot top->top\n"
      "theta_left: bot->bot a->a top->top\n"
      "theta_right: bot->bot a->a top->top\n";
  PushoutSpec ps = parse_pushout_spec(ptext);
  auto res = spectrum_pushout(ps.left, ps.right, ps.part, ps.q_left, ps.q_right, ps.theta_left,
                              ps.theta_right);
  CHECK(quantale_isomorphism(*res.quotient.quotient, *catalog("q2"), true).has_value());

  std::string ctext =
      "coequalizer fold\n"
      "source: catalog:two\n"
      "target: catalog:q2\n"
      "f: bot->bot top->top\n"
      "g: bot->bot top->top\n";
  CoequalizerSpec cs = parse_coequalizer_spec(ctext);
  auto quot = coequalizer(cs.target, *cs.source, cs.f, cs.g);
  CHECK(quot.quotient->size() == 6);

  CHECK_THROWS_AS(parse_pushout_spec("pushout x\nleft: catalog:c3l\n"), qlab_error);
}
