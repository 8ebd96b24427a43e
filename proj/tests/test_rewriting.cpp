#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <set>
#include <thread>

#include "artin/geodesic_analysis.hpp"
#include "artin/oracle.hpp"
#include "artin/rewriting.hpp"
#include "helpers.hpp"

using namespace artin;
using test::W;

namespace {

Normalizer triangle_nf() {
  ArtinGraph g = test::triangle(4, 4, 4);
  return Normalizer(g, LexOrder::default_order(g));
}

}  // namespace

TEST_CASE("critical subwords of a word") {
  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();

  auto subs = nf.critical_subwords(W(g, "c b c a b a c b c b"));
  bool has_suffix = false;
  for (const auto& [span, crit] : subs)
    if (span.begin == 6 && span.end == 10) has_suffix = true;
  CHECK(has_suffix);
  for (std::size_t i = 1; i < subs.size(); ++i)
    CHECK(subs[i - 1].first.begin <= subs[i].first.begin);

  subs = nf.critical_subwords(W(g, "a b a b c"));
  REQUIRE(!subs.empty());
  CHECK(subs[0].first.begin == 0);
  CHECK(subs[0].first.end == 4);

  CHECK(nf.critical_subwords(W(g, "a c b^-1")).empty());
  CHECK_THROWS_AS(nf.critical_subwords(W(g, "a a^-1")), PreconditionError);
}

TEST_CASE("leftward lex reducing sequence: the triangle example") {
  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();
  Word w = W(g, "c b c a b a c b c b");
  auto t = nf.leftward_lex_reduction(w);
  REQUIRE(t.has_value());
  CHECK(t->kind == TraceKind::lex_reducing);
  CHECK(t->steps.size() == 3);
  CHECK(t->output == W(g, "b c b c a b a c b c"));
  CHECK(nf.equal(w, t->output));
  CHECK(replay_trace(w, *t) == t->output);
}

TEST_CASE("rightward length reducing sequence: the mixed example") {
  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();
  Word w = W(g, "a^-1 b^3 a b c^-1 a^2 c b^-1 a b a");
  REQUIRE(w.size() == 14);
  auto t = nf.rightward_length_reduction(w);
  REQUIRE(t.has_value());
  CHECK(t->kind == TraceKind::length_reducing);
  CHECK(t->steps.size() == 3);
  CHECK(t->output == W(g, "b a b^3 c a^2 c^-1 b a b^-1"));
  CHECK(t->output.size() == 12);
  REQUIRE(t->tail.has_value());
  CHECK(*t->tail == pos(*g.find_vertex("a")));
  CHECK(replay_trace(w, *t) == t->output);

  // no length reduction on a single critical block
  CHECK_FALSE(nf.rightward_length_reduction(W(g, "a b a b")).has_value());
}

TEST_CASE("single tau-move lex reductions") {
  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();
  CHECK_FALSE(nf.leftward_lex_reduction(W(g, "a b a b")).has_value());
  auto t = nf.leftward_lex_reduction(W(g, "b a b a"));
  REQUIRE(t.has_value());
  CHECK(t->steps.size() == 1);
  CHECK(t->output == W(g, "a b a b"));
}

TEST_CASE("shortlex normalization basics") {
  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();
  CHECK(nf.shortlex(W(g, "a a^-1 b")) == W(g, "b"));
  CHECK(nf.shortlex(W(g, "b a b a")) == W(g, "a b a b"));
  CHECK(nf.shortlex(W(g, "a^-1 b^3 a b c^-1 a^2 c b^-1 a b a")).size() == 12);
  CHECK(nf.equal(W(g, "c b c a b a c b c b"), W(g, "b c b c a b a c b c")));
  CHECK_FALSE(nf.geodesic(W(g, "a a^-1")));
  CHECK(nf.geodesic(W(g, "a b a b")));

  ArtinGraph d4 = test::dihedral_graph(4);
  Normalizer nfd(d4, LexOrder::default_order(d4));
  CHECK(nfd.equal(W(d4, "b b a b a a b a"), W(d4, "a a b a b b a b")));

  ArtinGraph z2 = test::dihedral_graph(2);
  Normalizer nfz(z2, LexOrder::default_order(z2));
  CHECK_THROWS_AS(nfz.shortlex(W(z2, "a b")), UnsupportedPresentationError);
}

TEST_CASE("prefix closure and confluence on random words") {
  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();
  test::Rng rng;
  for (int i = 0; i < 60; ++i) {
    Word w = test::random_reduced_word(g, 1 + rng.below(7), rng);
    Word u = nf.shortlex(w);
    for (std::size_t k = 0; k <= u.size(); ++k)
      CHECK(nf.shortlex(subword(u, 0, k)) == subword(u, 0, k));
    std::size_t split = rng.below(w.size() + 1);
    Word via = concat(nf.shortlex(subword(w, 0, split)), subword(w, split, w.size()));
    CHECK(nf.shortlex(via) == u);
  }
}

TEST_CASE("soundness of traces against both oracles") {
  ArtinGraph d4 = test::dihedral_graph(4);
  Normalizer nfd(d4, LexOrder::default_order(d4));
  test::Rng rng;
  for (int i = 0; i < 80; ++i) {
    Word w = test::random_reduced_word(d4, 1 + rng.below(8), rng);
    std::vector<ReductionTrace> traces;
    Word u = nfd.shortlex(w, traces);
    CHECK(garside_equal(w, u, 0, 1, 4));
    for (const ReductionTrace& t : traces) CHECK(replay_trace(t.input, t) == t.output);
  }

  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();
  for (int i = 0; i < 40; ++i) {
    Word w = test::random_reduced_word(g, 1 + rng.below(8), rng);
    Word u = nf.shortlex(w);
    auto res = relator_equal(w, u, g, w.size() + 6);
    CHECK(res.verdict == Equality::equal);
  }
}

TEST_CASE("completeness at desk scale over the triangle") {
  ArtinGraph g = test::triangle(4, 4, 4);
  Normalizer nf(g, LexOrder::default_order(g));
  Ball ball = Ball::bfs(g, 6);
  std::size_t checked = 0;
  for (std::size_t c = 0; c < ball.class_count(); ++c)
    for (const Word& w : ball.cls(c).members) {
      CHECK(nf.shortlex(w).size() == ball.cls(c).canonical.size());
      ++checked;
    }
  CHECK(checked > 10000);
  // the engine's normal form is the oracle's canonical representative,
  // and the initial-letter sets of both sides coincide
  for (std::size_t c = 0; c < ball.class_count(); ++c) {
    const Word& can = ball.cls(c).canonical;
    CHECK(nf.shortlex(can) == can);
    std::set<int> oracle;
    for (const Word& geo : ball.cls(c).geodesics)
      if (!geo.empty()) oracle.insert(geo.front().code());
    std::set<int> engine;
    for (const Letter& l : initial_letters(can, nf).initials)
      engine.insert(l.code());
    CHECK(engine == oracle);
  }
}

TEST_CASE("sign conservation across geodesic representatives") {
  ArtinGraph g = test::triangle(4, 4, 4);
  Normalizer nf(g, LexOrder::default_order(g));
  Ball ball = Ball::bfs(g, 4);
  for (std::size_t c = 0; c < ball.class_count(); ++c) {
    const auto& cls = ball.cls(c);
    std::size_t negs = negative_letter_count(cls.geodesics.front());
    for (const Word& w : cls.geodesics) CHECK(negative_letter_count(w) == negs);
    CHECK(negative_letter_count(nf.shortlex(cls.canonical)) == negs);
  }
}

TEST_CASE("mixed graphs: infinite edges contribute no critical words") {
  ArtinGraph g;
  VertexId a = g.add_vertex("a");
  VertexId b = g.add_vertex("b");
  VertexId c = g.add_vertex("c");
  g.add_edge(a, b, 4);
  g.add_edge(b, c, ArtinGraph::kInfinity);
  Normalizer nf(g, LexOrder::default_order(g));
  CHECK(nf.shortlex(W(g, "b a b a c")) == W(g, "a b a b c"));
  CHECK(nf.shortlex(W(g, "c a c^-1")) == W(g, "c a c^-1"));

  Ball ball = Ball::bfs(g, 4);
  for (std::size_t k = 0; k < ball.class_count(); ++k)
    for (const Word& w : ball.cls(k).members)
      CHECK(nf.shortlex(w).size() == ball.cls(k).canonical.size());
}

TEST_CASE("free products: every reduced word is already minimal") {
  ArtinGraph g;
  VertexId a = g.add_vertex("a");
  VertexId b = g.add_vertex("b");
  g.add_edge(a, b, ArtinGraph::kInfinity);
  Normalizer nf(g, LexOrder::default_order(g));
  test::Rng rng;
  for (int i = 0; i < 50; ++i) {
    Word w = test::random_reduced_word(g, rng.below(9), rng);
    CHECK(nf.shortlex(w) == w);
  }
}

TEST_CASE("budget exhaustion is an error, not a silent answer") {
  ArtinGraph g = test::triangle(4, 4, 4);
  Normalizer tight(g, LexOrder::default_order(g), SearchBudget{0, 1});
  CHECK_THROWS_AS(
      tight.rightward_length_reduction(W(g, "a^-1 b^3 a b c^-1 a^2 c b^-1 a b a")),
      BudgetError);
  Normalizer nf(g, LexOrder::default_order(g));
  CHECK_FALSE(nf.rightward_length_reduction(W(g, "a b a b")).has_value());
}

TEST_CASE("normal word enumeration matches the oracle ball") {
  ArtinGraph g = test::dihedral_graph(4);
  Normalizer nf(g, LexOrder::default_order(g));
  std::vector<Word> words = nf.normal_words(4);
  Ball ball = Ball::garside(g, 4);
  CHECK(words.size() == ball.class_count());
  for (std::size_t i = 1; i < words.size(); ++i)
    CHECK(nf.order().shortlex_compare(words[i - 1], words[i]) < 0);
  for (const Word& w : words) CHECK(nf.shortlex(w) == w);
}

TEST_CASE("the normal-form cache is safe under concurrent use") {
  ArtinGraph g = test::triangle(4, 4, 4);
  Normalizer nf(g, LexOrder::default_order(g));
  std::vector<Word> inputs;
  test::Rng rng;
  for (int i = 0; i < 60; ++i)
    inputs.push_back(test::random_reduced_word(g, 1 + rng.below(7), rng));
  std::vector<Word> expected;
  for (const Word& w : inputs) expected.push_back(Normalizer(g, nf.order()).shortlex(w));

  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = 0; i < inputs.size(); ++i)
        if (nf.shortlex(inputs[i]) != expected[i]) ok = false;
    });
  for (auto& th : pool) th.join();
  CHECK(ok.load());
}

TEST_CASE("replay rejects tampered traces") {
  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();
  auto t = nf.leftward_lex_reduction(W(g, "c b c a b a c b c b"));
  REQUIRE(t.has_value());
  ReductionTrace bad = *t;
  bad.steps[1].begin += 1;
  bad.steps[1].end += 1;
  CHECK_THROWS_AS(replay_trace(bad.input, bad), PreconditionError);
  ReductionTrace wrong_image = *t;
  wrong_image.steps[0].image[0] = wrong_image.steps[0].image[0].inverse();
  CHECK_THROWS_AS(replay_trace(wrong_image.input, wrong_image), PreconditionError);
}

TEST_CASE("trace serialization format") {
  Normalizer nf = triangle_nf();
  const ArtinGraph& g = nf.graph();
  auto t = nf.leftward_lex_reduction(W(g, "c b c a b a c b c b"));
  REQUIRE(t.has_value());
  std::string dump = format_trace(*t, g);
  CHECK(dump.find("step 1: span [6,10) form pure_alternating_pos tau-> b c b c") !=
        std::string::npos);
  CHECK(dump.find("result: b c b c a b a c b c") != std::string::npos);
}
