#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/core_words.hpp"
#include "helpers.hpp"

using namespace artin;
using test::W;

TEST_CASE("free reduction") {
  ArtinGraph g = test::dihedral_graph(4);
  CHECK(free_reduce(W(g, "a a^-1 b")) == W(g, "b"));
  CHECK(free_reduce(W(g, "a b a b")) == W(g, "a b a b"));
  CHECK(free_reduce(W(g, "a b b^-1 a^-1")).empty());

  test::Rng rng;
  for (int i = 0; i < 200; ++i) {
    Word w;
    for (std::size_t j = 0; j < 12; ++j)
      w.push_back(Letter{static_cast<VertexId>(rng.below(2)), rng.below(2) == 0});
    Word r = free_reduce(w);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);           // idempotent
    CHECK(r.size() <= w.size());
    CHECK((w.size() - r.size()) % 2 == 0);  // parity preserved
  }
}

TEST_CASE("lex and shortlex comparison") {
  ArtinGraph g = test::dihedral_graph(4);
  LexOrder ord = LexOrder::default_order(g);  // a < a^-1 < b < b^-1
  CHECK(ord.lex_compare(W(g, "a b a b"), W(g, "b a b a")) < 0);
  CHECK(ord.shortlex_compare(W(g, "a b a b"), W(g, "b a b a")) < 0);
  CHECK(ord.lex_compare(W(g, "a b"), W(g, "a b")) == 0);
  CHECK(ord.shortlex_compare(W(g, "b"), W(g, "a a")) < 0);  // length first
  CHECK(ord.lex_compare(W(g, "b"), W(g, "a a")) > 0);
  // proper prefix precedes
  CHECK(ord.lex_compare(W(g, "a b"), W(g, "a b a")) < 0);

  ArtinGraph h = test::triangle(4, 4, 4);
  LexOrder sub = LexOrder::default_order(h.without(*h.find_vertex("c")));
  CHECK_THROWS_AS(sub.lex_compare(W(h, "a c"), W(h, "a")), AlphabetError);
}

TEST_CASE("shortlex is a strict total order on reduced words") {
  ArtinGraph g = test::triangle(4, 4, 4);
  LexOrder ord = LexOrder::default_order(g);
  test::Rng rng;
  std::vector<Word> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(test::random_reduced_word(g, rng.below(6), rng));
  for (const Word& u : sample)
    for (const Word& v : sample) {
      auto uv = ord.shortlex_compare(u, v);
      auto vu = ord.shortlex_compare(v, u);
      if (u == v) CHECK(uv == 0);
      if (uv < 0) CHECK(vu > 0);
      for (const Word& w : sample)
        if (uv < 0 && ord.shortlex_compare(v, w) < 0)
          CHECK(ord.shortlex_compare(u, w) < 0);
    }
}

TEST_CASE("alternating products") {
  ArtinGraph g = test::dihedral_graph(4);
  Letter a = pos(0), b = pos(1);
  CHECK(alternating(a, b, 4, Side::left) == W(g, "a b a b"));
  CHECK(alternating(a, b, 3, Side::left) == W(g, "a b a"));
  CHECK(alternating(a, b, 3, Side::right) == W(g, "b a b"));
  CHECK(alternating(a, b, 0, Side::left).empty());
  CHECK(alternating(a, b, 4, Side::left) == alternating(a, b, 4, Side::right));
  CHECK_THROWS_AS(alternating(a, a.inverse(), 2, Side::left), PreconditionError);

  for (int m = 1; m <= 7; ++m) {
    Word w = alternating(neg(0), neg(1), m, Side::left);
    CHECK(w.size() == static_cast<std::size_t>(m));
    CHECK(w.front() == neg(0));
    for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i].vertex != w[i - 1].vertex);
  }
}

TEST_CASE("word parsing and rendering") {
  ArtinGraph g = test::triangle(4, 4, 4);
  Word w = W(g, "a^-1 b^3 a");
  CHECK(w.size() == 5);
  CHECK(w[0] == neg(0));
  CHECK(w[1] == pos(1));
  CHECK(w[4] == pos(0));
  CHECK(W(g, "").empty());
  CHECK(W(g, "c b c a b a c b c b").size() == 10);

  CHECK_THROWS_AS(W(g, "d"), ParseError);
  CHECK_THROWS_AS(W(g, "a^x"), ParseError);
  CHECK_THROWS_AS(W(g, "a^0"), ParseError);

  test::Rng rng;
  for (int i = 0; i < 100; ++i) {
    Word u = test::random_reduced_word(g, rng.below(10), rng);
    CHECK(g.parse_word(g.render_word(u)) == u);
  }
}

TEST_CASE("graph predicates and subgraphs") {
  ArtinGraph g = test::triangle(4, 6, 8);
  CHECK(g.is_even());
  CHECK(g.is_large());
  CHECK(g.is_large_even());
  ArtinGraph t = test::triangle(4, 4, 2);
  CHECK(t.is_even());
  CHECK_FALSE(t.is_large());
  CHECK_FALSE(t.is_large_even());
  ArtinGraph odd = test::dihedral_graph(3);
  CHECK_FALSE(odd.is_even());
  CHECK(odd.is_large());

  VertexId c = *t.find_vertex("c");
  ArtinGraph sub = t.without(c);
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.label(*sub.find_vertex("a"), *sub.find_vertex("b")) == 4);
  CHECK_FALSE(sub.find_vertex("c").has_value());
  // ids stay stable: words remain valid
  CHECK(sub.render_word(W(t, "a b")) == "a b");
}

TEST_CASE("graph file format") {
  const char* text =
      "# triangle\n"
      "[vertices]\n"
      "a\nb\nc\n"
      "[edges]\n"
      "a b 4\n"
      "a c inf\n"
      "b c 4\n"
      "[order]\n"
      "b b^-1 a a^-1 c c^-1\n";
  ArtinGraph g = ArtinGraph::parse(text);
  CHECK(g.vertex_count() == 3);
  CHECK(g.label(*g.find_vertex("a"), *g.find_vertex("c")) == ArtinGraph::kInfinity);
  CHECK(g.file_order().size() == 6);
  LexOrder ord = LexOrder::from_letters(g, g.file_order());
  CHECK(ord.letter_less(pos(*g.find_vertex("b")), pos(*g.find_vertex("a"))));
  CHECK(ord.polyfree_compatible());

  CHECK_THROWS_AS(ArtinGraph::parse("[edges]\na b 4\n"), ParseError);
  CHECK_THROWS_AS(ArtinGraph::parse("[vertices]\na\nb\n[edges]\na b 1\n"), ParseError);
  CHECK_THROWS_AS(ArtinGraph::parse("[vertices]\na\na\n"), ParseError);
}

TEST_CASE("orders: polyfree compatibility and letter promotion") {
  ArtinGraph g = test::dihedral_graph(4);
  LexOrder ord = LexOrder::default_order(g);
  CHECK(ord.polyfree_compatible());
  LexOrder swapped = LexOrder::from_letters(
      g, {neg(0), pos(0), pos(1), neg(1)});
  CHECK_FALSE(swapped.polyfree_compatible());

  LexOrder bfirst = LexOrder::letter_first(ord, pos(1));
  CHECK(bfirst.rank(pos(1)) == 0);
  CHECK(bfirst.rank(pos(0)) == 1);
  CHECK(bfirst.rank(neg(0)) == 2);
}
