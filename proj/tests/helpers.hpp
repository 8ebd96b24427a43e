#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "artin/core_words.hpp"

namespace artin::test {

// two vertices a, b; label m (ArtinGraph::kInfinity for the free case)
inline ArtinGraph dihedral_graph(int m) {
  ArtinGraph g;
  VertexId a = g.add_vertex("a");
  VertexId b = g.add_vertex("b");
  g.add_edge(a, b, m);
  return g;
}

inline ArtinGraph free_pair_graph() {
  ArtinGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  return g;
}

inline ArtinGraph triangle(int ab, int ac, int bc) {
  ArtinGraph g;
  VertexId a = g.add_vertex("a");
  VertexId b = g.add_vertex("b");
  VertexId c = g.add_vertex("c");
  g.add_edge(a, b, ab);
  g.add_edge(a, c, ac);
  g.add_edge(b, c, bc);
  return g;
}

inline Word W(const ArtinGraph& g, std::string_view text) {
  return g.parse_word(text);
}

// deterministic xorshift for property samples
struct Rng {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

inline Word random_reduced_word(const ArtinGraph& g, std::size_t len, Rng& rng) {
  std::vector<Letter> alphabet;
  for (VertexId v : g.vertices()) {
    alphabet.push_back(pos(v));
    alphabet.push_back(neg(v));
  }
  Word w;
  while (w.size() < len) {
    Letter l = alphabet[rng.below(alphabet.size())];
    if (!w.empty() && w.back() == l.inverse()) continue;
    w.push_back(l);
  }
  return w;
}

}  // namespace artin::test
