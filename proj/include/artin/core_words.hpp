#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

using VertexId = int;

// A signed generator symbol. The name of a letter is its positive form.
struct Letter {
  VertexId vertex = 0;
  bool negative = false;

  int code() const { return vertex * 2 + (negative ? 1 : 0); }
  Letter inverse() const { return Letter{vertex, !negative}; }
  bool positive() const { return !negative; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter pos(VertexId v) { return Letter{v, false}; }
inline Letter neg(VertexId v) { return Letter{v, true}; }
inline Letter letter_from_code(int code) {
  return Letter{code / 2, (code & 1) != 0};
}

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word subword(const Word& w, std::size_t begin, std::size_t end);
// k copies of x for k >= 0, |k| copies of x^-1 for k < 0.
Word power(Letter x, long long k);
bool is_freely_reduced(const Word& w);
std::size_t negative_letter_count(const Word& w);

// Unique freely reduced form: exhaustively deletes adjacent inverse pairs.
Word free_reduce(const Word& w);

// Packed one-byte-per-letter key, usable as a hash-map key.
std::string word_key(const Word& w);
Word word_from_key(std::string_view key);

enum class Side { left, right };

// side == left:  the alternating product of length m starting with x.
// side == right: the alternating product of length m ending with y.
// The two coincide when m is even.
Word alternating(Letter x, Letter y, int m, Side side);

// Simple labeled graph defining an Artin presentation. Vertex ids stay
// stable across subgraph formation so words remain valid in subgroups.
class ArtinGraph {
 public:
  static constexpr int kNoEdge = 0;
  static constexpr int kInfinity = -1;  // explicit "inf" label; no relation

  VertexId add_vertex(std::string name);
  void add_edge(VertexId u, VertexId v, int label);

  const std::vector<VertexId>& vertices() const { return active_list_; }
  std::size_t vertex_count() const { return active_list_.size(); }
  bool contains(VertexId v) const;
  const std::string& name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::size_t letter_space() const { return names_.size() * 2; }

  // kNoEdge when absent, kInfinity for an explicit infinite label,
  // otherwise the finite label (>= 2).
  int label(VertexId u, VertexId v) const;
  bool has_finite_edge(VertexId u, VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<std::pair<std::pair<VertexId, VertexId>, int>> edges() const;

  bool is_even() const;
  bool is_large() const;
  bool is_large_even() const;

  // Same vertex ids, with r and its incident edges removed.
  ArtinGraph without(VertexId r) const;

  // Word surface syntax: whitespace-separated `name` or `name^k` tokens.
  Word parse_word(std::string_view text) const;
  std::string render_word(const Word& w) const;
  std::string render_letter(Letter l) const;

  // Graph file with [vertices], [edges] and optional [order] sections.
  static ArtinGraph parse(std::string_view text);
  static ArtinGraph load(const std::string& path);

  // Letters of the [order] section, empty if none was given.
  const std::vector<Letter>& file_order() const { return file_order_; }

  std::uint64_t hash() const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::string> names_;          // index == VertexId
  std::vector<char> active_;                // kept sorted
  std::vector<std::vector<int>> labels_;    // symmetric, kNoEdge default
  std::vector<VertexId> active_list_;
  std::vector<Letter> file_order_;

  friend class LexOrderBuilder;
  const std::vector<VertexId>& active_ids() const { return active_list_; }

 public:
  // internal: rebuilt after vertex changes
  void rebuild_active();
};

// A strict total order on the signed letters of a graph, inducing the
// lex and shortlex orders on words.
class LexOrder {
 public:
  LexOrder() = default;

  // Declaration order with each positive letter immediately before its
  // inverse: a < a^-1 < b < b^-1 < ...
  static LexOrder default_order(const ArtinGraph& g);
  // Explicit ranking; must list every signed letter of g exactly once.
  static LexOrder from_letters(const ArtinGraph& g,
                               const std::vector<Letter>& letters);
  // base with x promoted to the front.
  static LexOrder letter_first(const LexOrder& base, Letter x);

  int rank(Letter l) const;
  bool letter_less(Letter a, Letter b) const { return rank(a) < rank(b); }

  // Prefix-precedes convention: a proper prefix is lex-smaller.
  std::strong_ordering lex_compare(const Word& u, const Word& v) const;
  std::strong_ordering shortlex_compare(const Word& u, const Word& v) const;
  bool lex_less(const Word& u, const Word& v) const {
    return lex_compare(u, v) < 0;
  }
  bool shortlex_less(const Word& u, const Word& v) const {
    return shortlex_compare(u, v) < 0;
  }

  // Every positive letter precedes its inverse.
  bool polyfree_compatible() const;

  std::vector<Letter> letters() const;  // in rank order
  bool covers(Letter l) const;

 private:
  std::vector<int> rank_;  // by letter code, -1 = not in the order
};

}  // namespace artin
