#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/core_words.hpp"

namespace artin {

enum class Equality { equal, distinct, inconclusive };

enum class OracleMethod { bfs_relator_moves, garside_dihedral };

// Exponent-sum vector with generators identified along odd-labeled edges;
// a genuine invariant of the group, used as a cheap separation test.
std::vector<long long> abelianization(const Word& w, const ArtinGraph& g);

struct RelatorEqualResult {
  Equality verdict = Equality::inconclusive;
  enum class Basis { met, component_exhausted, invariant_separated, frontier_truncated };
  Basis basis = Basis::frontier_truncated;
  // Move chain u -> ... -> v (freely reduced words) when verdict == equal.
  std::vector<Word> witness;
};

// Breadth-first search over freely reduced words connected by relator
// moves (all splits of all cyclic rotations of both relator orientations,
// followed by free reduction), capped at `budget` word length.
RelatorEqualResult relator_equal(const Word& u, const Word& v,
                                 const ArtinGraph& g, std::size_t budget);

// Exhaustive Cayley ball: every word of length <= radius falls in exactly
// one class; each class records all its geodesic members.
class Ball {
 public:
  struct ClassInfo {
    Word canonical;                 // shortlex-least geodesic, default order
    std::vector<Word> geodesics;    // all minimal-length members
    std::vector<Word> members;      // all members of length <= radius
    bool truncated = false;         // some move from a member left the cap
  };

  static Ball bfs(const ArtinGraph& g, std::size_t radius,
                  std::size_t slack = kAutoSlack,
                  std::size_t word_cap = 10'000'000);
  static Ball garside(const ArtinGraph& g, std::size_t radius,
                      std::size_t word_cap = 10'000'000);
  // garside for finite dihedral graphs, bfs otherwise.
  static Ball oracle(const ArtinGraph& g, std::size_t radius,
                     std::size_t word_cap = 10'000'000);

  static constexpr std::size_t kAutoSlack = static_cast<std::size_t>(-1);

  OracleMethod method() const { return method_; }
  std::size_t radius() const { return radius_; }
  std::size_t class_count() const { return classes_.size(); }
  const ClassInfo& cls(std::size_t i) const { return classes_[i]; }

  std::optional<std::size_t> try_class_of(const Word& w) const;
  std::size_t class_of(const Word& w) const;
  bool same(const Word& u, const Word& v) const;
  const std::vector<Word>& geodesics_of(const Word& g) const;
  std::size_t geodesic_length(const Word& g) const;

  std::string dump(const ArtinGraph& g) const;

 private:
  OracleMethod method_ = OracleMethod::bfs_relator_moves;
  std::size_t radius_ = 0;
  std::vector<ClassInfo> classes_;
  // key of a member word (bfs: any interned word; garside: garside key)
  std::unordered_map<std::string, std::size_t> lookup_;
  bool garside_lookup_ = false;
  VertexId ga_ = 0, gb_ = 0;
  int gm_ = 0;
};

}  // namespace artin
