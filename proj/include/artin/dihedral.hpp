#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/core_words.hpp"

namespace artin {

// p(w) = min(r1, m), n(w) = min(r2, m): r1/r2 are the longest positive /
// negative alternating subwords of a freely reduced two-generator word.
struct PNStats {
  int p = 0;
  int n = 0;
  int m = 0;
};

PNStats pn_stats(const Word& w, int m);

enum class GeodesicKind { unique_geodesic, geodesic_among_several, not_geodesic };

struct GeodesicClassification {
  GeodesicKind kind;
  // For not_geodesic: a subword with p + n = m.
  std::optional<Word> witness;
};

GeodesicClassification classify_geodesic(const Word& w, int m);

enum class CriticalForm {
  pos_left,               // m(x,y) xi+
  pos_right,              // xi+ (x,y)m
  neg_left,               // m(x^-1,y^-1) xi-
  neg_right,              // xi- (x^-1,y^-1)m
  unsigned_pos_first,     // p(x,y) eta (z^-1,t^-1)n
  unsigned_neg_first,     // n(x^-1,y^-1) eta (z,t)p
  pure_alternating_pos,   // (x,y)m
  pure_alternating_neg,   // (x^-1,y^-1)m
};

const char* to_string(CriticalForm f);
std::optional<CriticalForm> critical_form_from_string(std::string_view s);

// A critical word with its (unique) decomposition. prefix_block /
// suffix_block are the alternating block lengths at the two ends; the
// middle segment is the xi / eta part. Pure forms use prefix_block == m.
struct CriticalWord {
  Word word;
  CriticalForm form;
  int m = 0;
  int p = 0;
  int n = 0;
  std::size_t prefix_block = 0;
  std::size_t suffix_block = 0;
  VertexId lo = 0;  // the two generator names, lo < hi
  VertexId hi = 0;
};

std::optional<CriticalWord> find_critical(const Word& w, int m);

// The matching displayed rewrite rule; an involution on critical words.
Word tau(const CriticalWord& c);

// nu = identity for even m, the name-swap automorphism for odd m.
Word nu(const Word& w, VertexId lo, VertexId hi, int m);

// Left-greedy Garside normal form for the dihedral Artin group A_2(m):
// Delta^k times a left-weighted sequence of proper alternating divisors
// of Delta. Exact equality oracle, independent of the tau-move engine.
struct GarsideForm {
  long long delta_power = 0;
  std::vector<Word> factors;

  bool operator==(const GarsideForm&) const = default;
  std::string key() const;
};

GarsideForm garside_normal_form(const Word& w, VertexId a, VertexId b, int m);
bool garside_equal(const Word& u, const Word& v, VertexId a, VertexId b, int m);

}  // namespace artin
