#pragma once

#include <string>
#include <utility>
#include <vector>

#include "artin/core_words.hpp"
#include "artin/oracle.hpp"
#include "artin/rewriting.hpp"

namespace artin {

// Signed letters that start some geodesic representative of the element.
struct InitialLetterReport {
  Word element;  // shortlex form
  std::vector<Letter> initials;
};

// True iff some geodesic representative of g has u as a prefix, decided
// through the length identity |sl(u^-1 g)| == |sl(g)| - |u|.
bool has_geodesic_prefix(const Word& g, const Word& u, const Normalizer& nf);

// Both decision routes (prefix identity and letter-first reordering) are
// evaluated and must agree; a mismatch raises SoundnessError.
InitialLetterReport initial_letters(const Word& g, const Normalizer& nf);

// Largest t >= 0 such that some geodesic representative starts with x^t.
int max_initial_power(const Word& g, Letter x, const Normalizer& nf);

// The unique minimal-length pair (w, w_hat) of equal geodesics where w
// starts with b^t and w_hat with a^s, for the supported sign patterns
// (s >= t >= 1, s <= t <= -1, and the mixed unit cases). The edge label
// between a and b is 2m.
std::pair<Word, Word> minimal_intersection_word(int m, long long s, long long t,
                                                VertexId a, VertexId b);

struct LemmaReport {
  std::string lemma;
  std::string graph_name;
  std::size_t radius = 0;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Instance-based verification of one lemma over all elements of geodesic
// length <= radius. Engine and oracle are both consulted; a disagreement
// between them is reported as a violation.
LemmaReport verify_lemma(const std::string& lemma_id, const ArtinGraph& g,
                         std::size_t radius, const LexOrder& ord,
                         const std::string& graph_name = "", int threads = 1);

const std::vector<std::string>& known_lemma_ids();

std::string format_report(const LemmaReport& r);

}  // namespace artin
