#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/core_words.hpp"
#include "artin/dihedral.hpp"

namespace artin {

enum class Direction { leftward, rightward };
enum class TraceKind { length_reducing, lex_reducing };

const char* to_string(Direction d);
const char* to_string(TraceKind k);

struct TraceStep {
  std::size_t begin = 0;  // span [begin,end) in the word this step rewrote
  std::size_t end = 0;
  CriticalWord critical;
  Word image;  // tau(critical)
  Direction direction = Direction::rightward;
};

// One critical sequence: consecutive steps overlap in a power of the
// boundary letter of the previous tau image. Length reducing sequences
// end in a free cancellation; lex reducing ones end lex-smaller.
struct ReductionTrace {
  TraceKind kind = TraceKind::lex_reducing;
  std::vector<TraceStep> steps;
  std::optional<Letter> tail;  // cancelled suffix letter, length kind only
  Word input;
  Word output;
};

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct SearchBudget {
  std::size_t max_chain = 0;      // 0: defaults to |w|
  std::size_t max_tau_total = 0;  // 0: defaults to |w|^2 * |V|^2
};

// Shortlex normalization for large Artin groups via critical sequences.
// One instance is bound to a graph and a letter order; all methods are
// const and safe to call concurrently (the result cache is locked).
class Normalizer {
 public:
  Normalizer(ArtinGraph graph, LexOrder order, SearchBudget budget = {});
  Normalizer(Normalizer&&) noexcept;
  Normalizer& operator=(Normalizer&&) noexcept;
  ~Normalizer();

  const ArtinGraph& graph() const { return graph_; }
  const LexOrder& order() const { return order_; }

  // All critical subwords with their spans, sorted by start index.
  std::vector<std::pair<Span, CriticalWord>> critical_subwords(const Word& w) const;

  std::optional<ReductionTrace> rightward_length_reduction(const Word& w) const;
  std::optional<ReductionTrace> leftward_lex_reduction(const Word& w) const;

  Word shortlex(const Word& w) const;
  Word shortlex(const Word& w, std::vector<ReductionTrace>& traces) const;
  // One incremental step: u must be shortlex minimal already.
  Word append_normal(const Word& u, Letter a,
                     std::vector<ReductionTrace>* traces = nullptr) const;

  bool equal(const Word& u, const Word& v) const;
  bool geodesic(const Word& w) const;

  // All shortlex minimal words of length <= radius, sorted shortlex.
  std::vector<Word> normal_words(std::size_t radius) const;

 private:
  struct SearchLimits {
    std::size_t max_chain;
    std::size_t max_tau;
  };
  SearchLimits limits_for(const Word& w) const;
  void check_word(const Word& w) const;
  std::optional<ReductionTrace> search(const Word& w, Direction dir) const;

  ArtinGraph graph_;
  LexOrder order_;
  SearchBudget budget_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

// Re-applies the recorded steps mechanically; no searching involved.
Word replay_trace(const Word& input, const ReductionTrace& trace);

std::string format_trace(const ReductionTrace& t, const ArtinGraph& g);

}  // namespace artin
