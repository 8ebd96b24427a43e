#include "artin/rewriting.hpp"

#include <algorithm>
#include <sstream>

namespace artin {

const char* to_string(Direction d) {
  return d == Direction::leftward ? "leftward" : "rightward";
}

const char* to_string(TraceKind k) {
  return k == TraceKind::length_reducing ? "length_reducing" : "lex_reducing";
}

struct Normalizer::Cache {
  std::mutex mu;
  std::unordered_map<std::string, Word> map;
};

Normalizer::Normalizer(ArtinGraph graph, LexOrder order, SearchBudget budget)
    : graph_(std::move(graph)),
      order_(std::move(order)),
      budget_(budget),
      cache_(std::make_unique<Cache>()) {}

Normalizer::Normalizer(Normalizer&&) noexcept = default;
Normalizer& Normalizer::operator=(Normalizer&&) noexcept = default;
Normalizer::~Normalizer() = default;

void Normalizer::check_word(const Word& w) const {
  for (const Letter& l : w) {
    if (!graph_.contains(l.vertex))
      throw AlphabetError("letter outside the graph");
    if (!order_.covers(l))
      throw AlphabetError("letter not ranked by the order");
  }
}

Normalizer::SearchLimits Normalizer::limits_for(const Word& w) const {
  SearchLimits lim;
  lim.max_chain = budget_.max_chain ? budget_.max_chain : std::max<std::size_t>(w.size(), 1);
  std::size_t nv = std::max<std::size_t>(graph_.vertex_count(), 1);
  lim.max_tau = budget_.max_tau_total ? budget_.max_tau_total
                                      : std::max<std::size_t>(w.size() * w.size() * nv * nv, 64);
  return lim;
}

std::vector<std::pair<Span, CriticalWord>> Normalizer::critical_subwords(const Word& w) const {
  if (!is_freely_reduced(w))
    throw PreconditionError("critical_subwords: word is not freely reduced");
  check_word(w);
  std::vector<std::pair<Span, CriticalWord>> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    VertexId first = w[i].vertex;
    VertexId second = -1;
    for (std::size_t j = i + 1; j <= n; ++j) {
      VertexId v = w[j - 1].vertex;
      if (v != first) {
        if (second == -1)
          second = v;
        else if (v != second)
          break;  // third generator: no longer a 2-generator span
      }
      if (second == -1) continue;
      int m = graph_.label(first, second);
      if (m == ArtinGraph::kNoEdge || m == ArtinGraph::kInfinity) break;
      if (auto c = find_critical(subword(w, i, j), m))
        out.push_back({Span{i, j}, std::move(*c)});
    }
  }
  return out;
}

namespace {

struct SearchFrame {
  Word word;                    // word before applying tau at span
  Span span;
  CriticalWord critical;
};

}  // namespace

std::optional<ReductionTrace> Normalizer::search(const Word& w, Direction dir) const {
  const SearchLimits lim = limits_for(w);
  std::size_t taus = 0;
  bool truncated = false;

  std::vector<TraceStep> steps;
  std::optional<ReductionTrace> found;

  // depth-first over overlap chains; first hit wins, spans in start order
  auto dfs = [&](auto&& self, const Word& cur, Span span, const CriticalWord& crit) -> bool {
    if (steps.size() >= lim.max_chain) {
      truncated = true;
      return false;
    }
    if (++taus > lim.max_tau)
      throw BudgetError("tau-move budget exceeded during reduction search");

    Word img = tau(crit);
    Word next;
    next.reserve(cur.size());
    next.insert(next.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(span.begin));
    next.insert(next.end(), img.begin(), img.end());
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(span.end), cur.end());
    const std::size_t ib = span.begin;
    const std::size_t ie = span.begin + img.size();

    steps.push_back(TraceStep{span.begin, span.end, crit, img, dir});

    const bool cancel_left = ib > 0 && next[ib - 1] == next[ib].inverse();
    const bool cancel_right = ie < next.size() && next[ie - 1] == next[ie].inverse();
    if (cancel_left || cancel_right) {
      if (dir == Direction::rightward) {
        ReductionTrace t;
        t.kind = TraceKind::length_reducing;
        t.steps = steps;
        if (cancel_right) t.tail = next[ie];
        t.input = w;
        t.output = free_reduce(next);
        found = std::move(t);
        return true;
      }
      // a cancellation discovered while chaining leftward is a length
      // reduction, not a lex reduction; not ours to report here
      steps.pop_back();
      return false;
    }

    // chain onwards through a critical overlap on a fresh generator;
    // leftward sequences prefer the longest chain and fall back to the
    // current word only when no continuation closes
    if (dir == Direction::rightward) {
      if (ie >= next.size()) {
        steps.pop_back();
        return false;
      }
      const Letter bridge = next[ie - 1];
      const Letter fresh = next[ie];
      if (fresh.vertex != crit.lo && fresh.vertex != crit.hi) {
        int m2 = graph_.label(bridge.vertex, fresh.vertex);
        if (m2 != ArtinGraph::kNoEdge && m2 != ArtinGraph::kInfinity) {
          std::size_t run = 1;
          while (run < ie && next[ie - 1 - run] == bridge) ++run;
          for (std::size_t k = 1; k <= run; ++k) {
            for (std::size_t plen = 1; ie + plen <= next.size(); ++plen) {
              const Letter& l = next[ie + plen - 1];
              if (l.vertex != bridge.vertex && l.vertex != fresh.vertex) break;
              Span s2{ie - k, ie + plen};
              auto c2 = find_critical(subword(next, s2.begin, s2.end), m2);
              if (c2 && self(self, next, s2, *c2)) return true;
            }
          }
        }
      }
    } else {
      if (ib > 0) {
        const Letter bridge = next[ib];
        const Letter fresh = next[ib - 1];
        if (fresh.vertex != crit.lo && fresh.vertex != crit.hi) {
          int m2 = graph_.label(bridge.vertex, fresh.vertex);
          if (m2 != ArtinGraph::kNoEdge && m2 != ArtinGraph::kInfinity) {
            std::size_t run = 1;
            while (ib + run < next.size() && next[ib + run] == bridge) ++run;
            for (std::size_t k = 1; k <= run; ++k) {
              for (std::size_t slen = 1; slen <= ib; ++slen) {
                const Letter& l = next[ib - slen];
                if (l.vertex != bridge.vertex && l.vertex != fresh.vertex) break;
                Span s2{ib - slen, ib + k};
                auto c2 = find_critical(subword(next, s2.begin, s2.end), m2);
                if (c2 && self(self, next, s2, *c2)) return true;
              }
            }
          }
        }
      }
      if (order_.lex_compare(next, w) < 0) {
        ReductionTrace t;
        t.kind = TraceKind::lex_reducing;
        t.steps = steps;
        t.input = w;
        t.output = next;
        found = std::move(t);
        return true;
      }
    }
    steps.pop_back();
    return false;
  };

  for (const auto& [span, crit] : critical_subwords(w)) {
    if (dfs(dfs, w, span, crit)) return found;
  }
  if (truncated)
    throw BudgetError("chain-length budget exhausted before the search completed");
  return std::nullopt;
}

std::optional<ReductionTrace> Normalizer::rightward_length_reduction(const Word& w) const {
  return search(w, Direction::rightward);
}

std::optional<ReductionTrace> Normalizer::leftward_lex_reduction(const Word& w) const {
  return search(w, Direction::leftward);
}

Word Normalizer::append_normal(const Word& u, Letter a,
                               std::vector<ReductionTrace>* traces) const {
  if (!u.empty() && u.back() == a.inverse()) {
    Word v = u;
    v.pop_back();
    return v;  // a prefix of u, hence still shortlex minimal
  }
  Word v = u;
  v.push_back(a);
  for (;;) {
    if (auto t = rightward_length_reduction(v)) {
      v = t->output;
      if (traces) traces->push_back(std::move(*t));
      continue;
    }
    if (auto t = leftward_lex_reduction(v)) {
      v = t->output;
      if (traces) traces->push_back(std::move(*t));
      continue;
    }
    return v;
  }
}

Word Normalizer::shortlex(const Word& w, std::vector<ReductionTrace>& traces) const {
  check_word(w);
  if (!graph_.is_large())
    throw UnsupportedPresentationError(
        "shortlex normalization needs a large presentation (labels >= 3 or inf)");
  Word u;
  for (const Letter& a : w) u = append_normal(u, a, &traces);
  return u;
}

Word Normalizer::shortlex(const Word& w) const {
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->map.find(word_key(w));
    if (it != cache_->map.end()) return it->second;
  }
  std::vector<ReductionTrace> traces;
  Word out = shortlex(w, traces);
  std::lock_guard<std::mutex> lk(cache_->mu);
  cache_->map.emplace(word_key(w), out);
  return out;
}

bool Normalizer::equal(const Word& u, const Word& v) const {
  return shortlex(u) == shortlex(v);
}

bool Normalizer::geodesic(const Word& w) const {
  return shortlex(w).size() == w.size();
}

std::vector<Word> Normalizer::normal_words(std::size_t radius) const {
  std::vector<Letter> letters = order_.letters();
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= radius; ++len) {
    std::vector<Word> next;
    for (const Word& u : level) {
      for (const Letter& a : letters) {
        if (!u.empty() && u.back() == a.inverse()) continue;
        Word v = append_normal(u, a);
        if (v.size() == len && std::equal(u.begin(), u.end(), v.begin()) &&
            v.back() == a)
          next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

Word replay_trace(const Word& input, const ReductionTrace& trace) {
  Word cur = input;
  for (const TraceStep& step : trace.steps) {
    if (step.end > cur.size() || step.begin >= step.end)
      throw PreconditionError("trace step span outside the word");
    Word sub = subword(cur, step.begin, step.end);
    auto crit = find_critical(sub, step.critical.m);
    if (!crit || crit->form != step.critical.form)
      throw PreconditionError("trace step does not match a critical word");
    Word img = tau(*crit);
    if (img != step.image)
      throw PreconditionError("trace step image mismatch");
    Word next;
    next.reserve(cur.size());
    next.insert(next.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(step.begin));
    next.insert(next.end(), img.begin(), img.end());
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(step.end), cur.end());
    cur = std::move(next);
  }
  if (trace.kind == TraceKind::length_reducing) cur = free_reduce(cur);
  return cur;
}

std::string format_trace(const ReductionTrace& t, const ArtinGraph& g) {
  std::ostringstream os;
  os << "sequence: kind " << to_string(t.kind);
  if (!t.steps.empty()) os << " direction " << to_string(t.steps.front().direction);
  if (t.tail) os << " tail " << g.render_letter(*t.tail);
  os << "\n";
  os << "input: " << g.render_word(t.input) << "\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& s = t.steps[i];
    os << "step " << (i + 1) << ": span [" << s.begin << "," << s.end
       << ") form " << to_string(s.critical.form) << " tau-> "
       << g.render_word(s.image) << "\n";
  }
  os << "result: " << g.render_word(t.output) << "\n";
  return os.str();
}

}  // namespace artin
