#include "artin/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "artin/dihedral.hpp"

namespace artin {

namespace {

std::string reduce_key(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!out.empty() && (out.back() ^ c) == 1)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::string inverse_key(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    out.push_back(static_cast<char>(*it ^ 1));
  return out;
}

// Moves available to the bounded word-problem search:
//   (a) relator rules: all splits of all cyclic rotations of both
//       orientations of every Artin relator, applied at any position;
//   (b) dihedral sibling rewrites: a 2-generator subword that is geodesic
//       in its dihedral subgroup may be replaced by any other geodesic of
//       the same dihedral element (computed with the exact Garside normal
//       form, never the tau engine). These are length-preserving, so
//       equal geodesics connect without leaving the length cap.
// Every result is freely reduced before it is reported.
class MoveGenerator {
 public:
  MoveGenerator(const ArtinGraph& g, std::size_t sibling_cap) : graph_(g) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : g.edges()) {
      int m = e.second;
      if (m == ArtinGraph::kInfinity) continue;
      Word lhsw = alternating(pos(e.first.first), pos(e.first.second), m, Side::left);
      Word rhsw = alternating(pos(e.first.second), pos(e.first.first), m, Side::left);
      std::string rel = word_key(concat(lhsw, inverse(rhsw)));
      for (const std::string& base : {rel, inverse_key(rel)}) {
        for (std::size_t shift = 0; shift < base.size(); ++shift) {
          std::string rot = base.substr(shift) + base.substr(0, shift);
          for (std::size_t k = 0; k <= rot.size(); ++k) {
            std::string lhs = rot.substr(0, k);
            std::string rhs = inverse_key(std::string_view(rot).substr(k));
            if (lhs == rhs) continue;
            if (!seen.insert({lhs, rhs}).second) continue;
            if (rules_.size() <= k) rules_.resize(k + 1);
            rules_[k][lhs].push_back(rhs);
          }
        }
      }
      build_siblings(e.first.first, e.first.second, m, sibling_cap);
    }
    for (const auto& group : groups_)
      if (group.size() >= 2)
        for (const std::string& member : group) siblings_.emplace(member, &group);
  }

  // fn(reduced_result)
  template <class F>
  void for_each_move(const std::string& w, F&& fn) const {
    std::string scratch;
    for (std::size_t len = 0; len < rules_.size(); ++len) {
      const auto& bucket = rules_[len];
      if (bucket.empty()) continue;
      for (std::size_t posn = 0; posn + len <= w.size(); ++posn) {
        scratch.assign(w, posn, len);
        auto it = bucket.find(scratch);
        if (it == bucket.end()) continue;
        for (const std::string& rhs : it->second) {
          std::string raw;
          raw.reserve(w.size() - len + rhs.size());
          raw.append(w, 0, posn);
          raw.append(rhs);
          raw.append(w, posn + len, std::string::npos);
          fn(reduce_key(raw));
        }
      }
    }
    if (siblings_.empty()) return;
    for (std::size_t posn = 0; posn + 2 <= w.size(); ++posn) {
      for (std::size_t len = 2; posn + len <= w.size(); ++len) {
        scratch.assign(w, posn, len);
        auto it = siblings_.find(scratch);
        if (it == siblings_.end()) {
          // longer spans at this position can still match only if the
          // current span stays within one generator pair
          if (!within_one_pair(w, posn, len)) break;
          continue;
        }
        for (const std::string& alt : *it->second) {
          if (alt == scratch) continue;
          std::string raw;
          raw.reserve(w.size());
          raw.append(w, 0, posn);
          raw.append(alt);
          raw.append(w, posn + len, std::string::npos);
          fn(reduce_key(raw));
        }
      }
    }
  }

 private:
  bool within_one_pair(const std::string& w, std::size_t posn, std::size_t len) const {
    int first = w[posn] >> 1;
    int second = -1;
    for (std::size_t i = posn; i < posn + len; ++i) {
      int v = w[i] >> 1;
      if (v == first) continue;
      if (second == -1)
        second = v;
      else if (v != second)
        return false;
    }
    if (second == -1) return true;
    int label = graph_.label(first, second);
    return label != ArtinGraph::kNoEdge && label != ArtinGraph::kInfinity;
  }

  void build_siblings(VertexId a, VertexId b, int m, std::size_t cap) {
    if (cap < 2) return;
    // enumerate reduced words over {a,b}^+- by length, bucket per
    // dihedral element, keep the geodesic (minimal length) members
    std::vector<char> letters = {static_cast<char>(pos(a).code()),
                                 static_cast<char>(neg(a).code()),
                                 static_cast<char>(pos(b).code()),
                                 static_cast<char>(neg(b).code())};
    std::vector<std::string> level{""};
    std::unordered_map<std::string, std::size_t> group_of_nf;
    for (std::size_t len = 1; len <= cap; ++len) {
      std::vector<std::string> next;
      for (const std::string& u : level)
        for (char c : letters) {
          if (!u.empty() && (u.back() ^ c) == 1) continue;
          next.push_back(u + c);
        }
      for (const std::string& key : next) {
        std::string nf = garside_normal_form(word_from_key(key), a, b, m).key();
        auto [it, fresh] = group_of_nf.emplace(nf, groups_.size());
        if (fresh) groups_.emplace_back();
        auto& group = groups_[it->second];
        // geodesics only: members appear in length order
        if (!group.empty() && group.front().size() < key.size()) continue;
        group.push_back(key);
      }
      level = std::move(next);
    }
  }

  const ArtinGraph& graph_;
  std::vector<std::unordered_map<std::string, std::vector<std::string>>> rules_;
  std::deque<std::vector<std::string>> groups_;
  std::unordered_map<std::string, const std::vector<std::string>*> siblings_;
};

std::vector<int> vertex_roots(const ArtinGraph& g) {
  std::vector<int> root(g.letter_space() / 2);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[static_cast<std::size_t>(v)] != v) v = root[static_cast<std::size_t>(v)];
    return v;
  };
  for (const auto& e : g.edges())
    if (e.second != ArtinGraph::kInfinity && e.second % 2 != 0)
      root[static_cast<std::size_t>(find(e.first.first))] = find(e.first.second);
  for (std::size_t v = 0; v < root.size(); ++v) root[v] = find(static_cast<int>(v));
  return root;
}

std::size_t reduced_word_count(std::size_t alphabet, std::size_t max_len,
                               std::size_t cap) {
  // 1 + A + A(A-1) + ... with saturation at cap
  std::size_t total = 1, level = 1;
  for (std::size_t k = 1; k <= max_len; ++k) {
    level = (k == 1) ? alphabet : level * (alphabet - 1);
    total += level;
    if (total > cap) return cap + 1;
    if (level > cap) return cap + 1;
  }
  return total;
}

}  // namespace

std::vector<long long> abelianization(const Word& w, const ArtinGraph& g) {
  std::vector<int> root = vertex_roots(g);
  std::vector<long long> vec(root.size(), 0);
  for (const Letter& l : w)
    vec[static_cast<std::size_t>(root[static_cast<std::size_t>(l.vertex)])] +=
        l.negative ? -1 : 1;
  return vec;
}

RelatorEqualResult relator_equal(const Word& u, const Word& v,
                                 const ArtinGraph& g, std::size_t budget) {
  std::string u0 = reduce_key(word_key(u));
  std::string v0 = reduce_key(word_key(v));
  if (u0.size() > budget || v0.size() > budget)
    throw PreconditionError("relator_equal: budget below the input lengths");

  RelatorEqualResult res;
  if (u0 == v0) {
    res.verdict = Equality::equal;
    res.basis = RelatorEqualResult::Basis::met;
    res.witness = {word_from_key(u0)};
    return res;
  }
  if (abelianization(u, g) != abelianization(v, g)) {
    res.verdict = Equality::distinct;
    res.basis = RelatorEqualResult::Basis::invariant_separated;
    return res;
  }

  MoveGenerator rules(g, std::min<std::size_t>(budget, 12));
  std::unordered_map<std::string, std::string> parent;
  parent.emplace(u0, u0);
  std::deque<std::string> frontier{u0};
  bool truncated = false;
  bool found = false;
  while (!frontier.empty() && !found) {
    std::string cur = std::move(frontier.front());
    frontier.pop_front();
    rules.for_each_move(cur, [&](std::string&& nxt) {
      if (found) return;
      if (nxt.size() > budget) {
        truncated = true;
        return;
      }
      auto [it, fresh] = parent.emplace(std::move(nxt), cur);
      if (!fresh) return;
      if (it->first == v0) {
        found = true;
        return;
      }
      frontier.push_back(it->first);
    });
  }

  if (found) {
    res.verdict = Equality::equal;
    res.basis = RelatorEqualResult::Basis::met;
    std::vector<Word> chain;
    std::string cur = v0;
    while (true) {
      chain.push_back(word_from_key(cur));
      const std::string& p = parent.at(cur);
      if (p == cur) break;
      cur = p;
    }
    std::reverse(chain.begin(), chain.end());
    res.witness = std::move(chain);
    return res;
  }
  res.verdict = truncated ? Equality::inconclusive : Equality::distinct;
  res.basis = truncated ? RelatorEqualResult::Basis::frontier_truncated
                        : RelatorEqualResult::Basis::component_exhausted;
  return res;
}

namespace {

void enumerate_reduced(const ArtinGraph& g, std::size_t max_len,
                       std::vector<std::string>& out) {
  std::vector<char> letters;
  for (VertexId v : g.vertices()) {
    letters.push_back(static_cast<char>(pos(v).code()));
    letters.push_back(static_cast<char>(neg(v).code()));
  }
  out.push_back("");
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (char c : letters) {
        if (!out[i].empty() && (out[i].back() ^ c) == 1) continue;
        out.push_back(out[i] + c);
      }
    level_begin = level_end;
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Ball Ball::bfs(const ArtinGraph& g, std::size_t radius, std::size_t slack,
               std::size_t word_cap) {
  if (slack == kAutoSlack) slack = 2;
  const std::size_t cap_len = radius + slack;
  const std::size_t alphabet = g.vertex_count() * 2;
  if (reduced_word_count(alphabet, cap_len, word_cap) > word_cap)
    throw BudgetError("ball enumeration exceeds the word-visit cap");

  std::vector<std::string> words;
  enumerate_reduced(g, cap_len, words);
  std::unordered_map<std::string, std::size_t> id;
  id.reserve(words.size() * 2);
  for (std::size_t i = 0; i < words.size(); ++i) id.emplace(words[i], i);

  MoveGenerator rules(g, std::min<std::size_t>(cap_len, 12));
  UnionFind uf(words.size());
  std::vector<char> node_truncated(words.size(), 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    rules.for_each_move(words[i], [&](const std::string& nxt) {
      if (nxt.size() > cap_len) {
        node_truncated[i] = 1;
        return;
      }
      uf.unite(i, id.at(nxt));
    });
  }

  Ball ball;
  ball.method_ = OracleMethod::bfs_relator_moves;
  ball.radius_ = radius;

  std::unordered_map<std::size_t, std::size_t> class_of_root;
  std::vector<std::vector<std::size_t>> class_members;
  std::vector<char> class_trunc;
  // generation order is (length, code-lex) so the first member seen is the
  // shortlex-least geodesic under the default order
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::size_t root = uf.find(i);
    auto it = class_of_root.find(root);
    std::size_t cls;
    if (it == class_of_root.end()) {
      if (words[i].size() > radius) {
        // element has no representative within the radius; skip but keep
        // truncation bookkeeping irrelevant
        continue;
      }
      cls = class_members.size();
      class_of_root.emplace(root, cls);
      class_members.emplace_back();
      class_trunc.push_back(0);
    } else {
      cls = it->second;
    }
    if (words[i].size() <= radius) class_members[cls].push_back(i);
    class_trunc[cls] = static_cast<char>(class_trunc[cls] | node_truncated[i]);
    ball.lookup_.emplace(words[i], cls);
  }

  ball.classes_.resize(class_members.size());
  for (std::size_t c = 0; c < class_members.size(); ++c) {
    ClassInfo& info = ball.classes_[c];
    info.truncated = class_trunc[c] != 0;
    std::size_t best = class_members[c].front();
    for (std::size_t i : class_members[c]) {
      info.members.push_back(word_from_key(words[i]));
      if (i < best) best = i;
    }
    info.canonical = word_from_key(words[best]);
    std::size_t geo = info.canonical.size();
    for (const Word& w : info.members)
      if (w.size() == geo) info.geodesics.push_back(w);
  }
  return ball;
}

Ball Ball::garside(const ArtinGraph& g, std::size_t radius, std::size_t word_cap) {
  if (g.vertex_count() != 2)
    throw PreconditionError("garside ball needs a dihedral graph");
  VertexId a = g.vertices()[0], b = g.vertices()[1];
  int m = g.label(a, b);
  if (m == ArtinGraph::kNoEdge || m == ArtinGraph::kInfinity)
    throw PreconditionError("garside ball needs a finite label");
  if (reduced_word_count(4, radius, word_cap) > word_cap)
    throw BudgetError("ball enumeration exceeds the word-visit cap");

  std::vector<std::string> words;
  enumerate_reduced(g, radius, words);

  Ball ball;
  ball.method_ = OracleMethod::garside_dihedral;
  ball.radius_ = radius;
  ball.garside_lookup_ = true;
  ball.ga_ = a;
  ball.gb_ = b;
  ball.gm_ = m;

  std::unordered_map<std::string, std::size_t> class_of_key;
  for (const std::string& key : words) {
    Word w = word_from_key(key);
    std::string nf = garside_normal_form(w, a, b, m).key();
    auto it = class_of_key.find(nf);
    std::size_t cls;
    if (it == class_of_key.end()) {
      cls = ball.classes_.size();
      class_of_key.emplace(nf, cls);
      ball.lookup_.emplace(nf, cls);
      ball.classes_.emplace_back();
      ball.classes_[cls].canonical = w;  // first in (length, lex) order
    } else {
      cls = it->second;
    }
    ball.classes_[cls].members.push_back(std::move(w));
  }
  for (ClassInfo& info : ball.classes_) {
    std::size_t geo = info.canonical.size();
    for (const Word& w : info.members)
      if (w.size() == geo) info.geodesics.push_back(w);
  }
  return ball;
}

Ball Ball::oracle(const ArtinGraph& g, std::size_t radius, std::size_t word_cap) {
  if (g.vertex_count() == 2) {
    VertexId a = g.vertices()[0], b = g.vertices()[1];
    int m = g.label(a, b);
    if (m != ArtinGraph::kNoEdge && m != ArtinGraph::kInfinity)
      return garside(g, radius, word_cap);
  }
  return bfs(g, radius, kAutoSlack, word_cap);
}

std::optional<std::size_t> Ball::try_class_of(const Word& w) const {
  if (garside_lookup_) {
    std::string nf = garside_normal_form(w, ga_, gb_, gm_).key();
    auto it = lookup_.find(nf);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::string key = reduce_key(word_key(w));
  auto it = lookup_.find(key);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ball::class_of(const Word& w) const {
  auto c = try_class_of(w);
  if (!c) throw Error("word outside the enumerated ball");
  return *c;
}

bool Ball::same(const Word& u, const Word& v) const {
  return class_of(u) == class_of(v);
}

const std::vector<Word>& Ball::geodesics_of(const Word& g) const {
  return classes_[class_of(g)].geodesics;
}

std::size_t Ball::geodesic_length(const Word& g) const {
  return classes_[class_of(g)].canonical.size();
}

std::string Ball::dump(const ArtinGraph& g) const {
  std::string out;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    out += "class " + std::to_string(c) + ": " + g.render_word(classes_[c].canonical) + "\n";
    for (const Word& w : classes_[c].geodesics)
      out += "  " + g.render_word(w) + "\n";
  }
  return out;
}

}  // namespace artin
