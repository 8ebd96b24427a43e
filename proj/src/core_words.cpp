#include "artin/core_words.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace artin {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word subword(const Word& w, std::size_t begin, std::size_t end) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(begin),
              w.begin() + static_cast<std::ptrdiff_t>(end));
}

Word power(Letter x, long long k) {
  Word out;
  Letter l = k >= 0 ? x : x.inverse();
  for (long long i = 0; i < (k >= 0 ? k : -k); ++i) out.push_back(l);
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

std::size_t negative_letter_count(const Word& w) {
  std::size_t n = 0;
  for (const Letter& l : w) n += l.negative ? 1 : 0;
  return n;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::string word_key(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& l : w) s.push_back(static_cast<char>(l.code()));
  return s;
}

Word word_from_key(std::string_view key) {
  Word w;
  w.reserve(key.size());
  for (char c : key) w.push_back(letter_from_code(static_cast<int>(c)));
  return w;
}

Word alternating(Letter x, Letter y, int m, Side side) {
  if (x.vertex == y.vertex)
    throw PreconditionError("alternating: letters share a name");
  if (m < 0) throw PreconditionError("alternating: negative length");
  Word out(static_cast<std::size_t>(m));
  if (side == Side::left) {
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = (i % 2 == 0) ? x : y;
  } else {
    for (int i = 0; i < m; ++i) {
      // position m-1 gets y, m-2 gets x, alternating backwards
      int from_end = m - 1 - i;
      out[static_cast<std::size_t>(i)] = (from_end % 2 == 0) ? y : x;
    }
  }
  return out;
}

VertexId ArtinGraph::add_vertex(std::string name) {
  if (find_vertex(name))
    throw ParseError("duplicate vertex name: " + name);
  VertexId id = static_cast<VertexId>(names_.size());
  names_.push_back(std::move(name));
  active_.push_back(1);
  for (auto& row : labels_) row.push_back(kNoEdge);
  labels_.emplace_back(names_.size(), kNoEdge);
  rebuild_active();
  return id;
}

void ArtinGraph::check_vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= names_.size() || !active_[static_cast<std::size_t>(v)])
    throw AlphabetError("vertex not in graph");
}

void ArtinGraph::add_edge(VertexId u, VertexId v, int label) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParseError("loop edge not allowed");
  if (label != kInfinity && label < 2)
    throw ParseError("edge label must be >= 2 or inf");
  if (labels_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != kNoEdge)
    throw ParseError("multi-edge not allowed");
  labels_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = label;
  labels_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = label;
}

bool ArtinGraph::contains(VertexId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < names_.size() &&
         active_[static_cast<std::size_t>(v)];
}

const std::string& ArtinGraph::name(VertexId v) const {
  check_vertex(v);
  return names_[static_cast<std::size_t>(v)];
}

std::optional<VertexId> ArtinGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (active_[i] && names_[i] == name) return static_cast<VertexId>(i);
  return std::nullopt;
}

int ArtinGraph::label(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return kNoEdge;
  return labels_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

bool ArtinGraph::has_finite_edge(VertexId u, VertexId v) const {
  int l = label(u, v);
  return l != kNoEdge && l != kInfinity;
}

std::vector<VertexId> ArtinGraph::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (VertexId u : active_list_)
    if (u != v && labels_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] != kNoEdge)
      out.push_back(u);
  return out;
}

std::vector<std::pair<std::pair<VertexId, VertexId>, int>> ArtinGraph::edges() const {
  std::vector<std::pair<std::pair<VertexId, VertexId>, int>> out;
  for (std::size_t i = 0; i < active_list_.size(); ++i)
    for (std::size_t j = i + 1; j < active_list_.size(); ++j) {
      VertexId u = active_list_[i], v = active_list_[j];
      int l = labels_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (l != kNoEdge) out.push_back({{u, v}, l});
    }
  return out;
}

bool ArtinGraph::is_even() const {
  for (const auto& e : edges())
    if (e.second != kInfinity && e.second % 2 != 0) return false;
  return true;
}

bool ArtinGraph::is_large() const {
  for (const auto& e : edges())
    if (e.second != kInfinity && e.second < 3) return false;
  return true;
}

bool ArtinGraph::is_large_even() const {
  for (const auto& e : edges())
    if (e.second != kInfinity && (e.second % 2 != 0 || e.second < 4)) return false;
  return true;
}

ArtinGraph ArtinGraph::without(VertexId r) const {
  check_vertex(r);
  ArtinGraph g = *this;
  g.active_[static_cast<std::size_t>(r)] = 0;
  for (std::size_t i = 0; i < g.names_.size(); ++i) {
    g.labels_[static_cast<std::size_t>(r)][i] = kNoEdge;
    g.labels_[i][static_cast<std::size_t>(r)] = kNoEdge;
  }
  g.file_order_.clear();
  g.rebuild_active();
  return g;
}

void ArtinGraph::rebuild_active() {
  active_list_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (active_[i]) active_list_.push_back(static_cast<VertexId>(i));
}

Word ArtinGraph::parse_word(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    long long k = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string exp = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        k = std::stoll(exp, &used);
        if (used != exp.size()) throw std::invalid_argument(exp);
      } catch (const std::exception&) {
        throw ParseError("malformed exponent in token: " + tok);
      }
      if (k == 0) throw ParseError("zero exponent in token: " + tok);
    }
    auto v = find_vertex(name);
    if (!v) throw ParseError("unknown generator: " + name);
    Word p = power(pos(*v), k);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::string ArtinGraph::render_letter(Letter l) const {
  check_vertex(l.vertex);
  std::string s = names_[static_cast<std::size_t>(l.vertex)];
  if (l.negative) s += "^-1";
  return s;
}

std::string ArtinGraph::render_word(const Word& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += render_letter(w[i]);
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ArtinGraph ArtinGraph::parse(std::string_view text) {
  ArtinGraph g;
  enum class Section { none, vertices, edges, order } section = Section::none;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::string order_text;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line == "[vertices]") section = Section::vertices;
      else if (line == "[edges]") section = Section::edges;
      else if (line == "[order]") section = Section::order;
      else throw ParseError("unknown section: " + std::string(line));
      continue;
    }
    switch (section) {
      case Section::none:
        throw ParseError("content before any section: " + std::string(line));
      case Section::vertices: {
        std::istringstream ls{std::string(line)};
        std::string name;
        while (ls >> name) g.add_vertex(name);
        break;
      }
      case Section::edges: {
        std::istringstream ls{std::string(line)};
        std::string a, b, m;
        if (!(ls >> a >> b >> m)) throw ParseError("bad edge line: " + std::string(line));
        auto u = g.find_vertex(a), v = g.find_vertex(b);
        if (!u || !v) throw ParseError("edge references unknown vertex: " + std::string(line));
        int lab;
        if (m == "inf") {
          lab = kInfinity;
        } else {
          try {
            std::size_t used = 0;
            lab = std::stoi(m, &used);
            if (used != m.size()) throw std::invalid_argument(m);
          } catch (const std::exception&) {
            throw ParseError("bad edge label: " + m);
          }
        }
        g.add_edge(*u, *v, lab);
        break;
      }
      case Section::order:
        if (!order_text.empty()) order_text += ' ';
        order_text += std::string(line);
        break;
    }
  }
  if (!order_text.empty()) {
    std::istringstream ls{order_text};
    std::string tok;
    while (ls >> tok) {
      bool negative = false;
      std::string name = tok;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        name = tok.substr(0, caret);
        std::string exp = tok.substr(caret + 1);
        if (exp == "-1") negative = true;
        else throw ParseError("order letters must be plain or ^-1: " + tok);
      }
      auto v = g.find_vertex(name);
      if (!v) throw ParseError("order references unknown vertex: " + tok);
      g.file_order_.push_back(Letter{*v, negative});
    }
  }
  return g;
}

ArtinGraph ArtinGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::uint64_t ArtinGraph::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::string_view s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  for (VertexId v : active_list_) mix(names_[static_cast<std::size_t>(v)]);
  for (const auto& e : edges()) {
    mix(names_[static_cast<std::size_t>(e.first.first)]);
    mix(names_[static_cast<std::size_t>(e.first.second)]);
    mix(std::to_string(e.second));
  }
  return h;
}

LexOrder LexOrder::default_order(const ArtinGraph& g) {
  std::vector<Letter> letters;
  for (VertexId v : g.vertices()) {
    letters.push_back(pos(v));
    letters.push_back(neg(v));
  }
  return from_letters(g, letters);
}

LexOrder LexOrder::from_letters(const ArtinGraph& g,
                                const std::vector<Letter>& letters) {
  if (letters.size() != g.vertex_count() * 2)
    throw AlphabetError("order must rank every signed letter exactly once");
  LexOrder ord;
  ord.rank_.assign(g.letter_space(), -1);
  int r = 0;
  for (const Letter& l : letters) {
    if (!g.contains(l.vertex)) throw AlphabetError("order letter outside graph");
    if (ord.rank_[static_cast<std::size_t>(l.code())] != -1)
      throw AlphabetError("duplicate letter in order");
    ord.rank_[static_cast<std::size_t>(l.code())] = r++;
  }
  return ord;
}

LexOrder LexOrder::letter_first(const LexOrder& base, Letter x) {
  if (!base.covers(x)) throw AlphabetError("letter outside order");
  std::vector<Letter> letters = base.letters();
  std::erase(letters, x);
  letters.insert(letters.begin(), x);
  LexOrder ord;
  ord.rank_.assign(base.rank_.size(), -1);
  int r = 0;
  for (const Letter& l : letters) ord.rank_[static_cast<std::size_t>(l.code())] = r++;
  return ord;
}

int LexOrder::rank(Letter l) const {
  std::size_t c = static_cast<std::size_t>(l.code());
  if (c >= rank_.size() || rank_[c] < 0)
    throw AlphabetError("letter not ranked by this order");
  return rank_[c];
}

bool LexOrder::covers(Letter l) const {
  std::size_t c = static_cast<std::size_t>(l.code());
  return c < rank_.size() && rank_[c] >= 0;
}

std::strong_ordering LexOrder::lex_compare(const Word& u, const Word& v) const {
  for (const Letter& l : u) rank(l);
  for (const Letter& l : v) rank(l);
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ru = rank(u[i]), rv = rank(v[i]);
    if (ru != rv) return ru <=> rv;
  }
  return u.size() <=> v.size();
}

std::strong_ordering LexOrder::shortlex_compare(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return u.size() <=> v.size();
  return lex_compare(u, v);
}

bool LexOrder::polyfree_compatible() const {
  for (std::size_t c = 0; c + 1 < rank_.size(); c += 2) {
    if (rank_[c] < 0) continue;
    if (rank_[c] > rank_[c + 1]) return false;
  }
  return true;
}

std::vector<Letter> LexOrder::letters() const {
  std::vector<std::pair<int, Letter>> tmp;
  for (std::size_t c = 0; c < rank_.size(); ++c)
    if (rank_[c] >= 0) tmp.push_back({rank_[c], letter_from_code(static_cast<int>(c))});
  std::sort(tmp.begin(), tmp.end());
  std::vector<Letter> out;
  out.reserve(tmp.size());
  for (auto& [r, l] : tmp) out.push_back(l);
  return out;
}

}  // namespace artin
