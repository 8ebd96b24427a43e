#include "artin/dihedral.hpp"

#include <algorithm>
#include <array>

namespace artin {

namespace {

// Distinct names of w; throws if more than two.
std::vector<VertexId> word_names(const Word& w) {
  std::vector<VertexId> names;
  for (const Letter& l : w)
    if (std::find(names.begin(), names.end(), l.vertex) == names.end())
      names.push_back(l.vertex);
  if (names.size() > 2)
    throw PreconditionError("dihedral operation on a word with more than 2 generators");
  return names;
}

void check_dihedral_input(const Word& w) {
  if (!is_freely_reduced(w))
    throw PreconditionError("dihedral operation on a non freely reduced word");
}

// Maximal same-sign alternating runs as (start, length, negative) triples.
struct Run {
  std::size_t start;
  std::size_t len;
  bool negative;
};

std::vector<Run> alternating_runs(const Word& w) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i + 1;
    while (j < w.size() && w[j].negative == w[i].negative &&
           w[j].vertex != w[j - 1].vertex)
      ++j;
    runs.push_back({i, j - i, w[i].negative});
    i = j;
  }
  return runs;
}

}  // namespace

PNStats pn_stats(const Word& w, int m) {
  check_dihedral_input(w);
  word_names(w);
  std::size_t r1 = 0, r2 = 0;
  for (const Run& r : alternating_runs(w)) {
    if (r.negative)
      r2 = std::max(r2, r.len);
    else
      r1 = std::max(r1, r.len);
  }
  PNStats s;
  s.m = m;
  s.p = static_cast<int>(std::min<std::size_t>(r1, static_cast<std::size_t>(m)));
  s.n = static_cast<int>(std::min<std::size_t>(r2, static_cast<std::size_t>(m)));
  return s;
}

GeodesicClassification classify_geodesic(const Word& w, int m) {
  PNStats s = pn_stats(w, m);
  if (s.p + s.n < m) return {GeodesicKind::unique_geodesic, std::nullopt};
  if (s.p + s.n == m) return {GeodesicKind::geodesic_among_several, std::nullopt};
  for (std::size_t len = 1; len <= w.size(); ++len)
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      Word sub = subword(w, i, i + len);
      PNStats t = pn_stats(sub, m);
      if (t.p + t.n == m) return {GeodesicKind::not_geodesic, sub};
    }
  throw SoundnessError("p+n > m but no subword with p+n = m");
}

const char* to_string(CriticalForm f) {
  switch (f) {
    case CriticalForm::pos_left: return "pos_left";
    case CriticalForm::pos_right: return "pos_right";
    case CriticalForm::neg_left: return "neg_left";
    case CriticalForm::neg_right: return "neg_right";
    case CriticalForm::unsigned_pos_first: return "unsigned_pos_first";
    case CriticalForm::unsigned_neg_first: return "unsigned_neg_first";
    case CriticalForm::pure_alternating_pos: return "pure_alternating_pos";
    case CriticalForm::pure_alternating_neg: return "pure_alternating_neg";
  }
  return "?";
}

std::optional<CriticalForm> critical_form_from_string(std::string_view s) {
  static constexpr std::array<CriticalForm, 8> all = {
      CriticalForm::pos_left,           CriticalForm::pos_right,
      CriticalForm::neg_left,           CriticalForm::neg_right,
      CriticalForm::unsigned_pos_first, CriticalForm::unsigned_neg_first,
      CriticalForm::pure_alternating_pos, CriticalForm::pure_alternating_neg};
  for (CriticalForm f : all)
    if (s == to_string(f)) return f;
  return std::nullopt;
}

namespace {

// Number of start positions of an alternating one-signed subword of
// length exactly m, restricted to runs of the given sign.
std::size_t block_occurrences(const std::vector<Run>& runs, bool negative,
                              std::size_t m) {
  std::size_t count = 0;
  for (const Run& r : runs)
    if (r.negative == negative && r.len >= m) count += r.len - m + 1;
  return count;
}

}  // namespace

std::optional<CriticalWord> find_critical(const Word& w, int m) {
  if (m < 2) throw PreconditionError("critical words need a finite label >= 2");
  PNStats s = pn_stats(w, m);
  if (s.p + s.n != m) return std::nullopt;

  std::vector<VertexId> names = word_names(w);
  if (names.size() != 2) return std::nullopt;
  std::sort(names.begin(), names.end());

  CriticalWord c;
  c.word = w;
  c.m = m;
  c.p = s.p;
  c.n = s.n;
  c.lo = names[0];
  c.hi = names[1];

  const std::size_t len = w.size();
  const std::size_t mm = static_cast<std::size_t>(m);
  const std::vector<Run> runs = alternating_runs(w);
  const std::size_t negs = negative_letter_count(w);

  if (negs == 0 || negs == len) {
    // one-signed word: needs exactly one alternating subword of length m,
    // placed at an end
    const bool negative = negs == len;
    if (block_occurrences(runs, negative, mm) != 1) return std::nullopt;
    auto it = std::find_if(runs.begin(), runs.end(),
                           [&](const Run& r) { return r.len >= mm; });
    if (it == runs.end()) return std::nullopt;
    if (len == mm) {
      c.form = negative ? CriticalForm::pure_alternating_neg
                        : CriticalForm::pure_alternating_pos;
      c.prefix_block = mm;
      c.suffix_block = 0;
      return c;
    }
    if (it->start == 0 && it->len == mm) {
      c.form = negative ? CriticalForm::neg_left : CriticalForm::pos_left;
      c.prefix_block = mm;
      c.suffix_block = 0;
      return c;
    }
    if (it->start + it->len == len && it->len == mm) {
      c.form = negative ? CriticalForm::neg_right : CriticalForm::pos_right;
      c.prefix_block = 0;
      c.suffix_block = mm;
      return c;
    }
    return std::nullopt;
  }

  // unsigned word: p, n >= 1 here, so r1 == p and r2 == n exactly
  const Run& first = runs.front();
  const Run& last = runs.back();
  const std::size_t p = static_cast<std::size_t>(s.p);
  const std::size_t n = static_cast<std::size_t>(s.n);
  if (!first.negative && last.negative && first.len == p && last.len == n) {
    c.form = CriticalForm::unsigned_pos_first;
    c.prefix_block = p;
    c.suffix_block = n;
    return c;
  }
  if (first.negative && !last.negative && first.len == n && last.len == p) {
    c.form = CriticalForm::unsigned_neg_first;
    c.prefix_block = n;
    c.suffix_block = p;
    return c;
  }
  return std::nullopt;
}

Word nu(const Word& w, VertexId lo, VertexId hi, int m) {
  if (m % 2 == 0) return w;
  Word out = w;
  for (Letter& l : out) l.vertex = (l.vertex == lo) ? hi : lo;
  return out;
}

Word tau(const CriticalWord& c) {
  const Word& w = c.word;
  const std::size_t len = w.size();
  const int m = c.m;
  auto other = [&](VertexId v) { return v == c.lo ? c.hi : c.lo; };
  const VertexId first_name = w.front().vertex;
  const VertexId last_name = w.back().vertex;
  const Word mid = subword(w, c.prefix_block, len - c.suffix_block);
  const Word mid_nu = nu(mid, c.lo, c.hi, m);

  switch (c.form) {
    case CriticalForm::pure_alternating_pos: {
      // (x,y)m -> (y,x)m
      VertexId y = last_name, x = other(y);
      return alternating(pos(y), pos(x), m, Side::right);
    }
    case CriticalForm::pure_alternating_neg: {
      VertexId y = last_name, x = other(y);
      return alternating(neg(y), neg(x), m, Side::right);
    }
    case CriticalForm::pos_right: {
      // xi+ (x,y)m -> m(t,z) nu(xi+), z = f[xi+]
      VertexId z = first_name, t = other(z);
      return concat(alternating(pos(t), pos(z), m, Side::left), mid_nu);
    }
    case CriticalForm::pos_left: {
      // m(x,y) xi+ -> nu(xi+) (z,t)m, z = l[xi+]
      VertexId z = last_name, t = other(z);
      return concat(mid_nu, alternating(pos(z), pos(t), m, Side::right));
    }
    case CriticalForm::neg_right: {
      VertexId z = first_name, t = other(z);
      return concat(alternating(neg(t), neg(z), m, Side::left), mid_nu);
    }
    case CriticalForm::neg_left: {
      VertexId z = last_name, t = other(z);
      return concat(mid_nu, alternating(neg(z), neg(t), m, Side::right));
    }
    case CriticalForm::unsigned_pos_first: {
      // p(x,y) eta (z^-1,t^-1)n -> n(y^-1,x^-1) nu(eta) (t,z)p
      VertexId x = first_name, y = other(x);
      VertexId t = last_name, z = other(t);
      return concat(alternating(neg(y), neg(x), c.n, Side::left),
                    concat(mid_nu, alternating(pos(t), pos(z), c.p, Side::right)));
    }
    case CriticalForm::unsigned_neg_first: {
      // n(x^-1,y^-1) eta (z,t)p -> p(y,x) nu(eta) (t^-1,z^-1)n
      VertexId x = first_name, y = other(x);
      VertexId t = last_name, z = other(t);
      return concat(alternating(pos(y), pos(x), c.p, Side::left),
                    concat(mid_nu, alternating(neg(t), neg(z), c.n, Side::right)));
    }
  }
  throw SoundnessError("unhandled critical form");
}

namespace {

struct GarsideState {
  long long delta_power = 0;
  std::vector<Word> factors;
};

void apply_nu_all(GarsideState& st, VertexId a, VertexId b, int m) {
  if (m % 2 == 0) return;
  for (Word& f : st.factors) f = nu(f, std::min(a, b), std::max(a, b), m);
}

void push_positive(GarsideState& st, Letter x, VertexId a, VertexId b, int m) {
  if (!st.factors.empty()) {
    Word& f = st.factors.back();
    if (f.back().vertex != x.vertex &&
        f.size() < static_cast<std::size_t>(m)) {
      f.push_back(x);
      if (f.size() == static_cast<std::size_t>(m)) {
        st.factors.pop_back();
        apply_nu_all(st, a, b, m);
        st.delta_power += 1;
      }
      return;
    }
  }
  st.factors.push_back(Word{x});
}

}  // namespace

GarsideForm garside_normal_form(const Word& w, VertexId a, VertexId b, int m) {
  if (m < 2)
    throw PreconditionError("garside_normal_form needs a finite label >= 2; use free reduction for infinite labels");
  if (a == b) throw PreconditionError("garside_normal_form: equal generators");
  GarsideState st;
  for (const Letter& l : w) {
    if (l.vertex != a && l.vertex != b)
      throw AlphabetError("garside_normal_form: letter outside the generator pair");
    if (!l.negative) {
      push_positive(st, l, a, b, m);
    } else {
      // P x^-1 = Delta^-1 nu(P) (Delta x^-1); Delta x^-1 is the
      // alternating word of length m-1 ending with the other letter.
      st.delta_power -= 1;
      apply_nu_all(st, a, b, m);
      VertexId x = l.vertex;
      VertexId o = (x == a) ? b : a;
      Word t = alternating(pos(x), pos(o), m - 1, Side::right);
      for (const Letter& tl : t) push_positive(st, tl, a, b, m);
    }
  }
  GarsideForm out;
  out.delta_power = st.delta_power;
  out.factors = std::move(st.factors);
  return out;
}

std::string GarsideForm::key() const {
  std::string s = std::to_string(delta_power);
  s.push_back('|');
  for (const Word& f : factors) {
    s += word_key(f);
    s.push_back(';');
  }
  return s;
}

bool garside_equal(const Word& u, const Word& v, VertexId a, VertexId b, int m) {
  return garside_normal_form(u, a, b, m) == garside_normal_form(v, a, b, m);
}

}  // namespace artin
