#include "artin/geodesic_analysis.hpp"

#include <sstream>

namespace artin {

bool has_geodesic_prefix(const Word& g, const Word& u, const Normalizer& nf) {
  Word slg = nf.shortlex(g);
  if (u.size() > slg.size()) return false;
  Word rest = nf.shortlex(concat(inverse(u), slg));
  return rest.size() == slg.size() - u.size();
}

InitialLetterReport initial_letters(const Word& g, const Normalizer& nf) {
  InitialLetterReport rep;
  rep.element = nf.shortlex(g);
  for (const Letter& x : nf.order().letters()) {
    bool by_length = has_geodesic_prefix(rep.element, Word{x}, nf);
    Normalizer first(nf.graph(), LexOrder::letter_first(nf.order(), x));
    Word slx = first.shortlex(rep.element);
    bool by_order = !slx.empty() && slx.front() == x;
    if (by_length != by_order)
      throw SoundnessError("initial-letter decision routes disagree on " +
                           nf.graph().render_letter(x));
    if (by_length) rep.initials.push_back(x);
  }
  for (const Letter& x : rep.initials)
    for (const Letter& y : rep.initials)
      if (x == y.inverse())
        throw SoundnessError("initial letters contain an inverse pair");
  if (nf.graph().is_even() && rep.initials.size() > 2)
    throw SoundnessError("more than two initial letters on an even graph");
  return rep;
}

int max_initial_power(const Word& g, Letter x, const Normalizer& nf) {
  Word slg = nf.shortlex(g);
  int t = 0;
  while (static_cast<std::size_t>(t) < slg.size() &&
         has_geodesic_prefix(slg, power(x, t + 1), nf))
    ++t;
  return t;
}

std::pair<Word, Word> minimal_intersection_word(int m, long long s, long long t,
                                                VertexId a, VertexId b) {
  if (m < 2) throw PreconditionError("minimal_intersection_word: label 2m < 4");
  const int block = 2 * m - 1;
  if (s >= t && t >= 1) {
    Word w = power(pos(b), t);
    for (long long i = 0; i < t; ++i)
      w = concat(w, alternating(pos(a), pos(b), block, Side::left));
    w = concat(w, power(pos(a), s - t));
    Word what = power(pos(a), s);
    for (long long i = 0; i < t; ++i)
      what = concat(what, alternating(pos(b), pos(a), block, Side::left));
    return {w, what};
  }
  if (s <= t && t <= -1) {
    Word w = power(pos(b), t);
    for (long long i = 0; i < -t; ++i)
      w = concat(w, alternating(neg(a), neg(b), block, Side::left));
    w = concat(w, power(pos(a), -(t - s)));
    Word what = power(pos(a), s);
    for (long long i = 0; i < -t; ++i)
      what = concat(what, alternating(neg(b), neg(a), block, Side::left));
    return {w, what};
  }
  if (t >= 1 && s == -1) {
    Word blockw = alternating(neg(a), neg(b), block, Side::left);
    return {concat(power(pos(b), t), blockw), concat(blockw, power(pos(b), t))};
  }
  if (t <= -1 && s == 1) {
    Word blockw = alternating(pos(a), pos(b), block, Side::left);
    return {concat(power(pos(b), t), blockw), concat(blockw, power(pos(b), t))};
  }
  throw PreconditionError("minimal_intersection_word: unsupported (s,t) pattern");
}

std::string format_report(const LemmaReport& r) {
  std::ostringstream os;
  os << "lemma " << r.lemma << " graph " << r.graph_name << " radius "
     << r.radius << ": checked " << r.checked << " violations "
     << r.violations.size() << "\n";
  for (const std::string& v : r.violations) os << v << "\n";
  return os.str();
}

}  // namespace artin
