#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "artin/geodesic_analysis.hpp"
#include "artin/kernel_polyfree.hpp"

namespace artin {

namespace {

// fn(i, violations, checked); violations merged in index order
template <class Fn>
void parallel_collect(std::size_t n, int threads, std::vector<std::string>& violations,
                      std::size_t& checked, Fn&& fn) {
  if (threads <= 1 || n < 4) {
    for (std::size_t i = 0; i < n; ++i) fn(i, violations, checked);
    return;
  }
  std::vector<std::vector<std::string>> slots(n);
  std::vector<std::size_t> counts(n, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      fn(i, slots[i], counts[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : slots[i]) violations.push_back(std::move(v));
    checked += counts[i];
  }
}

bool starts_with(const Word& w, const Word& prefix) {
  return w.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool oracle_has_prefix(const Ball& ball, const Word& g, const Word& u) {
  for (const Word& geo : ball.geodesics_of(g))
    if (starts_with(geo, u)) return true;
  return false;
}

std::set<int> oracle_initial_codes(const Ball& ball, const Word& g) {
  std::set<int> out;
  for (const Word& geo : ball.geodesics_of(g))
    if (!geo.empty()) out.insert(geo.front().code());
  return out;
}

std::size_t leading_run(const Word& w, Letter x) {
  std::size_t t = 0;
  while (t < w.size() && w[t] == x) ++t;
  return t;
}

std::vector<Word> ball_words(const Ball& ball) {
  std::vector<Word> out;
  for (std::size_t c = 0; c < ball.class_count(); ++c)
    for (const Word& w : ball.cls(c).members) out.push_back(w);
  return out;
}

struct Env {
  const ArtinGraph& g;
  const LexOrder& ord;
  std::size_t radius;
  int threads;
  Normalizer nf;
  Ball ball;

  Env(const ArtinGraph& graph, const LexOrder& order, std::size_t r, int th)
      : g(graph), ord(order), radius(r), threads(th), nf(graph, order),
        ball(Ball::oracle(graph, r)) {}
};

// ---- Section 3 lemmas ------------------------------------------------

void check_l31_l310(Env& env, bool cardinality, LemmaReport& rep) {
  parallel_collect(env.ball.class_count(), env.threads, rep.violations, rep.checked,
                   [&](std::size_t c, std::vector<std::string>& out, std::size_t& n) {
    const auto& cls = env.ball.cls(c);
    std::set<int> initials = oracle_initial_codes(env.ball, cls.canonical);
    if (!cardinality) {
      for (int code : initials)
        if (initials.count(code ^ 1) && code < (code ^ 1))
          out.push_back("letter and inverse both initial: " +
                        env.g.render_word(cls.canonical));
    } else {
      if (initials.size() > 2)
        out.push_back("more than two initial letters: " +
                      env.g.render_word(cls.canonical));
    }
    InitialLetterReport engine = initial_letters(cls.canonical, env.nf);
    std::set<int> engine_codes;
    for (const Letter& l : engine.initials) engine_codes.insert(l.code());
    if (engine_codes != initials)
      out.push_back("engine/oracle initial letters disagree: " +
                    env.g.render_word(cls.canonical));
    ++n;
  });
}

void check_l32(Env& env, LemmaReport& rep) {
  std::vector<Word> words = ball_words(env.ball);
  parallel_collect(words.size(), env.threads, rep.violations, rep.checked,
                   [&](std::size_t i, std::vector<std::string>& out, std::size_t& n) {
    const Word& w = words[i];
    if (w.size() < 2) return;
    std::size_t t = leading_run(w, w.front());
    bool geo_w = env.ball.geodesic_length(w) == w.size();
    bool engine_geo = env.nf.geodesic(w);
    if (engine_geo != geo_w)
      out.push_back("engine/oracle geodesic disagree: " + env.g.render_word(w));
    if (t >= 2) {
      Word base = concat(Word{w.front()}, subword(w, t, w.size()));
      bool geo_base = env.ball.geodesic_length(base) == base.size();
      if (geo_w != geo_base)
        out.push_back("b^t w and b w geodesic status differ: " +
                      env.g.render_word(w));
      ++n;
    }
  });
}

void check_l33(Env& env, LemmaReport& rep) {
  std::vector<Word> words = ball_words(env.ball);
  std::vector<Letter> alphabet = env.ord.letters();
  parallel_collect(words.size(), env.threads, rep.violations, rep.checked,
                   [&](std::size_t i, std::vector<std::string>& out, std::size_t& n) {
    const Word& w = words[i];
    if (w.empty()) return;
    if (env.ball.geodesic_length(w) != w.size()) return;  // w must be geodesic
    Letter b = w.front();
    std::size_t t = leading_run(w, b);
    Word wp = subword(w, t, w.size());
    for (const Letter& h : alphabet) {
      Word wh = free_reduce(concat(w, Word{h}));
      if (!env.ball.try_class_of(wh)) continue;  // wh leaves the ball
      if (!oracle_has_prefix(env.ball, wh, power(b, static_cast<long long>(t)))) {
        Word wph = free_reduce(concat(wp, Word{h}));
        if (!oracle_has_prefix(env.ball, wph, Word{b.inverse()}))
          out.push_back("conclusion fails for w=" + env.g.render_word(w) +
                        " h=" + env.g.render_letter(h));
        ++n;
      }
    }
  });
}

void check_l35(Env& env, LemmaReport& rep) {
  for (VertexId a : env.g.vertices()) {
    for (bool negative : {false, true}) {
      Letter x = negative ? neg(a) : pos(a);
      Normalizer nf2(env.g, LexOrder::letter_first(env.ord, x));
      parallel_collect(env.ball.class_count(), env.threads, rep.violations, rep.checked,
                       [&](std::size_t c, std::vector<std::string>& out, std::size_t& n) {
        Word u = nf2.shortlex(env.ball.cls(c).canonical);
        if (u.size() + 1 > env.radius) return;
        for (const Letter& l : env.ord.letters()) {
          Word ul = concat(u, Word{l});
          if (!is_freely_reduced(ul)) continue;
          if (env.ball.geodesic_length(ul) != ul.size()) continue;
          Word sl_ul = nf2.shortlex(ul);
          std::size_t s = leading_run(sl_ul, x);
          if (s < 2) continue;
          std::size_t iu = leading_run(u, x);
          if (iu >= s) continue;  // sl(u) does begin with x^s
          if (iu != s - 1)
            out.push_back("sl(u) starts with " + env.g.render_letter(x) + "^" +
                          std::to_string(iu) + ", expected " +
                          std::to_string(s - 1) + ": u=" + env.g.render_word(u) +
                          " l=" + env.g.render_letter(l));
          ++n;
        }
      });
    }
  }
}

void check_c36(Env& env, LemmaReport& rep) {
  std::vector<Word> words = ball_words(env.ball);
  for (VertexId a : env.g.vertices()) {
    for (bool negative : {false, true}) {
      Letter x = negative ? neg(a) : pos(a);
      Normalizer nf2(env.g, LexOrder::letter_first(env.ord, x));
      parallel_collect(words.size(), env.threads, rep.violations, rep.checked,
                       [&](std::size_t i, std::vector<std::string>& out, std::size_t& n) {
        const Word& w = words[i];
        if (w.empty() || w.front().vertex == a) return;
        if (env.ball.geodesic_length(w) != w.size()) return;
        std::size_t s = leading_run(nf2.shortlex(w), x);
        if (s == 0) return;
        std::size_t prev = 0;
        for (std::size_t want = 1; want <= s; ++want) {
          std::size_t found = 0;
          for (std::size_t l = prev + 1; l <= w.size(); ++l) {
            Word pr = subword(w, 0, l);
            if (leading_run(nf2.shortlex(pr), x) == want) {
              found = l;
              break;
            }
          }
          if (found == 0) {
            out.push_back("missing prefix with exact initial power " +
                          std::to_string(want) + ": w=" + env.g.render_word(w));
            break;
          }
          prev = found;
        }
        ++n;
      });
    }
  }
}

void minimal_pair_check(Env& env, int m, long long s, long long t, VertexId a,
                        VertexId b, LemmaReport& rep) {
  auto [w, what] = minimal_intersection_word(m, s, t, a, b);
  std::size_t bound = w.size();
  if (bound > env.radius) return;
  Letter la = s >= 0 ? pos(a) : neg(a);
  Letter lb = t >= 0 ? pos(b) : neg(b);
  Word pa = power(la, std::llabs(s));
  Word pb = power(lb, std::llabs(t));

  std::vector<std::size_t> hits;
  for (std::size_t c = 0; c < env.ball.class_count(); ++c) {
    const auto& cls = env.ball.cls(c);
    if (oracle_has_prefix(env.ball, cls.canonical, pa) &&
        oracle_has_prefix(env.ball, cls.canonical, pb))
      hits.push_back(c);
  }
  ++rep.checked;
  std::size_t min_len = static_cast<std::size_t>(-1);
  for (std::size_t c : hits)
    min_len = std::min(min_len, env.ball.cls(c).canonical.size());
  std::ostringstream id;
  id << "(s=" << s << ",t=" << t << ",a=" << env.g.name(a)
     << ",b=" << env.g.name(b) << ")";
  if (hits.empty() || min_len != bound) {
    rep.violations.push_back("minimal intersection length mismatch " + id.str());
    return;
  }
  std::vector<std::size_t> minimal;
  for (std::size_t c : hits)
    if (env.ball.cls(c).canonical.size() == bound) minimal.push_back(c);
  if (minimal.size() != 1) {
    rep.violations.push_back("minimal intersection element not unique " + id.str());
    return;
  }
  const auto& cls = env.ball.cls(minimal.front());
  if (env.ball.class_of(w) != minimal.front() ||
      env.ball.class_of(what) != minimal.front()) {
    rep.violations.push_back("formula pair is not the minimal element " + id.str());
    return;
  }
  if (!env.nf.equal(w, what))
    rep.violations.push_back("engine disagrees on formula pair " + id.str());
  std::vector<Word> with_pb, with_pa;
  for (const Word& geo : cls.geodesics) {
    if (starts_with(geo, pb)) with_pb.push_back(geo);
    if (starts_with(geo, pa)) with_pa.push_back(geo);
  }
  if (with_pb.size() != 1 || with_pb.front() != w || with_pa.size() != 1 ||
      with_pa.front() != what)
    rep.violations.push_back("minimal words are not the displayed pair " + id.str());
}

void check_l37(Env& env, LemmaReport& rep) {
  for (const auto& e : env.g.edges()) {
    if (e.second == ArtinGraph::kInfinity || e.second % 2 != 0) continue;
    int m = e.second / 2;
    for (auto [a, b] : {std::pair{e.first.first, e.first.second},
                        std::pair{e.first.second, e.first.first}}) {
      for (long long t = 1;; ++t) {
        if (static_cast<std::size_t>(t + t * (2 * m - 1)) > env.radius) break;
        for (long long s = t;; ++s) {
          if (static_cast<std::size_t>(s + t * (2 * m - 1)) > env.radius) break;
          minimal_pair_check(env, m, s, t, a, b, rep);
          minimal_pair_check(env, m, -s, -t, a, b, rep);
        }
      }
    }
  }
}

void check_l39(Env& env, LemmaReport& rep) {
  for (const auto& e : env.g.edges()) {
    if (e.second == ArtinGraph::kInfinity || e.second % 2 != 0) continue;
    int m = e.second / 2;
    for (auto [a, b] : {std::pair{e.first.first, e.first.second},
                        std::pair{e.first.second, e.first.first}}) {
      for (long long t = 1;; ++t) {
        if (static_cast<std::size_t>(t + 2 * m - 1) > env.radius) break;
        minimal_pair_check(env, m, -1, t, a, b, rep);
        minimal_pair_check(env, m, 1, -t, a, b, rep);
      }
    }
  }
}

void check_l38(Env& env, LemmaReport& rep) {
  std::vector<VertexId> vs = env.g.vertices();
  parallel_collect(env.ball.class_count(), env.threads, rep.violations, rep.checked,
                   [&](std::size_t c, std::vector<std::string>& out, std::size_t& n) {
    const Word& can = env.ball.cls(c).canonical;
    for (VertexId a : vs)
      for (VertexId b : vs) {
        if (a == b) continue;
        if (oracle_has_prefix(env.ball, can, power(pos(a), 2)) &&
            oracle_has_prefix(env.ball, can, power(neg(b), 2)))
          out.push_back("a^2 and b^-2 both initial: " + env.g.render_word(can));
      }
    ++n;
  });
}

// ---- Section 5 lemmas ------------------------------------------------

struct KernelEnv {
  KernelContext ctx;
  Ball ball1;
  std::vector<Word> elements;  // shortlex sorted engine ball of G1

  KernelEnv(const ArtinGraph& g, VertexId r, std::size_t radius)
      : ctx(g, r), ball1(Ball::oracle(ctx.g1(), radius)),
        elements(ctx.nf1().normal_words(radius)) {}
};

std::vector<OmegaMembership> oracle_omega(const KernelEnv& ke, const Word& g) {
  std::vector<OmegaMembership> out;
  for (const NeighborInfo& nb : ke.ctx.neighbors()) {
    if (oracle_has_prefix(ke.ball1, g, power(pos(nb.vertex), nb.params.p_plus)))
      out.push_back({nb.vertex, Sign::plus});
    if (oracle_has_prefix(ke.ball1, g, power(pos(nb.vertex), nb.params.n_minus)))
      out.push_back({nb.vertex, Sign::minus});
  }
  return out;
}

std::vector<VertexId> kernel_choices(const ArtinGraph& g) {
  std::vector<VertexId> out;
  for (VertexId r : g.vertices())
    if (g.without(r).is_large_even()) out.push_back(r);
  if (out.empty())
    throw UnsupportedPresentationError("no vertex removal leaves a large even graph");
  return out;
}

void check_l53(const ArtinGraph& g, std::size_t radius, int threads, LemmaReport& rep) {
  for (VertexId r : kernel_choices(g)) {
    KernelEnv ke(g, r, radius);
    if (ke.elements.size() != ke.ball1.class_count())
      rep.violations.push_back("engine/oracle ball sizes differ for r=" + g.name(r));
    parallel_collect(ke.elements.size(), threads, rep.violations, rep.checked,
                     [&](std::size_t i, std::vector<std::string>& out, std::size_t& n) {
      const Word& w = ke.elements[i];
      std::vector<OmegaMembership> engine;
      try {
        engine = omega_membership(w, ke.ctx);
      } catch (const SoundnessError& e) {
        out.push_back(std::string("membership alarm: ") + e.what() + ": " +
                      g.render_word(w));
        ++n;
        return;
      }
      std::vector<OmegaMembership> oracle = oracle_omega(ke, w);
      if (engine != oracle)
        out.push_back("engine/oracle memberships disagree: " + g.render_word(w));
      if (oracle.size() > 2)
        out.push_back("more than two memberships: " + g.render_word(w));
      ++n;
    });
  }
}

void check_l54(const ArtinGraph& g, std::size_t radius, int threads, LemmaReport& rep) {
  (void)threads;
  for (VertexId r : kernel_choices(g)) {
    KernelEnv ke(g, r, radius);
    const auto& nbs = ke.ctx.neighbors();
    std::vector<std::vector<OmegaMembership>> oms;
    oms.reserve(ke.elements.size());
    for (const Word& w : ke.elements) oms.push_back(oracle_omega(ke, w));
    for (std::size_t i = 0; i < nbs.size(); ++i)
      for (std::size_t j = 0; j < nbs.size(); ++j) {
        if (i == j) continue;
        bool found = false;
        for (std::size_t e = 0; e < ke.elements.size(); ++e) {
          const auto& ms = oms[e];
          bool pi = std::find(ms.begin(), ms.end(),
                              OmegaMembership{nbs[i].vertex, Sign::plus}) != ms.end();
          bool mj = std::find(ms.begin(), ms.end(),
                              OmegaMembership{nbs[j].vertex, Sign::minus}) != ms.end();
          if (pi && mj) {
            found = true;
            break;
          }
        }
        ++rep.checked;
        std::string id = " (i=" + g.name(nbs[i].vertex) + ",j=" + g.name(nbs[j].vertex) +
                         ",r=" + g.name(r) + ")";
        if (nbs[j].params.n_minus != -1) {
          if (found)
            rep.violations.push_back("intersection nonempty although n_j^- < -1" + id);
          continue;
        }
        int label = ke.ctx.g1().label(nbs[i].vertex, nbs[j].vertex);
        if (label == ArtinGraph::kNoEdge || label == ArtinGraph::kInfinity) continue;
        std::size_t need = static_cast<std::size_t>(nbs[i].params.p_plus + label - 1);
        if (need <= radius && !found)
          rep.violations.push_back("intersection empty although n_j^- = -1" + id);
      }
  }
}

void check_l58_l510_l511(const ArtinGraph& g, std::size_t radius, int threads,
                         int which, LemmaReport& rep) {
  for (VertexId r : kernel_choices(g)) {
    KernelEnv ke(g, r, radius);
    parallel_collect(ke.elements.size(), threads, rep.violations, rep.checked,
                     [&](std::size_t i, std::vector<std::string>& out, std::size_t& n) {
      const Word& w = ke.elements[i];
      auto ms = omega_membership(w, ke.ctx);
      for (const OmegaMembership& m : ms) {
        Word image = rho(w, m.vertex, m.sign, ke.ctx);
        if (ke.ball1.geodesic_length(image) != image.size()) {
          out.push_back("rho image not geodesic by oracle: " + g.render_word(w));
          continue;
        }
        const NeighborInfo* nb = ke.ctx.find_neighbor(m.vertex);
        if (which == 8) {
          if (m.sign == Sign::plus) {
            if (image.size() >= w.size())
              out.push_back("|rho_i^+(g)| not shorter: " + g.render_word(w));
          } else {
            if (image.size() > w.size())
              out.push_back("|rho_i^-(g)| longer: " + g.render_word(w));
            Word strip = ke.ctx.nf1().shortlex(
                concat(power(pos(m.vertex), -nb->params.n_minus), w));
            bool side = nb->k % 2 == 0 &&
                        !has_geodesic_prefix(strip, Word{neg(m.vertex)}, ke.ctx.nf1());
            if ((image.size() == w.size()) != side)
              out.push_back("equality condition mismatch: " + g.render_word(w));
          }
        } else if (which == 10) {
          if (m.sign == Sign::minus && image.size() == w.size()) {
            if (omega_membership(image, ke.ctx).size() >= 2)
              out.push_back("stalled rho lands in two Omega sets: " +
                            g.render_word(w));
          }
        } else {  // 11
          if (!ke.ctx.order().shortlex_less(image, ke.ctx.nf1().shortlex(w)))
            out.push_back("sl(rho(g)) not shortlex smaller: " + g.render_word(w));
        }
        ++n;
      }
    });
  }
}

void check_l512(const ArtinGraph& g, std::size_t radius, int threads, LemmaReport& rep) {
  for (VertexId r : kernel_choices(g)) {
    KernelEnv ke(g, r, radius);
    parallel_collect(ke.elements.size(), threads, rep.violations, rep.checked,
                     [&](std::size_t i, std::vector<std::string>& out, std::size_t& n) {
      const Word& w = ke.elements[i];
      if (omega_membership(w, ke.ctx).empty()) return;
      try {
        DeltaResult d = delta(w, ke.ctx);
        for (const Word& h : d.set) {
          if (!in_lambda(h, ke.ctx))
            out.push_back("delta output outside Lambda: " + g.render_word(w));
          if (h.size() > w.size())
            out.push_back("delta output longer than input: " + g.render_word(w));
          if (ke.ball1.geodesic_length(h) != h.size())
            out.push_back("delta output not geodesic by oracle: " + g.render_word(w));
        }
      } catch (const BudgetError&) {
        out.push_back("delta descent did not terminate: " + g.render_word(w));
      }
      ++n;
    });
  }
}

void check_l515(const ArtinGraph& g, std::size_t radius, int threads, LemmaReport& rep) {
  for (VertexId r : kernel_choices(g)) {
    KernelEnv ke(g, r, radius);
    parallel_collect(ke.elements.size(), threads, rep.violations, rep.checked,
                     [&](std::size_t i, std::vector<std::string>& out, std::size_t& n) {
      const Word& w = ke.elements[i];
      auto ms = omega_membership(w, ke.ctx);
      if (ms.size() != 2) return;
      std::vector<std::vector<Word>> closures;
      for (const OmegaMembership& m : ms) {
        Word im = rho(w, m.vertex, m.sign, ke.ctx);
        closures.push_back(in_lambda(im, ke.ctx) ? std::vector<Word>{im}
                                                 : delta(im, ke.ctx).set);
      }
      for (const Word& wi : closures[0])
        for (const Word& wj : closures[1]) {
          if (word_key(wi) == word_key(wj) || ke.ball1.same(wi, wj))
            out.push_back("delta branches collide: " + g.render_word(w));
        }
      ++n;
    });
  }
}

void check_l516(const ArtinGraph& g, std::size_t radius, int threads, LemmaReport& rep) {
  (void)threads;
  for (VertexId r : kernel_choices(g)) {
    KernelEnv ke(g, r, radius);
    const auto& nbs = ke.ctx.neighbors();
    std::vector<std::vector<OmegaMembership>> oms;
    for (const Word& w : ke.elements) oms.push_back(oracle_omega(ke, w));
    for (std::size_t i = 0; i < nbs.size(); ++i)
      for (std::size_t j = i + 1; j < nbs.size(); ++j) {
        int label = ke.ctx.g1().label(nbs[i].vertex, nbs[j].vertex);
        if (label == ArtinGraph::kNoEdge || label == ArtinGraph::kInfinity ||
            label % 2 != 0)
          continue;
        std::size_t ni = static_cast<std::size_t>(-nbs[i].params.n_minus);
        std::size_t nj = static_cast<std::size_t>(-nbs[j].params.n_minus);
        std::size_t bound = std::max(ni, nj) +
                            std::min(ni, nj) * static_cast<std::size_t>(label - 1);
        bool exists_min = false;
        for (std::size_t e = 0; e < ke.elements.size(); ++e) {
          const auto& ms = oms[e];
          bool ii = false, jj = false, imin = false, jmin = false;
          for (const auto& m : ms) {
            if (m.vertex == nbs[i].vertex) {
              ii = true;
              imin |= m.sign == Sign::minus;
            }
            if (m.vertex == nbs[j].vertex) {
              jj = true;
              jmin |= m.sign == Sign::minus;
            }
          }
          if (!(ii && jj)) continue;
          if (ke.elements[e].size() < bound)
            rep.violations.push_back("intersection element below length bound: " +
                                     g.render_word(ke.elements[e]));
          if (ke.elements[e].size() == bound && imin && jmin) exists_min = true;
        }
        ++rep.checked;
        if (bound <= radius && !exists_min)
          rep.violations.push_back(
              "no minus-minus intersection element of minimal length (i=" +
              g.name(nbs[i].vertex) + ",j=" + g.name(nbs[j].vertex) + ",r=" +
              g.name(r) + ")");
      }
  }
}

void enumerate_block_words(const std::vector<std::pair<VertexId, int>>& blocks,
                           std::size_t max_blocks, Word cur, int last,
                           std::vector<Word>& out) {
  out.push_back(cur);
  if (max_blocks == 0) return;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int sign : {+1, -1}) {
      int code = static_cast<int>(b) * 2 + (sign < 0 ? 1 : 0);
      if (last >= 0 && (last ^ 1) == code) continue;  // freely reduced as blocks
      Word nxt = concat(cur, power(pos(blocks[b].first),
                                   sign * static_cast<long long>(blocks[b].second)));
      enumerate_block_words(blocks, max_blocks - 1, std::move(nxt), code, out);
    }
}

void check_hfree(const ArtinGraph& g, std::size_t radius, int threads, LemmaReport& rep) {
  (void)threads;
  for (VertexId r : kernel_choices(g)) {
    KernelContext ctx(g, r);
    if (ctx.neighbors().empty()) continue;
    std::vector<std::pair<VertexId, int>> blocks;
    int kmax = 0;
    for (const NeighborInfo& nb : ctx.neighbors()) {
      blocks.push_back({nb.vertex, nb.k});
      kmax = std::max(kmax, nb.k);
    }
    std::vector<Word> words;
    enumerate_block_words(blocks, 4, {}, -1, words);
    std::set<std::string> engine_keys;
    for (const Word& w : words) engine_keys.insert(word_key(ctx.nf1().shortlex(w)));
    rep.checked += words.size();
    if (engine_keys.size() != words.size())
      rep.violations.push_back("engine: block words collide for r=" + g.name(r));

    std::size_t oracle_radius = std::max(radius, static_cast<std::size_t>(4 * kmax));
    Ball big = Ball::oracle(ctx.g1(), oracle_radius);
    std::set<std::size_t> oracle_classes;
    std::size_t usable = 0;
    for (const Word& w : words) {
      if (w.size() > oracle_radius) continue;
      ++usable;
      oracle_classes.insert(big.class_of(w));
    }
    if (oracle_classes.size() != usable)
      rep.violations.push_back("oracle: block words collide for r=" + g.name(r));
  }
}

void check_commute(const ArtinGraph& g, std::size_t radius, int threads, LemmaReport& rep) {
  for (VertexId r : kernel_choices(g)) {
    KernelEnv ke(g, r, radius);
    parallel_collect(ke.elements.size(), threads, rep.violations, rep.checked,
                     [&](std::size_t i, std::vector<std::string>& out, std::size_t& n) {
      const Word& w = ke.elements[i];
      if (w.empty()) return;
      Word conj = concat(inverse(w), concat(Word{pos(r)}, w));
      if (ke.ctx.ambient_large()) {
        if (ke.ctx.nf_ambient().equal(conj, Word{pos(r)}))
          out.push_back("nontrivial element commutes with r: " + g.render_word(w));
      } else {
        Word d = free_reduce(concat(conj, Word{neg(r)}));
        auto res = relator_equal(d, Word{}, g, d.size() + 2 * radius + 4);
        if (res.verdict == Equality::equal)
          out.push_back("nontrivial element commutes with r: " + g.render_word(w));
        else if (res.verdict == Equality::inconclusive)
          out.push_back("commute check inconclusive: " + g.render_word(w));
      }
      ++n;
    });
  }
}

}  // namespace

const std::vector<std::string>& known_lemma_ids() {
  static const std::vector<std::string> ids = {
      "L3.1", "L3.2", "L3.3", "L3.5", "C3.6", "L3.7", "L3.8", "L3.9", "L3.10",
      "L5.3", "L5.4", "L5.8", "L5.10", "L5.11", "L5.12", "L5.15", "L5.16-len",
      "H-free", "Commute"};
  return ids;
}

LemmaReport verify_lemma(const std::string& lemma_id, const ArtinGraph& g,
                         std::size_t radius, const LexOrder& ord,
                         const std::string& graph_name, int threads) {
  LemmaReport rep;
  rep.lemma = lemma_id;
  rep.graph_name = graph_name.empty()
                       ? ("g" + std::to_string(g.hash() % 100000))
                       : graph_name;
  rep.radius = radius;
  if (radius == 0) return rep;  // only the empty word: vacuous

  if (lemma_id.rfind("L3", 0) == 0 || lemma_id == "C3.6") {
    if (!g.is_large())
      throw UnsupportedPresentationError("section-3 lemmas need a large graph");
    Env env(g, ord, radius, threads);
    if (lemma_id == "L3.1") check_l31_l310(env, false, rep);
    else if (lemma_id == "L3.2") check_l32(env, rep);
    else if (lemma_id == "L3.3") check_l33(env, rep);
    else if (lemma_id == "L3.5") check_l35(env, rep);
    else if (lemma_id == "C3.6") check_c36(env, rep);
    else if (lemma_id == "L3.7") check_l37(env, rep);
    else if (lemma_id == "L3.8") check_l38(env, rep);
    else if (lemma_id == "L3.9") check_l39(env, rep);
    else if (lemma_id == "L3.10") check_l31_l310(env, true, rep);
    else throw PreconditionError("unknown lemma id: " + lemma_id);
    return rep;
  }

  if (lemma_id == "L5.3") check_l53(g, radius, threads, rep);
  else if (lemma_id == "L5.4") check_l54(g, radius, threads, rep);
  else if (lemma_id == "L5.8") check_l58_l510_l511(g, radius, threads, 8, rep);
  else if (lemma_id == "L5.10") check_l58_l510_l511(g, radius, threads, 10, rep);
  else if (lemma_id == "L5.11") check_l58_l510_l511(g, radius, threads, 11, rep);
  else if (lemma_id == "L5.12") check_l512(g, radius, threads, rep);
  else if (lemma_id == "L5.15") check_l515(g, radius, threads, rep);
  else if (lemma_id == "L5.16-len") check_l516(g, radius, threads, rep);
  else if (lemma_id == "H-free") check_hfree(g, radius, threads, rep);
  else if (lemma_id == "Commute") check_commute(g, radius, threads, rep);
  else throw PreconditionError("unknown lemma id: " + lemma_id);
  return rep;
}

}  // namespace artin
