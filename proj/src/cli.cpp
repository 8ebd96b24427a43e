#include "artin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "artin/core_words.hpp"
#include "artin/dihedral.hpp"
#include "artin/geodesic_analysis.hpp"
#include "artin/kernel_polyfree.hpp"
#include "artin/oracle.hpp"
#include "artin/rewriting.hpp"

namespace artin {

namespace {

LexOrder make_order(const ArtinGraph& g, const std::string& override_text) {
  std::vector<Letter> letters;
  if (!override_text.empty()) {
    std::istringstream in(override_text);
    std::string tok;
    while (in >> tok) {
      bool negative = false;
      std::string name = tok;
      if (auto caret = tok.find('^'); caret != std::string::npos) {
        name = tok.substr(0, caret);
        if (tok.substr(caret + 1) != "-1")
          throw ParseError("order letters must be plain or ^-1: " + tok);
        negative = true;
      }
      auto v = g.find_vertex(name);
      if (!v) throw ParseError("order references unknown vertex: " + name);
      letters.push_back(Letter{*v, negative});
    }
  } else if (!g.file_order().empty()) {
    letters = g.file_order();
  } else {
    return LexOrder::default_order(g);
  }
  return LexOrder::from_letters(g, letters);
}

VertexId parse_vertex(const ArtinGraph& g, const std::string& name) {
  auto v = g.find_vertex(name);
  if (!v) throw ParseError("unknown vertex: " + name);
  return *v;
}

struct ReplayStep {
  std::size_t begin = 0, end = 0;
  CriticalForm form = CriticalForm::pure_alternating_pos;
  Word image;
};

struct ReplayBlock {
  TraceKind kind = TraceKind::lex_reducing;
  Word input;
  std::vector<ReplayStep> steps;
  Word result;
};

// Parses the --trace dump format back into sequence blocks.
std::pair<std::vector<ReplayBlock>, Word> parse_trace_dump(const ArtinGraph& g,
                                                           std::istream& in) {
  std::vector<ReplayBlock> blocks;
  Word final_result;
  bool have_final = false;
  ReplayBlock cur;
  bool open = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "sequence:") {
      if (open) throw ParseError("trace dump: sequence without result");
      cur = ReplayBlock{};
      open = true;
      std::string tok;
      while (ls >> tok) {
        if (tok == "kind") {
          std::string k;
          ls >> k;
          if (k == "length_reducing") cur.kind = TraceKind::length_reducing;
          else if (k == "lex_reducing") cur.kind = TraceKind::lex_reducing;
          else throw ParseError("trace dump: unknown kind " + k);
        }
      }
    } else if (head == "input:") {
      std::string rest;
      std::getline(ls, rest);
      cur.input = g.parse_word(rest);
    } else if (head == "step") {
      std::string idx, span_kw, span, form_kw, form_s, arrow;
      ls >> idx >> span_kw >> span >> form_kw >> form_s >> arrow;
      if (span_kw != "span" || form_kw != "form" || arrow != "tau->")
        throw ParseError("trace dump: malformed step line: " + line);
      std::size_t comma = span.find(',');
      if (span.size() < 4 || span.front() != '[' || span.back() != ')' ||
          comma == std::string::npos)
        throw ParseError("trace dump: malformed span: " + span);
      ReplayStep st;
      st.begin = std::stoul(span.substr(1, comma - 1));
      st.end = std::stoul(span.substr(comma + 1, span.size() - comma - 2));
      auto f = critical_form_from_string(form_s);
      if (!f) throw ParseError("trace dump: unknown form " + form_s);
      st.form = *f;
      std::string rest;
      std::getline(ls, rest);
      st.image = g.parse_word(rest);
      cur.steps.push_back(std::move(st));
    } else if (head == "result:") {
      std::string rest;
      std::getline(ls, rest);
      Word w = g.parse_word(rest);
      if (open) {
        cur.result = w;
        blocks.push_back(std::move(cur));
        open = false;
      }
      final_result = std::move(w);
      have_final = true;
    } else {
      throw ParseError("trace dump: unexpected line: " + line);
    }
  }
  if (open || !have_final) throw ParseError("trace dump: missing result line");
  return {blocks, final_result};
}

// Mechanical re-application of one dumped sequence.
Word replay_block(const ArtinGraph& g, const ReplayBlock& blk) {
  Word cur = blk.input;
  for (const ReplayStep& st : blk.steps) {
    if (st.end > cur.size() || st.begin >= st.end)
      throw ParseError("trace replay: span outside the word");
    Word sub = subword(cur, st.begin, st.end);
    VertexId a = sub.front().vertex, b = a;
    for (const Letter& l : sub)
      if (l.vertex != a) b = l.vertex;
    int m = g.label(a, b);
    if (m == ArtinGraph::kNoEdge || m == ArtinGraph::kInfinity)
      throw ParseError("trace replay: span has no finite label");
    auto crit = find_critical(sub, m);
    if (!crit || crit->form != st.form)
      throw ParseError("trace replay: span is not critical with the recorded form");
    Word img = tau(*crit);
    if (img != st.image) throw ParseError("trace replay: image mismatch");
    Word next = subword(cur, 0, st.begin);
    next = concat(next, img);
    next = concat(next, subword(cur, st.end, cur.size()));
    cur = std::move(next);
  }
  if (blk.kind == TraceKind::length_reducing) cur = free_reduce(cur);
  return cur;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"shortlex normal forms, geodesics and kernel free bases for large even Artin groups"};
  app.require_subcommand(1);

  std::string graph_path, order_text, output_path, replay_path, method = "auto";
  std::vector<std::string> word_args;
  std::string vertex_name, lemma_id;
  std::size_t radius = 4;
  int threads = 1;
  std::size_t budget = 0;
  bool with_trace = false;

  auto add_common = [&](CLI::App* cmd, bool needs_graph = true) {
    if (needs_graph)
      cmd->add_option("graph", graph_path, "graph file")->required();
    cmd->add_option("--order", order_text, "letter order override, e.g. \"a a^-1 b b^-1\"");
    cmd->add_option("--output", output_path, "write the report to a file");
    cmd->add_option("--budget", budget, "tau-move search budget override");
    cmd->add_option("--threads", threads, "worker threads for verification loops");
  };

  CLI::App* normalize = app.add_subcommand("normalize", "shortlex normal form");
  add_common(normalize);
  normalize->add_option("words", word_args, "words")->required()->expected(-1);
  normalize->add_flag("--trace", with_trace, "print the reduction sequences");

  CLI::App* equal = app.add_subcommand("equal", "decide equality of two words");
  add_common(equal);
  equal->add_option("words", word_args, "two words")->required()->expected(2);

  CLI::App* geodesic = app.add_subcommand("geodesic", "decide geodesity");
  add_common(geodesic);
  geodesic->add_option("words", word_args, "word")->required()->expected(1);

  CLI::App* trace = app.add_subcommand("trace", "normalize and dump the trace");
  add_common(trace);
  trace->add_option("words", word_args, "word")->required()->expected(1);
  trace->add_option("--replay", replay_path, "re-apply a dumped trace and verify");

  CLI::App* omega = app.add_subcommand("omega", "Omega-set memberships of an element");
  add_common(omega);
  omega->add_option("vertex", vertex_name, "removed vertex r")->required();
  omega->add_option("words", word_args, "word in the subgroup")->required()->expected(1);

  CLI::App* kernel = app.add_subcommand("kernel-basis", "bounded-radius kernel free basis");
  add_common(kernel);
  kernel->add_option("vertex", vertex_name, "removed vertex r")->required();
  kernel->add_option("--radius", radius, "conjugator length bound");

  CLI::App* tower = app.add_subcommand("tower", "poly-free removal schedule");
  add_common(tower);
  tower->add_option("--radius", radius, "per-step radius");

  CLI::App* verify = app.add_subcommand("verify", "check one lemma over a ball");
  verify->add_option("lemma", lemma_id, "lemma id, e.g. L3.10")->required();
  add_common(verify);
  verify->add_option("--radius", radius, "ball radius");

  CLI::App* ball = app.add_subcommand("ball", "dump the Cayley ball classes");
  add_common(ball);
  ball->add_option("--radius", radius, "ball radius");
  ball->add_option("--method", method, "auto | bfs | garside");

  std::vector<const char*> argv;
  argv.push_back("artin");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buffer;
  std::ostream& o = output_path.empty() ? out : buffer;
  int code = 0;

  ArtinGraph g = ArtinGraph::load(graph_path);
  SearchBudget sb;
  sb.max_tau_total = budget;

  if (app.got_subcommand(normalize) || app.got_subcommand(trace)) {
    bool dump = with_trace || app.got_subcommand(trace);
    LexOrder ord = make_order(g, order_text);
    Normalizer nf(g, ord, sb);
    if (!replay_path.empty()) {
      std::ifstream in(replay_path);
      if (!in) throw ParseError("cannot open trace dump: " + replay_path);
      auto [blocks, final_result] = parse_trace_dump(g, in);
      for (const ReplayBlock& blk : blocks) {
        Word got = replay_block(g, blk);
        if (got != blk.result) {
          o << "replay mismatch: got " << g.render_word(got) << " expected "
            << g.render_word(blk.result) << "\n";
          code = 1;
        }
      }
      Word fresh = nf.shortlex(g.parse_word(word_args[0]));
      if (fresh != final_result) {
        o << "replay mismatch: normalization gives " << g.render_word(fresh)
          << "\n";
        code = 1;
      }
      if (code == 0) o << "replay ok\nresult: " << g.render_word(fresh) << "\n";
    } else {
      for (const std::string& text : word_args) {
        std::vector<ReductionTrace> traces;
        Word res = nf.shortlex(g.parse_word(text), traces);
        if (dump) {
          for (const ReductionTrace& t : traces) o << format_trace(t, g);
          o << "result: " << g.render_word(res) << "\n";
        } else {
          o << g.render_word(res) << "\n";
        }
      }
    }
  } else if (app.got_subcommand(equal)) {
    Normalizer nf(g, make_order(g, order_text), sb);
    bool eq = nf.equal(g.parse_word(word_args[0]), g.parse_word(word_args[1]));
    o << (eq ? "equal" : "distinct") << "\n";
    code = eq ? 0 : 1;
  } else if (app.got_subcommand(geodesic)) {
    Normalizer nf(g, make_order(g, order_text), sb);
    bool geo = nf.geodesic(g.parse_word(word_args[0]));
    o << (geo ? "geodesic" : "not geodesic") << "\n";
    code = geo ? 0 : 1;
  } else if (app.got_subcommand(omega)) {
    KernelContext ctx(g, parse_vertex(g, vertex_name));
    auto ms = omega_membership(g.parse_word(word_args[0]), ctx);
    if (ms.empty()) {
      o << "none\n";
    } else {
      for (std::size_t i = 0; i < ms.size(); ++i)
        o << (i ? " " : "") << "(" << g.name(ms[i].vertex) << ","
          << to_string(ms[i].sign) << ")";
      o << "\n";
    }
  } else if (app.got_subcommand(kernel)) {
    EliminationState st = eliminate(g, parse_vertex(g, vertex_name), radius);
    o << format_elimination(st, g);
  } else if (app.got_subcommand(tower)) {
    try {
      std::vector<TowerStep> steps = poly_free_tower(g, radius);
      for (std::size_t i = 0; i < steps.size(); ++i)
        o << "step " << (i + 1) << ": remove " << g.name(steps[i].removed)
          << " retained " << steps[i].state.retained.size() << " eliminated "
          << steps[i].state.eliminated.size() << " escaped "
          << steps[i].state.escaped.size() << "\n";
      o << "poly-free: " << steps.size() << " steps\n";
    } catch (const UnsupportedPresentationError& e) {
      o << "unsupported: " << e.what() << "\n";
      code = 1;
    }
  } else if (app.got_subcommand(verify)) {
    LemmaReport rep = verify_lemma(lemma_id, g, radius, make_order(g, order_text),
                                   graph_path, threads);
    o << format_report(rep);
    code = rep.pass() ? 0 : 1;
  } else if (app.got_subcommand(ball)) {
    Ball b = method == "bfs"       ? Ball::bfs(g, radius)
             : method == "garside" ? Ball::garside(g, radius)
                                   : Ball::oracle(g, radius);
    o << b.dump(g);
  }

  if (!output_path.empty()) {
    std::ofstream f(output_path);
    if (!f) throw ParseError("cannot open output file: " + output_path);
    f << buffer.str();
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const AlphabetError& e) {
    err << "alphabet error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedPresentationError& e) {
    err << "unsupported presentation: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const SoundnessError& e) {
    err << "soundness alarm: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace artin
