// Command-line front end. Exit codes: 0 verified/pass, 1 property refuted
// (with witness), 2 unknown / bound exceeded, 3 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semikit/acts.hpp"
#include "semikit/constructions.hpp"
#include "semikit/corpus.hpp"
#include "semikit/exception.hpp"
#include "semikit/io.hpp"
#include "semikit/presentations.hpp"
#include "semikit/rewriting.hpp"
#include "semikit/tables.hpp"
#include "semikit/words.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;

using namespace semikit;

int run_nf(std::string const& rws_path, std::string const& word_text,
           std::size_t steps) {
  auto rs = io::load_rws(rws_path);
  auto w = parse_word(word_text, rs.alphabet());
  auto nf = normal_form(w, rs, steps);
  if (!nf.ok()) {
    std::cerr << "step limit of " << steps << " exhausted\n";
    return kExitUnknown;
  }
  std::cout << format_word(*nf.word, rs.alphabet()) << "\n";
  return kExitPass;
}

int run_complete(std::string const& rws_path, std::size_t steps, bool json) {
  auto rs = io::load_rws(rws_path);
  auto verdict = check_complete(rs, steps);
  if (json) {
    nlohmann::ordered_json doc;
    doc["oriented"] = verdict.oriented;
    if (verdict.unoriented_rule) {
      doc["unoriented_rule"] = *verdict.unoriented_rule + 1;
    }
    doc["locally_confluent"] = verdict.locally_confluent;
    doc["complete"] = verdict.complete();
    doc["unresolved"] = nlohmann::ordered_json::array();
    for (auto const& u : verdict.unresolved) {
      doc["unresolved"].push_back(
          {{"left", format_word(u.left, rs.alphabet())},
           {"right", format_word(u.right, rs.alphabet())},
           {"unknown", u.limit_hit}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "oriented: " << (verdict.oriented ? "yes" : "no");
    if (verdict.unoriented_rule) {
      std::cout << " (fails at rule " << *verdict.unoriented_rule + 1 << ")";
    }
    std::cout << "\nlocally confluent: "
              << (verdict.locally_confluent ? "yes" : "no") << "\n";
    for (auto const& u : verdict.unresolved) {
      std::cout << "  unresolved: " << format_word(u.left, rs.alphabet())
                << "  vs  " << format_word(u.right, rs.alphabet())
                << (u.limit_hit ? "  (step limit)" : "") << "\n";
    }
    std::cout << "complete: " << (verdict.complete() ? "yes" : "no") << "\n";
  }
  if (verdict.complete()) {
    return kExitPass;
  }
  return verdict.any_unknown() ? kExitUnknown : kExitRefuted;
}

int run_kb(std::string const& sgp_path, std::size_t max_rules,
           std::size_t max_len, std::size_t steps,
           std::string const& out_path) {
  auto p = io::load_sgp(sgp_path);
  KbOptions options;
  options.max_rules = max_rules;
  options.max_word_len = max_len;
  options.step_limit = steps;
  auto result = knuth_bendix(p.relations(), p.alphabet(), options);
  if (!result.completed()) {
    char const* bound =
        result.status == KbResult::Status::max_rules_exceeded ? "max-rules"
        : result.status == KbResult::Status::max_word_len_exceeded
            ? "max-len"
            : "steps";
    std::cerr << "completion stopped: " << bound << " bound exceeded after "
              << result.system.rules().size() << " rules\n";
    std::cout << io::format_rws(result.system);
    return kExitUnknown;
  }
  if (!out_path.empty()) {
    io::save_rws(result.system, out_path);
  } else {
    std::cout << io::format_rws(result.system);
  }
  return kExitPass;
}

struct EndoArgs {
  std::string sgp_path;
  std::string rws_path;
  std::string map_text;
  std::size_t max_len = 0;
  std::size_t steps = kDefaultStepLimit;
};

std::tuple<Presentation, RewriteSystem, GeneratorMap> load_endo_inputs(
    EndoArgs const& args) {
  auto p = io::load_sgp(args.sgp_path);
  auto rs = args.rws_path.empty()
                ? [&] {
                    auto kb = knuth_bendix(p.relations(), p.alphabet());
                    if (!kb.completed()) {
                      throw CapExceeded(
                          "no rewriting system given and completion did not "
                          "finish; pass --rws");
                    }
                    return std::move(kb.system);
                  }()
                : io::load_rws(args.rws_path);
  auto m = io::parse_generator_map(args.map_text, p.alphabet());
  return {std::move(p), std::move(rs), std::move(m)};
}

int run_endo_check(EndoArgs const& args) {
  auto [p, rs, m] = load_endo_inputs(args);
  auto verdict = check_endomorphism(p, rs, m, args.steps);
  switch (verdict.status) {
    case EndoCheck::Status::lifts:
      std::cout << "lifts\n";
      return kExitPass;
    case EndoCheck::Status::fails:
      std::cout << "fails at relation " << verdict.relation + 1 << "\n";
      return kExitRefuted;
    case EndoCheck::Status::limit:
      std::cerr << "step limit exhausted at relation " << verdict.relation + 1
                << "\n";
      return kExitUnknown;
  }
  return kExitInputError;
}

int run_endo_onto(EndoArgs const& args) {
  auto [p, rs, m] = load_endo_inputs(args);
  std::size_t const bound =
      args.max_len ? args.max_len : kDefaultSurjectivityMaxLen;
  auto verdict = surjectivity_search(m, rs, bound, args.steps);
  if (verdict.proven()) {
    std::cout << "onto; witnesses:\n";
    for (letter_type g = 0; g < p.alphabet().size(); ++g) {
      std::cout << "  " << p.alphabet().name(g) << " <- "
                << format_word(verdict.witnesses[g], p.alphabet()) << "\n";
    }
    return kExitPass;
  }
  std::cout << "unknown within length " << bound << "\n";
  return kExitUnknown;
}

int run_endo_one2one(EndoArgs const& args) {
  auto [p, rs, m] = load_endo_inputs(args);
  std::size_t const bound =
      args.max_len ? args.max_len : kDefaultInjectivityMaxLen;
  auto verdict = injectivity_search(m, rs, bound, args.steps);
  if (verdict.refuted()) {
    std::cout << "not injective: " << format_word(verdict.first, p.alphabet())
              << "  and  " << format_word(verdict.second, p.alphabet())
              << "  share an image\n";
    return kExitRefuted;
  }
  std::cout << "unknown within length " << bound << "\n";
  return kExitUnknown;
}

int run_wordeq(std::string const& rws_path, std::string const& left,
               std::string const& right, std::size_t steps) {
  auto rs = io::load_rws(rws_path);
  bool const equal = word_equal(parse_word(left, rs.alphabet()),
                                parse_word(right, rs.alphabet()), rs, steps);
  std::cout << (equal ? "true" : "false") << "\n";
  return equal ? kExitPass : kExitRefuted;
}

int run_table_check(std::string const& path, bool light) {
  auto t = io::load_tbl(path, false);
  AssocVerdict verdict{true, {0, 0, 0}};
  if (light) {
    std::vector<element_type> all(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      all[i] = static_cast<element_type>(i);
    }
    verdict = check_associative_light(t, all);
  } else {
    verdict = check_associative(t);
  }
  if (verdict.associative) {
    std::cout << "associative\n";
    return kExitPass;
  }
  auto const [x, y, z] = verdict.witness;
  std::cout << "not associative at (" << t.label(x) << ", " << t.label(y)
            << ", " << t.label(z) << ")\n";
  return kExitRefuted;
}

std::vector<element_type> parse_gens(std::string const& text,
                                     MulTable const& t) {
  std::vector<element_type> gens;
  if (text.empty()) {
    gens.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      gens[i] = static_cast<element_type>(i);
    }
    return gens;
  }
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (auto byname = t.index_of_name(tok)) {
      gens.push_back(*byname);
      continue;
    }
    try {
      auto const v = std::stoul(tok);
      if (v < 1 || v > t.size()) {
        throw InvalidInput("generator index " + tok + " out of range");
      }
      gens.push_back(static_cast<element_type>(v - 1));
    } catch (std::invalid_argument const&) {
      throw InvalidInput("unknown element \"" + tok + "\"");
    }
  }
  return gens;
}

int run_table_hopf(std::string const& path, std::string const& gens_text) {
  auto t = io::load_tbl(path);
  auto verdict = check_hopfian_finite(t, parse_gens(gens_text, t));
  if (verdict.hopfian) {
    std::cout << "hopfian\n";
    return kExitPass;
  }
  std::cout << "not hopfian; counterexample:";
  for (element_type x = 0; x < t.size(); ++x) {
    std::cout << " " << t.label(x) << "->"
              << t.label(verdict.counterexample->at(x));
  }
  std::cout << "\n";
  return kExitRefuted;
}

int run_table_cofinite(std::string const& path, std::size_t k) {
  auto t = io::load_tbl(path);
  auto subs = cofinite_subsemigroups(t, k);
  for (auto const& sub : subs) {
    for (std::size_t i = 0; i < sub.size(); ++i) {
      std::cout << (i ? " " : "") << t.label(sub[i]);
    }
    std::cout << "\n";
  }
  std::cerr << subs.size() << " closed subset(s) of complement size " << k
            << "\n";
  return kExitPass;
}

int run_table_endos(std::string const& path, std::string const& gens_text) {
  auto t = io::load_tbl(path);
  auto endos = endomorphisms(t, parse_gens(gens_text, t));
  for (auto const& f : endos) {
    for (element_type x = 0; x < t.size(); ++x) {
      std::cout << (x ? " " : "") << t.label(x) << "->" << t.label(f.at(x));
    }
    std::cout << "\n";
  }
  std::cerr << endos.size() << " endomorphism(s)\n";
  return kExitPass;
}

int run_act_check(std::string const& path) {
  auto act = io::load_act(path);
  std::cout << "valid act: " << act.num_states() << " states, "
            << act.generators().size() << " generators"
            << (act.windowed() ? ", windowed" : "") << "\n";
  return kExitPass;
}

int run_act_dot(std::string const& path, bool show_sink_edges) {
  auto act = io::load_act(path);
  std::cout << act_to_dot(act, !show_sink_edges);
  return kExitPass;
}

int run_act_hopf(std::string const& path) {
  auto act = io::load_act(path);
  auto verdict = finite_act_hopfian(act);
  if (verdict.hopfian) {
    std::cout << "hopfian\n";
    return kExitPass;
  }
  std::cout << "not hopfian; counterexample:";
  for (state_type s = 0; s < act.num_states(); ++s) {
    std::cout << " " << act.state_name(s) << "->"
              << act.state_name(verdict.counterexample->at(s));
  }
  std::cout << "\n";
  return kExitRefuted;
}

int run_build_tower(std::size_t levels, std::string const& variant,
                    std::string const& out_path) {
  MulTable t = [&] {
    if (variant == "T") {
      return build_tower_t(levels);
    }
    if (variant == "S") {
      return build_tower_s(levels);
    }
    if (variant == "T1") {
      return adjoin_identity(build_tower_t(levels));
    }
    if (variant == "S1") {
      return adjoin_identity(build_tower_s(levels));
    }
    throw InvalidInput("unknown tower variant \"" + variant +
                       "\" (expected T, S, T1 or S1)");
  }();
  if (out_path.empty()) {
    std::cout << io::format_tbl(t);
  } else {
    io::save_tbl(t, out_path);
  }
  return kExitPass;
}

int run_build_lemma1(std::size_t window, std::string const& out_path) {
  auto bundle = build_shift_act(window);
  if (out_path.empty()) {
    std::cout << io::format_act(bundle.act);
  } else {
    io::save_act(bundle.act, out_path);
  }
  // The shift map, for reference.
  for (state_type s = 0; s < bundle.act.num_states(); ++s) {
    if (bundle.shift.in_domain(s)) {
      std::cerr << bundle.act.state_name(s) << " -> "
                << bundle.act.state_name(bundle.shift.at(s)) << "\n";
    }
  }
  return kExitPass;
}

int run_build_fx(std::size_t window, std::size_t free_len,
                 std::size_t max_len, std::string const& out_path) {
  auto bundle = build_shift_act(window);
  FxSemigroup fx(bundle.act, free_len);
  auto const elems = fx.universe(max_len);
  auto label = [&](FxElement const& e) {
    return e.is_free() ? format_word(e.word(), fx.free_alphabet())
                       : bundle.act.state_name(e.state());
  };
  std::ostringstream out;
  out << "# products of the " << elems.size()
      << "-element universe; `-` marks overflow past the truncation\n";
  for (auto const& e1 : elems) {
    for (auto const& e2 : elems) {
      auto p = fx.multiply(e1, e2);
      out << label(e1) << " * " << label(e2) << " = "
          << (p ? label(*p) : std::string("-")) << "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      throw InvalidInput("cannot write \"" + out_path + "\"");
    }
    f << out.str();
  }
  return kExitPass;
}

int run_corpus_cmd(std::string const& fixtures, bool json) {
  auto report = run_corpus(fixtures);
  if (json) {
    std::cout << corpus_report_json(report);
  } else {
    std::cout << corpus_report_text(report);
  }
  return report.all_passed() ? kExitPass : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string rewriting and finite semigroup workbench"};
  app.require_subcommand(1);

  int exit_code = kExitPass;
  auto dispatch = [&](std::function<int()> f) {
    return [&exit_code, f = std::move(f)]() { exit_code = f(); };
  };

  // nf
  std::string nf_rws, nf_word;
  std::size_t nf_steps = kDefaultStepLimit;
  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("--rws", nf_rws, "rewriting system file")->required();
  nf->add_option("--word", nf_word, "word literal")->required();
  nf->add_option("--steps", nf_steps, "step limit");
  nf->callback(dispatch([&] { return run_nf(nf_rws, nf_word, nf_steps); }));

  // complete
  std::string complete_rws;
  std::size_t complete_steps = kDefaultStepLimit;
  bool complete_json = false;
  auto* complete =
      app.add_subcommand("complete", "orientation and local confluence");
  complete->add_option("--rws", complete_rws, "rewriting system file")
      ->required();
  complete->add_option("--steps", complete_steps, "step limit");
  complete->add_flag("--json", complete_json, "machine-readable output");
  complete->callback(dispatch(
      [&] { return run_complete(complete_rws, complete_steps, complete_json); }));

  // kb
  std::string kb_sgp, kb_out;
  std::size_t kb_max_rules = kDefaultMaxRules;
  std::size_t kb_max_len = kDefaultMaxWordLen;
  std::size_t kb_steps = kDefaultStepLimit;
  auto* kb = app.add_subcommand("kb", "bounded completion of a presentation");
  kb->add_option("--sgp", kb_sgp, "presentation file")->required();
  kb->add_option("--max-rules", kb_max_rules, "rule count bound");
  kb->add_option("--max-len", kb_max_len, "rule length bound");
  kb->add_option("--steps", kb_steps, "step limit");
  kb->add_option("--out", kb_out, "write the completed system here");
  kb->callback(dispatch([&] {
    return run_kb(kb_sgp, kb_max_rules, kb_max_len, kb_steps, kb_out);
  }));

  // endo check|onto|one2one
  EndoArgs endo_args;
  auto* endo = app.add_subcommand("endo", "generator-map endomorphism probes");
  endo->require_subcommand(1);
  auto add_endo_options = [&](CLI::App* sub, bool with_len) {
    sub->add_option("--sgp", endo_args.sgp_path, "presentation file")
        ->required();
    sub->add_option("--rws", endo_args.rws_path,
                    "complete rewriting system (default: run kb)");
    sub->add_option("--map", endo_args.map_text, "generator map literal")
        ->required();
    sub->add_option("--steps", endo_args.steps, "step limit");
    if (with_len) {
      sub->add_option("--max-len", endo_args.max_len, "search length bound");
    }
  };
  auto* endo_check = endo->add_subcommand("check", "does the map lift?");
  add_endo_options(endo_check, false);
  endo_check->callback(dispatch([&] { return run_endo_check(endo_args); }));
  auto* endo_onto = endo->add_subcommand("onto", "bounded surjectivity search");
  add_endo_options(endo_onto, true);
  endo_onto->callback(dispatch([&] { return run_endo_onto(endo_args); }));
  auto* endo_one2one =
      endo->add_subcommand("one2one", "bounded non-injectivity search");
  add_endo_options(endo_one2one, true);
  endo_one2one->callback(dispatch([&] { return run_endo_one2one(endo_args); }));

  // wordeq
  std::string we_rws, we_left, we_right;
  std::size_t we_steps = kDefaultStepLimit;
  auto* wordeq = app.add_subcommand("wordeq", "decide equality of two words");
  wordeq->add_option("--rws", we_rws, "complete rewriting system")->required();
  wordeq->add_option("--left", we_left, "word literal")->required();
  wordeq->add_option("--right", we_right, "word literal")->required();
  wordeq->add_option("--steps", we_steps, "step limit");
  wordeq->callback(
      dispatch([&] { return run_wordeq(we_rws, we_left, we_right, we_steps); }));

  // table check|hopf|cofinite|endos
  std::string table_in, table_gens;
  std::size_t table_k = 1;
  bool table_light = false;
  auto* table = app.add_subcommand("table", "finite multiplication tables");
  table->require_subcommand(1);
  auto* table_check = table->add_subcommand("check", "associativity verdict");
  table_check->add_option("--in", table_in, "table file")->required();
  table_check->add_flag("--light", table_light,
                        "use Light's test over all elements");
  table_check->callback(
      dispatch([&] { return run_table_check(table_in, table_light); }));
  auto* table_hopf = table->add_subcommand("hopf", "hopficity oracle");
  table_hopf->add_option("--in", table_in, "table file")->required();
  table_hopf->add_option("--gens", table_gens,
                         "generating elements (names or 1-based indices; "
                         "default all)");
  table_hopf->callback(
      dispatch([&] { return run_table_hopf(table_in, table_gens); }));
  auto* table_cofinite =
      table->add_subcommand("cofinite", "closed subsets of complement size k");
  table_cofinite->add_option("--in", table_in, "table file")->required();
  table_cofinite->add_option("--k", table_k, "complement size")->required();
  table_cofinite->callback(
      dispatch([&] { return run_table_cofinite(table_in, table_k); }));
  auto* table_endos = table->add_subcommand("endos", "list endomorphisms");
  table_endos->add_option("--in", table_in, "table file")->required();
  table_endos->add_option("--gens", table_gens,
                          "generating elements (default all)");
  table_endos->callback(
      dispatch([&] { return run_table_endos(table_in, table_gens); }));

  // act check|dot|hopf
  std::string act_in;
  bool act_show_sink = false;
  auto* act = app.add_subcommand("act", "labeled transition acts");
  act->require_subcommand(1);
  auto* act_check = act->add_subcommand("check", "validate an act file");
  act_check->add_option("--in", act_in, "act file")->required();
  act_check->callback(dispatch([&] { return run_act_check(act_in); }));
  auto* act_dot = act->add_subcommand("dot", "emit DOT to stdout");
  act_dot->add_option("--in", act_in, "act file")->required();
  act_dot->add_flag("--show-sink-edges", act_show_sink,
                    "also draw edges into the sink");
  act_dot->callback(
      dispatch([&] { return run_act_dot(act_in, act_show_sink); }));
  auto* act_hopf = act->add_subcommand("hopf", "hopficity scan (exact acts)");
  act_hopf->add_option("--in", act_in, "act file")->required();
  act_hopf->callback(dispatch([&] { return run_act_hopf(act_in); }));

  // build tower|fx|lemma1
  std::string build_out, build_variant = "T";
  std::size_t build_levels = 2;
  std::size_t build_window = 4;
  std::size_t build_free_len = 4;
  std::size_t build_max_len = 2;
  auto* build = app.add_subcommand("build", "emit bundled constructions");
  build->require_subcommand(1);
  auto* build_tower = build->add_subcommand("tower", "tower truncations");
  build_tower->add_option("--levels", build_levels, "number of levels")
      ->required();
  build_tower->add_option("--variant", build_variant, "T, S, T1 or S1");
  build_tower->add_option("--out", build_out, "output .tbl file");
  build_tower->callback(dispatch(
      [&] { return run_build_tower(build_levels, build_variant, build_out); }));
  auto* build_fx = build->add_subcommand("fx", "product-semigroup listing");
  build_fx->add_option("--window", build_window, "act window radius");
  build_fx->add_option("--free-len", build_free_len, "free word length cap");
  build_fx->add_option("--max-len", build_max_len,
                       "free word length in the listing");
  build_fx->add_option("--out", build_out, "output file");
  build_fx->callback(dispatch([&] {
    return run_build_fx(build_window, build_free_len, build_max_len, build_out);
  }));
  auto* build_lemma1 =
      build->add_subcommand("lemma1", "windowed shift act (.act)");
  build_lemma1->add_option("--window", build_window, "window radius (>= 2)");
  build_lemma1->add_option("--out", build_out, "output .act file");
  build_lemma1->callback(
      dispatch([&] { return run_build_lemma1(build_window, build_out); }));

  // corpus run
  std::string corpus_fixtures = "fixtures";
  bool corpus_json = false;
  auto* corpus = app.add_subcommand("corpus", "built-in verification suite");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "run every bundled check");
  corpus_run->add_option("--fixtures", corpus_fixtures, "fixtures directory");
  corpus_run->add_flag("--json", corpus_json, "machine-readable report");
  corpus_run->callback(dispatch(
      [&] { return run_corpus_cmd(corpus_fixtures, corpus_json); }));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const cli_code = app.exit(e);
    return cli_code == 0 ? kExitPass : kExitInputError;
  } catch (InvalidInput const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (CapExceeded const& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitUnknown;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return exit_code;
}
