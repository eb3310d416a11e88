#include "semikit/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "semikit/acts.hpp"
#include "semikit/constructions.hpp"
#include "semikit/exception.hpp"
#include "semikit/io.hpp"
#include "semikit/presentations.hpp"
#include "semikit/rewriting.hpp"
#include "semikit/tables.hpp"
#include "semikit/words.hpp"

namespace semikit {

bool CorpusReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](CorpusCheck const& c) {
    return c.status != CorpusCheck::Status::fail;
  });
}

std::size_t CorpusReport::count(CorpusCheck::Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [s](CorpusCheck const& c) { return c.status == s; }));
}

namespace {

struct Check {
  bool ok = true;
  std::string witness;

  void require(bool cond, std::string const& msg) {
    if (!cond && ok) {
      ok = false;
      witness = msg;
    }
  }
};

class Runner {
 public:
  void run(std::string name, std::function<void(Check&)> const& body) {
    CorpusCheck entry;
    entry.name = std::move(name);
    auto const start = std::chrono::steady_clock::now();
    Check check;
    try {
      body(check);
      entry.status =
          check.ok ? CorpusCheck::Status::pass : CorpusCheck::Status::fail;
      entry.witness = check.witness;
    } catch (std::exception const& e) {
      entry.status = CorpusCheck::Status::fail;
      entry.witness = e.what();
    }
    entry.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report.checks.push_back(std::move(entry));
  }

  CorpusReport report;
};

std::string words_to_text(std::vector<Word> const& ws, Alphabet const& a) {
  std::string out;
  for (auto const& w : ws) {
    if (!out.empty()) {
      out += ", ";
    }
    out += format_word(w, a);
  }
  return out;
}

// Irreducible words of length <= max_len.
std::vector<Word> irreducible_language(RewriteSystem const& rs,
                                       std::size_t max_len) {
  std::vector<Word> out;
  for (auto const& w : all_words(rs.alphabet().size(), max_len)) {
    if (is_irreducible(w, rs)) {
      out.push_back(w);
    }
  }
  return out;
}

void add_sec6_checks(Runner& r, std::filesystem::path const& dir) {
  auto const rws_path = dir / "sec6" / "onerel.rws";
  auto const sgp_path = dir / "sec6" / "onerel.sgp";

  r.run("sec6/rws_oriented", [&](Check& c) {
    auto rs = io::load_rws(rws_path);
    c.require(!first_unoriented_rule(rs).has_value(),
              "system is not shortlex-oriented");
  });

  r.run("sec6/rws_orientation_guard", [&](Check& c) {
    auto rs = io::load_rws(rws_path);
    Alphabet reversed({"a", "b"});
    std::vector<Rule> rules;
    for (auto const& rule : rs.rules()) {
      rules.push_back(Rule{rename_letters(rule.lhs, rs.alphabet(), reversed),
                           rename_letters(rule.rhs, rs.alphabet(), reversed)});
    }
    RewriteSystem flipped(reversed, std::move(rules));
    auto bad = first_unoriented_rule(flipped);
    c.require(bad.has_value() && *bad == 1,
              "expected orientation failure at rule 2 under order a < b");
  });

  r.run("sec6/rws_complete", [&](Check& c) {
    auto rs = io::load_rws(rws_path);
    auto verdict = check_complete(rs);
    c.require(verdict.complete(), "system is not complete");
  });

  r.run("sec6/rws_single_rule_guard", [&](Check& c) {
    auto rs = io::load_rws(rws_path);
    RewriteSystem pruned(rs.alphabet(), {rs.rules().front()});
    auto verdict = check_complete(pruned);
    c.require(!verdict.complete(), "one-rule system should not be complete");
    c.require(verdict.unresolved.size() == 1, "expected one unresolved pair");
    if (verdict.unresolved.size() == 1) {
      auto const& u = verdict.unresolved.front();
      c.witness = "unresolved pair: " + format_word(u.left, rs.alphabet()) +
                  " vs " + format_word(u.right, rs.alphabet());
      auto const left = parse_word("b a b b a b", rs.alphabet());
      auto const right = parse_word("a b a b b b", rs.alphabet());
      c.require(u.left == left && u.right == right,
                "unexpected unresolved pair: " + c.witness);
    }
  });

  r.run("sec6/kb_reconstruction", [&](Check& c) {
    auto p = io::load_sgp(sgp_path);
    auto rs = io::load_rws(rws_path);
    auto kb = knuth_bendix(p.relations(), p.alphabet());
    c.require(kb.completed(), "completion did not finish within bounds");
    if (kb.completed()) {
      auto got = irreducible_language(kb.system, 10);
      auto expected = irreducible_language(rs, 10);
      c.require(got == expected,
                "normal-form language differs from the two-rule system");
    }
  });

  auto load_phi = [&]() {
    auto p = io::load_sgp(sgp_path);
    auto rs = io::load_rws(rws_path);
    auto phi = io::parse_generator_map("a -> a ; b -> b a b", p.alphabet());
    return std::tuple(std::move(p), std::move(rs), std::move(phi));
  };

  r.run("sec6/endo_lifts", [&](Check& c) {
    auto [p, rs, phi] = load_phi();
    c.require(check_endomorphism(p, rs, phi).lifts(),
              "the map does not lift to an endomorphism");
  });

  r.run("sec6/endo_onto", [&](Check& c) {
    auto [p, rs, phi] = load_phi();
    auto verdict = surjectivity_search(phi, rs, 3);
    c.require(verdict.proven(), "no witnesses within length 3");
    if (verdict.proven()) {
      auto const a = *p.alphabet().index_of("a");
      auto const b = *p.alphabet().index_of("b");
      c.require(verdict.witnesses[a] == parse_word("a", p.alphabet()),
                "unexpected witness for a");
      c.require(verdict.witnesses[b] == parse_word("a b b", p.alphabet()),
                "unexpected witness for b");
      c.witness = "witnesses: " + words_to_text(verdict.witnesses, p.alphabet());
    }
  });

  r.run("sec6/endo_one2one", [&](Check& c) {
    auto [p, rs, phi] = load_phi();
    auto verdict = injectivity_search(phi, rs, 8);
    c.require(verdict.refuted(), "no collision within length 8");
    if (verdict.refuted()) {
      c.require(!word_equal(verdict.first, verdict.second, rs),
                "witness words are equal");
      c.require(word_equal(apply_map(phi, verdict.first),
                           apply_map(phi, verdict.second), rs),
                "witness images differ");
      c.witness = "collision: " + format_word(verdict.first, p.alphabet()) +
                  " vs " + format_word(verdict.second, p.alphabet());
    }
    // The documented pair: b and a b b a a b b, both with image b a b.
    auto const b = parse_word("b", p.alphabet());
    auto const long_word = parse_word("a b b a a b b", p.alphabet());
    auto const bab = parse_word("b a b", p.alphabet());
    c.require(!word_equal(b, long_word, rs), "expected b != a b b a a b b");
    c.require(word_equal(apply_map(phi, b), bab, rs),
              "image of b should reduce to b a b");
    c.require(word_equal(apply_map(phi, long_word), bab, rs),
              "image of a b b a a b b should reduce to b a b");
  });

  r.run("sec6/wordeq", [&](Check& c) {
    auto rs = io::load_rws(rws_path);
    c.require(word_equal(parse_word("a b a b b b", rs.alphabet()),
                         parse_word("b a b b a b", rs.alphabet()), rs),
              "expected a b a b b b = b a b b a b");
    c.require(!word_equal(parse_word("a b b a a b b", rs.alphabet()),
                          parse_word("b", rs.alphabet()), rs),
              "expected a b b a a b b != b");
  });
}

void add_sec2_checks(Runner& r) {
  r.run("sec2/tower_assoc", [&](Check& c) {
    for (std::size_t levels : {5}) {
      auto const t = build_tower_t(levels);
      auto const s = build_tower_s(levels);
      c.require(check_associative(t).associative, "T truncation");
      c.require(check_associative(s).associative, "S truncation");
      c.require(check_associative(adjoin_identity(t)).associative,
                "T1 truncation");
      c.require(check_associative(adjoin_identity(s)).associative,
                "S1 truncation");
    }
  });

  r.run("sec2/shift_endo", [&](Check& c) {
    auto report = tower_shift_endo(5);
    c.require(report.table.size() == 16, "expected 16 elements");
    c.require(report.homomorphism_ok && report.failing_pairs == 0,
              "homomorphism check failed on " +
                  std::to_string(report.failing_pairs) + " pairs");
    c.require(report.collision_ok, "collision witness (b1, 1) failed");
    c.require(report.image_is_lower_truncation,
              "image is not the 4-level truncation");
  });

  r.run("sec2/shift_endo_iterates", [&](Check& c) {
    std::size_t const levels = 5;
    auto report = tower_shift_endo(levels);
    element_type const one = static_cast<element_type>(report.table.size() - 1);
    for (std::size_t d = 1; d < levels; ++d) {
      auto iterate = [&](element_type x) {
        for (std::size_t i = 0; i < d; ++i) {
          x = report.map.at(x);
        }
        return x;
      };
      for (std::size_t lvl = 1; lvl <= levels; ++lvl) {
        for (std::size_t p = 1; p <= 3; ++p) {
          element_type const expected =
              lvl > d ? tower_element(lvl - d, p) : one;
          c.require(iterate(tower_element(lvl, p)) == expected,
                    "iterate mismatch at level " + std::to_string(lvl));
        }
      }
    }
  });

  r.run("sec2/characterize_power_5_2", [&](Check& c) {
    auto const s1 = adjoin_identity(build_tower_s(5));
    auto got = characterize_by_power_identity(s1, 5, 2);
    std::vector<element_type> expected{tower_s_f_element(5, 1)};
    c.require(got == expected, "expected exactly the generator a");
  });

  r.run("sec2/characterize_power_4_2", [&](Check& c) {
    auto const s1 = adjoin_identity(build_tower_s(5));
    auto got = characterize_by_power_identity(s1, 4, 2);
    std::vector<element_type> expected;
    for (std::size_t lvl = 1; lvl <= 5; ++lvl) {
      expected.push_back(tower_element(lvl, 1));
    }
    c.require(got == expected, "expected exactly the level generators");
  });

  r.run("sec2/tower_self_similar", [&](Check& c) {
    auto const big = build_tower_t(5);
    auto const small = build_tower_t(4);
    for (element_type x = 0; x < small.size(); ++x) {
      for (element_type y = 0; y < small.size(); ++y) {
        c.require(big.product(x + 3, y + 3) ==
                      small.product(x, y) + 3,
                  "levels 2..5 do not relabel onto the 4-level tower");
      }
    }
  });

  r.run("sec2/cofinite_mono22", [&](Check& c) {
    auto got = cofinite_subsemigroups(monogenic(2, 2), 1);
    std::vector<std::vector<element_type>> expected{{1, 2}};
    c.require(got == expected, "expected exactly {b^2, b^3}");
  });

  r.run("sec2/cofinite_mono23", [&](Check& c) {
    auto got = cofinite_subsemigroups(monogenic(2, 3), 1);
    std::vector<std::vector<element_type>> expected{{1, 2, 3}};
    c.require(got == expected, "expected exactly {a^2, a^3, a^4}");
  });

  r.run("sec2/cofinite_reverify", [&](Check& c) {
    std::vector<MulTable> tables{monogenic(2, 2), monogenic(2, 3),
                                 build_tower_t(2),
                                 adjoin_identity(build_tower_t(2))};
    for (auto const& t : tables) {
      for (std::size_t k = 1; k < t.size(); ++k) {
        for (auto const& sub : cofinite_subsemigroups(t, k)) {
          std::vector<char> member(t.size(), 0);
          for (element_type e : sub) {
            member[e] = 1;
          }
          for (element_type x : sub) {
            for (element_type y : sub) {
              c.require(member[t.product(x, y)] != 0,
                        "returned subset is not closed");
            }
          }
        }
      }
    }
  });

  r.run("sec2/hopf_t1", [&](Check& c) {
    auto const t1 = adjoin_identity(build_tower_t(2));
    std::vector<element_type> gens{tower_element(1, 1), tower_element(2, 1),
                                   static_cast<element_type>(t1.size() - 1)};
    c.require(check_hopfian_finite(t1, gens).hopfian,
              "found a surjective non-injective endomorphism");
  });

  r.run("sec2/hopf_s1", [&](Check& c) {
    auto const s1 = adjoin_identity(build_tower_s(2));
    std::vector<element_type> gens{tower_element(1, 1), tower_element(2, 1),
                                   tower_s_f_element(2, 1),
                                   static_cast<element_type>(s1.size() - 1)};
    c.require(check_hopfian_finite(s1, gens).hopfian,
              "found a surjective non-injective endomorphism");
  });

  r.run("sec2/cofinite_images_proper", [&](Check& c) {
    c.require(check_cofinite_images_proper(monogenic(2, 2), {0}).holds,
              "monogenic(2,2)");
    c.require(check_cofinite_images_proper(monogenic(1, 3), {0}).holds,
              "cyclic group of order 3");
    c.require(check_cofinite_images_proper(
                  build_tower_t(2), {tower_element(1, 1), tower_element(2, 1)})
                  .holds,
              "2-level tower");
  });
}

void add_sec5_checks(Runner& r, std::filesystem::path const& dir) {
  r.run("sec5/shift_morphism", [&](Check& c) {
    auto bundle = build_shift_act(10);
    auto verdict = check_act_morphism(bundle.act, bundle.shift);
    c.require(verdict.status == MorphismVerdict::Status::partial,
              "expected a partial verdict on the windowed act");
    c.require(verdict.ok(), "shift map violates the morphism equation");
    c.require(verdict.skipped == 2,
              "expected exactly 2 boundary skips, got " +
                  std::to_string(verdict.skipped));
  });

  r.run("sec5/shift_collision", [&](Check& c) {
    std::size_t const radius = 10;
    auto bundle = build_shift_act(radius);
    auto const y1 = shift_state_y(radius, 1);
    auto const z1 = shift_state_z(radius, 1);
    auto const y0 = shift_state_y(radius, 0);
    c.require(bundle.shift.at(y1) == y0 && bundle.shift.at(z1) == y0 &&
                  y1 != z1,
              "expected y1 and z1 to collide on y0");
  });

  r.run("sec5/shift_window_surjective", [&](Check& c) {
    std::size_t const radius = 10;
    auto bundle = build_shift_act(radius);
    std::vector<char> hit(bundle.act.num_states(), 0);
    for (state_type s = 0; s < bundle.act.num_states(); ++s) {
      if (bundle.shift.in_domain(s)) {
        hit[bundle.shift.at(s)] = 1;
      }
    }
    auto const n = static_cast<std::ptrdiff_t>(radius);
    for (std::ptrdiff_t i = -n; i <= n - 1; ++i) {
      c.require(hit[shift_state_x(radius, i)] != 0, "x state lacks a preimage");
      c.require(hit[shift_state_y(radius, i)] != 0, "y state lacks a preimage");
    }
    for (std::ptrdiff_t i = 1; i <= n - 1; ++i) {
      c.require(hit[shift_state_z(radius, static_cast<std::size_t>(i))] != 0,
                "z state lacks a preimage");
    }
    c.require(hit[shift_state_sink(radius)] != 0, "sink lacks a preimage");
  });

  r.run("sec5/orbit_generated", [&](Check& c) {
    auto bundle = build_shift_act(4);
    auto result = orbit(bundle.act, shift_state_x(4, 0));
    c.require(result.states.size() == bundle.act.num_states(),
              "orbit of x0 should reach every state");
    c.require(result.boundary_touched, "orbit should touch the window");
  });

  r.run("sec5/dot_golden", [&](Check& c) {
    auto bundle = build_shift_act(2);
    auto const got = act_to_dot(bundle.act, true);
    std::ifstream in(dir / "sec5" / "lemma1_n2.dot", std::ios::binary);
    c.require(static_cast<bool>(in), "missing golden file lemma1_n2.dot");
    if (in) {
      std::ostringstream expected;
      expected << in.rdbuf();
      c.require(got == expected.str(), "DOT output differs from golden file");
    }
  });

  r.run("sec5/top_extension", [&](Check& c) {
    auto bundle = build_shift_act(5);
    c.require(indegree_zero(bundle.act).empty(),
              "the windowed act has no source states");
    auto extended = extend_with_top(bundle.act, shift_state_x(5, 0), "top");
    auto sources = indegree_zero(extended);
    std::vector<state_type> expected{
        static_cast<state_type>(extended.num_states() - 1)};
    c.require(sources == expected, "top should be the unique source state");
  });

  r.run("sec5/act_hopf_small", [&](Check& c) {
    Alphabet g({"g"});
    Act two({"s", "t"}, g, {1, 1}, std::nullopt, std::nullopt);
    c.require(finite_act_hopfian(two).hopfian, "2-state act");
    Act three({"s", "t", "u"}, g, {1, 2, 2}, std::nullopt, std::nullopt);
    c.require(finite_act_hopfian(three).hopfian, "3-state act");
  });

  r.run("sec5/fx_assoc", [&](Check& c) {
    auto bundle = build_shift_act(4);
    FxSemigroup fx(bundle.act, 4);
    auto verdict = check_fx_associative(fx, 2);
    c.require(verdict.holds, "associativity failed on a sampled triple");
    c.witness = "skipped " + std::to_string(verdict.skipped) +
                " overflowing triples";
  });

  r.run("sec5/fx_lift_cases", [&](Check& c) {
    auto bundle = build_shift_act(4);
    FxSemigroup fx(bundle.act, 4);
    auto verdict = lift_act_morphism(fx, bundle.shift);
    c.require(verdict.ok, "lifted map violates the homomorphism equation");
    c.require(verdict.all_cases_exercised(),
              "not all four product case families were exercised");
  });

  r.run("sec5/fx_idempotents", [&](Check& c) {
    auto bundle = build_shift_act(3);
    FxSemigroup fx(bundle.act, 6);
    auto result = fx_idempotents(fx, 6);
    c.require(result.elements.size() == bundle.act.num_states(),
              "expected exactly the act parts");
    for (std::size_t i = 0; i < result.elements.size(); ++i) {
      c.require(!result.elements[i].is_free() &&
                    result.elements[i].state() == static_cast<state_type>(i),
                "unexpected idempotent");
    }
  });

  r.run("sec5/fx_product_rules", [&](Check& c) {
    std::size_t const radius = 3;
    auto bundle = build_shift_act(radius);
    FxSemigroup fx(bundle.act, 4);
    auto const x0 = FxElement::act_part(shift_state_x(radius, 0));
    auto const y0 = FxElement::act_part(shift_state_y(radius, 0));
    auto const ab =
        FxElement::free_part(parse_word("a b", fx.free_alphabet()));
    auto const cw = FxElement::free_part(parse_word("c", fx.free_alphabet()));
    auto sx = fx.multiply(ab, x0);
    c.require(sx && *sx == x0, "s x should be x");
    auto xc = fx.multiply(x0, cw);
    c.require(xc && *xc == y0, "x0 . c should be y0");
    auto xy = fx.multiply(x0, y0);
    c.require(xy && *xy == y0, "x y should be y");
  });
}

}  // namespace

CorpusReport run_corpus(std::filesystem::path const& fixtures_dir) {
  Runner runner;
  add_sec6_checks(runner, fixtures_dir);
  add_sec2_checks(runner);
  add_sec5_checks(runner, fixtures_dir);
  return runner.report;
}

std::string corpus_report_text(CorpusReport const& report) {
  std::ostringstream out;
  for (auto const& check : report.checks) {
    char const* tag = check.status == CorpusCheck::Status::pass   ? "PASS"
                      : check.status == CorpusCheck::Status::fail ? "FAIL"
                                                                  : "SKIP";
    out << '[' << tag << "] " << check.name;
    if (!check.witness.empty()) {
      out << ": " << check.witness;
    }
    out << " (" << check.millis << " ms)\n";
  }
  std::size_t const passed = report.count(CorpusCheck::Status::pass);
  std::size_t const failed = report.count(CorpusCheck::Status::fail);
  std::size_t const skipped = report.count(CorpusCheck::Status::skip);
  out << "overall: " << (report.all_passed() ? "PASS" : "FAIL") << " ("
      << passed << " passed, " << failed << " failed, " << skipped
      << " skipped)\n";
  return out.str();
}

std::string corpus_report_json(CorpusReport const& report) {
  nlohmann::ordered_json doc;
  doc["overall"] = report.all_passed() ? "pass" : "fail";
  doc["checks"] = nlohmann::ordered_json::array();
  for (auto const& check : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = check.name;
    entry["status"] = check.status == CorpusCheck::Status::pass   ? "pass"
                      : check.status == CorpusCheck::Status::fail ? "fail"
                                                                  : "skip";
    entry["witness"] = check.witness;
    doc["checks"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace semikit
