#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "semikit/constructions.hpp"
#include "semikit/exception.hpp"
#include "semikit/io.hpp"

using namespace semikit;

namespace {

namespace fs = std::filesystem;

// Writes content to a unique temp file and removes it on destruction.
struct TempFile {
  explicit TempFile(std::string const& content, std::string const& ext) {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("semikit_test_" + std::to_string(counter++) + ext);
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }

  fs::path path;
};

fs::path fixture(std::string const& rel) {
  return fs::path(SEMIKIT_FIXTURES_DIR) / rel;
}

}  // namespace

TEST_CASE("loading the bundled rewriting system") {
  auto rs = io::load_rws(fixture("sec6/onerel.rws"));
  CHECK(rs.alphabet().letters() == std::vector<std::string>{"b", "a"});
  REQUIRE(rs.rules().size() == 2);
  CHECK(format_word(rs.rules()[0].lhs, rs.alphabet()) == "a b a b b a b");
  CHECK(format_word(rs.rules()[1].rhs, rs.alphabet()) == "b a b b a b");

  // Round-trip through the formatter.
  TempFile copy(io::format_rws(rs), ".rws");
  auto again = io::load_rws(copy.path);
  CHECK(again.alphabet() == rs.alphabet());
  CHECK(again.rules() == rs.rules());
}

TEST_CASE("rws parse errors carry line numbers") {
  TempFile missing_arrow("alphabet: a b\nrule: a b b\n", ".rws");
  CHECK_THROWS_WITH_AS(io::load_rws(missing_arrow.path),
                       doctest::Contains(":2:"), InvalidInput);

  TempFile no_alphabet("rule: a -> b\n", ".rws");
  CHECK_THROWS_AS(io::load_rws(no_alphabet.path), InvalidInput);

  TempFile bad_letter("alphabet: a\nrule: a q -> a\n", ".rws");
  CHECK_THROWS_AS(io::load_rws(bad_letter.path), InvalidInput);

  CHECK_THROWS_AS(io::load_rws("no_such_file.rws"), InvalidInput);
}

TEST_CASE("loading the bundled presentation") {
  auto p = io::load_sgp(fixture("sec6/onerel.sgp"));
  REQUIRE(p.relations().size() == 1);
  CHECK(format_word(p.relations()[0].first, p.alphabet()) == "a b a b b a b");
  CHECK(format_word(p.relations()[0].second, p.alphabet()) == "b");

  TempFile copy(io::format_sgp(p), ".sgp");
  auto again = io::load_sgp(copy.path);
  CHECK(again.relations() == p.relations());
}

TEST_CASE("table files round-trip and validate") {
  auto t = adjoin_identity(build_tower_t(2));
  TempFile file(io::format_tbl(t), ".tbl");
  auto loaded = io::load_tbl(file.path);
  CHECK(loaded == t);
  CHECK(loaded.names() == t.names());

  // Out-of-range entries name the offending cell.
  TempFile bad("2\n1 2\n2 3\n", ".tbl");
  CHECK_THROWS_WITH_AS(io::load_tbl(bad.path),
                       doctest::Contains("row 2, column 2"), InvalidInput);

  // Non-associative tables are rejected on load with a witness...
  TempFile non_assoc("2\n2 1\n1 1\n", ".tbl");
  CHECK_THROWS_WITH_AS(io::load_tbl(non_assoc.path),
                       doctest::Contains("not associative"), InvalidInput);
  // ...unless validation is deferred to the caller.
  CHECK(io::load_tbl(non_assoc.path, false).size() == 2);

  TempFile short_row("2\n1 2\n1\n", ".tbl");
  CHECK_THROWS_AS(io::load_tbl(short_row.path), InvalidInput);

  TempFile bad_names("2\n1 2\n2 1\nnames: only_one\n", ".tbl");
  CHECK_THROWS_AS(io::load_tbl(bad_names.path), InvalidInput);
}

TEST_CASE("act files round-trip") {
  auto bundle = build_shift_act(2);
  TempFile file(io::format_act(bundle.act), ".act");
  auto loaded = io::load_act(file.path);
  CHECK(loaded.num_states() == bundle.act.num_states());
  CHECK(loaded.state_names() == bundle.act.state_names());
  CHECK(loaded.sink() == bundle.act.sink());
  CHECK(loaded.window_radius() == bundle.act.window_radius());
  for (state_type s = 0; s < loaded.num_states(); ++s) {
    for (letter_type g = 0; g < 3; ++g) {
      CHECK(loaded.step(s, g) == bundle.act.step(s, g));
    }
  }
}

TEST_CASE("act files with defaults and errors") {
  TempFile ok(
      "generators: a b c\n"
      "states: x0 y0 sink\n"
      "sink: sink\n"
      "edge: x0 c y0\n"
      "edge: y0 c y0\n"
      "default: sink\n",
      ".act");
  auto act = io::load_act(ok.path);
  CHECK(act.num_states() == 3);
  CHECK(act.step(0, 2) == 1);
  CHECK(act.step(0, 0) == 2);  // defaulted
  CHECK(act.sink() == state_type{2});

  TempFile dup_state(
      "generators: a\nstates: s s\nedge: s a s\n", ".act");
  CHECK_THROWS_WITH_AS(io::load_act(dup_state.path),
                       doctest::Contains("duplicate state"), InvalidInput);

  TempFile missing(
      "generators: a b\nstates: s\nedge: s a s\n", ".act");
  CHECK_THROWS_WITH_AS(io::load_act(missing.path),
                       doctest::Contains("no transition"), InvalidInput);

  TempFile dup_edge(
      "generators: a\nstates: s\nedge: s a s\nedge: s a s\n", ".act");
  CHECK_THROWS_WITH_AS(io::load_act(dup_edge.path),
                       doctest::Contains("duplicate edge"), InvalidInput);

  TempFile stray_out(
      "generators: a\nstates: s\nedge: s a @out\n", ".act");
  CHECK_THROWS_WITH_AS(io::load_act(stray_out.path),
                       doctest::Contains("window"), InvalidInput);

  TempFile bad_sink(
      "generators: a\nstates: s t\nsink: t\nedge: s a s\nedge: t a s\n",
      ".act");
  CHECK_THROWS_WITH_AS(io::load_act(bad_sink.path),
                       doctest::Contains("absorb"), InvalidInput);
}

TEST_CASE("generator map literals") {
  Alphabet a({"b", "a"});
  auto m = io::parse_generator_map("a -> a ; b -> b a b", a);
  CHECK(m.image(*a.index_of("a")) == parse_word("a", a));
  CHECK(m.image(*a.index_of("b")) == parse_word("b a b", a));

  // The leading `map:` tag is accepted and formatting round-trips.
  auto tagged = io::parse_generator_map("map: a -> a ; b -> b a b", a);
  CHECK(io::format_generator_map(tagged, a) == "b -> b a b ; a -> a");
  auto again = io::parse_generator_map(io::format_generator_map(m, a), a);
  CHECK(again.images() == m.images());

  CHECK_THROWS_AS(io::parse_generator_map("a -> a", a), InvalidInput);
  CHECK_THROWS_AS(io::parse_generator_map("a -> a ; a -> a a ; b -> b", a),
                  InvalidInput);
  CHECK_THROWS_AS(io::parse_generator_map("a -> a ; b -> q", a), InvalidInput);
  CHECK_THROWS_AS(io::parse_generator_map("a = a ; b = b", a), InvalidInput);
}

TEST_CASE("tower tables emitted by the builders round-trip") {
  for (std::size_t levels : {1, 2, 4}) {
    auto t = build_tower_s(levels);
    TempFile file(io::format_tbl(t), ".tbl");
    CHECK(io::load_tbl(file.path) == t);
  }
}
