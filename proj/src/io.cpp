#include "semikit/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "semikit/exception.hpp"

namespace semikit {
namespace io {

namespace {

struct Line {
  std::size_t number;
  std::string key;   // token before ':' (empty for bare lines, .tbl style)
  std::string rest;  // trimmed remainder
};

std::string trim(std::string s) {
  auto const not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// Strips comments and blank lines; splits `key: rest` when a ':' occurs in
// the first token.
std::vector<Line> read_lines(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open \"" + path.string() + "\"");
  }
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    raw = trim(raw);
    if (raw.empty()) {
      continue;
    }
    Line line{number, "", raw};
    auto const colon = raw.find(':');
    auto const space = raw.find_first_of(" \t");
    if (colon != std::string::npos && (space == std::string::npos || colon < space)) {
      line.key = raw.substr(0, colon);
      line.rest = trim(raw.substr(colon + 1));
    }
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(std::filesystem::path const& path, std::size_t line,
                       std::string const& msg) {
  throw InvalidInput(path.filename().string() + ":" + std::to_string(line) +
                     ": " + msg);
}

std::vector<std::string> split_ws(std::string const& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

Word parse_word_at(std::filesystem::path const& path, std::size_t line,
                   std::string const& text, Alphabet const& alphabet) {
  try {
    return parse_word(text, alphabet);
  } catch (InvalidInput const& e) {
    fail(path, line, e.what());
  }
}

Alphabet parse_alphabet_line(std::filesystem::path const& path,
                             std::vector<Line> const& lines) {
  if (lines.empty() || lines.front().key != "alphabet") {
    fail(path, lines.empty() ? 1 : lines.front().number,
         "expected an `alphabet:` line first");
  }
  try {
    return Alphabet(split_ws(lines.front().rest));
  } catch (InvalidInput const& e) {
    fail(path, lines.front().number, e.what());
  }
}

}  // namespace

RewriteSystem load_rws(std::filesystem::path const& path) {
  auto const lines = read_lines(path);
  Alphabet alphabet = parse_alphabet_line(path, lines);
  std::vector<Rule> rules;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const& line = lines[i];
    if (line.key != "rule") {
      fail(path, line.number, "expected a `rule:` line");
    }
    auto const arrow = line.rest.find("->");
    if (arrow == std::string::npos) {
      fail(path, line.number, "expected `->` in rule");
    }
    rules.push_back(
        Rule{parse_word_at(path, line.number, line.rest.substr(0, arrow),
                           alphabet),
             parse_word_at(path, line.number, line.rest.substr(arrow + 2),
                           alphabet)});
  }
  try {
    return RewriteSystem(std::move(alphabet), std::move(rules));
  } catch (InvalidInput const& e) {
    fail(path, lines.front().number, e.what());
  }
}

std::string format_rws(RewriteSystem const& rs) {
  std::ostringstream out;
  out << "alphabet:";
  for (auto const& l : rs.alphabet().letters()) {
    out << ' ' << l;
  }
  out << '\n';
  for (auto const& r : rs.rules()) {
    out << "rule: " << format_word(r.lhs, rs.alphabet()) << " -> "
        << format_word(r.rhs, rs.alphabet()) << '\n';
  }
  return out.str();
}

void save_rws(RewriteSystem const& rs, std::filesystem::path const& path) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput("cannot write \"" + path.string() + "\"");
  }
  out << format_rws(rs);
}

Presentation load_sgp(std::filesystem::path const& path) {
  auto const lines = read_lines(path);
  Alphabet alphabet = parse_alphabet_line(path, lines);
  std::vector<std::pair<Word, Word>> relations;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const& line = lines[i];
    if (line.key != "rel") {
      fail(path, line.number, "expected a `rel:` line");
    }
    auto const eq = line.rest.find('=');
    if (eq == std::string::npos) {
      fail(path, line.number, "expected `=` in relation");
    }
    relations.emplace_back(
        parse_word_at(path, line.number, line.rest.substr(0, eq), alphabet),
        parse_word_at(path, line.number, line.rest.substr(eq + 1), alphabet));
  }
  try {
    return Presentation(std::move(alphabet), std::move(relations));
  } catch (InvalidInput const& e) {
    fail(path, lines.front().number, e.what());
  }
}

std::string format_sgp(Presentation const& p) {
  std::ostringstream out;
  out << "alphabet:";
  for (auto const& l : p.alphabet().letters()) {
    out << ' ' << l;
  }
  out << '\n';
  for (auto const& [u, v] : p.relations()) {
    out << "rel: " << format_word(u, p.alphabet()) << " = "
        << format_word(v, p.alphabet()) << '\n';
  }
  return out.str();
}

void save_sgp(Presentation const& p, std::filesystem::path const& path) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput("cannot write \"" + path.string() + "\"");
  }
  out << format_sgp(p);
}

MulTable load_tbl(std::filesystem::path const& path,
                  bool check_associativity) {
  auto const lines = read_lines(path);
  if (lines.empty()) {
    throw InvalidInput(path.filename().string() + ": empty table file");
  }
  std::size_t n = 0;
  try {
    n = std::stoul(lines.front().rest);
  } catch (std::exception const&) {
    fail(path, lines.front().number, "expected the element count");
  }
  if (n == 0) {
    fail(path, lines.front().number, "element count must be positive");
  }
  if (lines.size() < 1 + n) {
    throw InvalidInput(path.filename().string() + ": expected " +
                       std::to_string(n) + " table rows");
  }
  std::vector<element_type> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    auto const& line = lines[1 + r];
    auto const tokens = split_ws(line.key.empty()
                                     ? line.rest
                                     : line.key + ": " + line.rest);
    if (tokens.size() != n) {
      fail(path, line.number,
           "expected " + std::to_string(n) + " entries in row " +
               std::to_string(r + 1));
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t v = 0;
      try {
        v = std::stoul(tokens[c]);
      } catch (std::exception const&) {
        fail(path, line.number, "bad entry \"" + tokens[c] + "\"");
      }
      if (v < 1 || v > n) {
        fail(path, line.number,
             "entry at row " + std::to_string(r + 1) + ", column " +
                 std::to_string(c + 1) + " is out of range");
      }
      table.push_back(static_cast<element_type>(v - 1));
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 1 + n; i < lines.size(); ++i) {
    auto const& line = lines[i];
    if (line.key != "names") {
      fail(path, line.number, "unexpected line after the table rows");
    }
    names = split_ws(line.rest);
    if (names.size() != n) {
      fail(path, line.number, "expected " + std::to_string(n) + " names");
    }
  }
  MulTable t(n, std::move(table), std::move(names));
  if (check_associativity) {
    if (auto verdict = check_associative(t); !verdict.associative) {
      auto const [x, y, z] = verdict.witness;
      throw InvalidInput(path.filename().string() + ": not associative at (" +
                         t.label(x) + ", " + t.label(y) + ", " + t.label(z) +
                         ")");
    }
  }
  return t;
}

std::string format_tbl(MulTable const& t) {
  std::ostringstream out;
  out << t.size() << '\n';
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (y) {
        out << ' ';
      }
      out << t.product(static_cast<element_type>(x),
                       static_cast<element_type>(y)) +
                 1;
    }
    out << '\n';
  }
  if (t.has_names()) {
    out << "names:";
    for (auto const& name : t.names()) {
      out << ' ' << name;
    }
    out << '\n';
  }
  return out.str();
}

void save_tbl(MulTable const& t, std::filesystem::path const& path) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput("cannot write \"" + path.string() + "\"");
  }
  out << format_tbl(t);
}

Act load_act(std::filesystem::path const& path) {
  auto const lines = read_lines(path);
  std::vector<std::string> generators;
  std::vector<std::string> states;
  std::optional<std::string> sink_name;
  std::optional<std::size_t> window;
  std::optional<std::string> default_name;
  struct Edge {
    std::size_t line;
    std::string from;
    std::string gen;
    std::string to;
  };
  std::vector<Edge> edges;

  for (auto const& line : lines) {
    if (line.key == "generators") {
      generators = split_ws(line.rest);
    } else if (line.key == "states") {
      states = split_ws(line.rest);
    } else if (line.key == "sink") {
      sink_name = line.rest;
    } else if (line.key == "window") {
      try {
        window = std::stoul(line.rest);
      } catch (std::exception const&) {
        fail(path, line.number, "expected a window radius");
      }
    } else if (line.key == "default") {
      default_name = line.rest;
    } else if (line.key == "edge") {
      auto const tokens = split_ws(line.rest);
      if (tokens.size() != 3) {
        fail(path, line.number, "expected `edge: STATE GENERATOR TARGET`");
      }
      edges.push_back(Edge{line.number, tokens[0], tokens[1], tokens[2]});
    } else {
      fail(path, line.number, "unrecognized line");
    }
  }

  if (generators.empty()) {
    throw InvalidInput(path.filename().string() + ": missing `generators:`");
  }
  if (states.empty()) {
    throw InvalidInput(path.filename().string() + ": missing `states:`");
  }
  Alphabet alphabet{generators};
  std::map<std::string, state_type> index;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!index.emplace(states[i], static_cast<state_type>(i)).second) {
      throw InvalidInput(path.filename().string() + ": duplicate state name \"" +
                         states[i] + "\"");
    }
  }
  auto state_of = [&](std::string const& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) {
      fail(path, line, "unknown state \"" + name + "\"");
    }
    return it->second;
  };

  state_type const unset = kOutOfWindow - 1;
  std::vector<state_type> step(states.size() * generators.size(), unset);
  for (auto const& e : edges) {
    auto const s = state_of(e.from, e.line);
    auto const g = alphabet.index_of(e.gen);
    if (!g) {
      fail(path, e.line, "unknown generator \"" + e.gen + "\"");
    }
    state_type target;
    if (e.to == "@out") {
      if (!window) {
        fail(path, e.line, "`@out` target requires a `window:` line");
      }
      target = kOutOfWindow;
    } else {
      target = state_of(e.to, e.line);
    }
    auto& cell = step[static_cast<std::size_t>(s) * generators.size() + *g];
    if (cell != unset) {
      fail(path, e.line,
           "duplicate edge for (" + e.from + ", " + e.gen + ")");
    }
    cell = target;
  }
  if (default_name) {
    state_type const d = state_of(*default_name, 1);
    for (auto& cell : step) {
      if (cell == unset) {
        cell = d;
      }
    }
  }
  for (std::size_t s = 0; s < states.size(); ++s) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (step[s * generators.size() + g] == unset) {
        throw InvalidInput(path.filename().string() + ": no transition for (" +
                           states[s] + ", " + generators[g] +
                           ") and no default");
      }
    }
  }
  std::optional<state_type> sink;
  if (sink_name) {
    sink = state_of(*sink_name, 1);
  }
  try {
    return Act(std::move(states), std::move(alphabet), std::move(step), sink,
               window);
  } catch (InvalidInput const& e) {
    throw InvalidInput(path.filename().string() + ": " + e.what());
  }
}

std::string format_act(Act const& act) {
  std::ostringstream out;
  out << "generators:";
  for (auto const& g : act.generators().letters()) {
    out << ' ' << g;
  }
  out << '\n' << "states:";
  for (auto const& s : act.state_names()) {
    out << ' ' << s;
  }
  out << '\n';
  if (act.sink()) {
    out << "sink: " << act.state_name(*act.sink()) << '\n';
  }
  if (act.window_radius()) {
    out << "window: " << *act.window_radius() << '\n';
  }
  for (state_type s = 0; s < act.num_states(); ++s) {
    for (letter_type g = 0; g < act.generators().size(); ++g) {
      state_type const t = act.step(s, g);
      out << "edge: " << act.state_name(s) << ' ' << act.generators().name(g)
          << ' ' << (t == kOutOfWindow ? std::string("@out") : act.state_name(t))
          << '\n';
    }
  }
  return out.str();
}

void save_act(Act const& act, std::filesystem::path const& path) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInput("cannot write \"" + path.string() + "\"");
  }
  out << format_act(act);
}

GeneratorMap parse_generator_map(std::string_view text,
                                 Alphabet const& alphabet) {
  std::string body{text};
  body = trim(body);
  if (body.rfind("map:", 0) == 0) {
    body = trim(body.substr(4));
  }
  std::vector<std::optional<Word>> images(alphabet.size());
  std::size_t start = 0;
  while (start <= body.size()) {
    auto end = body.find(';', start);
    std::string const entry =
        trim(body.substr(start, end == std::string::npos ? std::string::npos
                                                         : end - start));
    if (!entry.empty()) {
      auto const arrow = entry.find("->");
      if (arrow == std::string::npos) {
        throw InvalidInput("expected `generator -> word` in map entry \"" +
                           entry + "\"");
      }
      std::string const gen = trim(entry.substr(0, arrow));
      auto const idx = alphabet.index_of(gen);
      if (!idx) {
        throw InvalidInput("unknown generator \"" + gen + "\" in map");
      }
      if (images[*idx]) {
        throw InvalidInput("generator \"" + gen + "\" mapped twice");
      }
      images[*idx] = parse_word(entry.substr(arrow + 2), alphabet);
    }
    if (end == std::string::npos) {
      break;
    }
    start = end + 1;
  }
  std::vector<Word> done;
  for (letter_type g = 0; g < alphabet.size(); ++g) {
    if (!images[g]) {
      throw InvalidInput("generator \"" + alphabet.name(g) +
                         "\" has no image in map");
    }
    done.push_back(std::move(*images[g]));
  }
  return GeneratorMap(alphabet, std::move(done));
}

std::string format_generator_map(GeneratorMap const& m,
                                 Alphabet const& alphabet) {
  std::ostringstream out;
  for (letter_type g = 0; g < alphabet.size(); ++g) {
    if (g) {
      out << " ; ";
    }
    out << alphabet.name(g) << " -> " << format_word(m.image(g), alphabet);
  }
  return out.str();
}

}  // namespace io
}  // namespace semikit
