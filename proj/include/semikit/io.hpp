// Line-oriented file formats (.rws, .sgp, .tbl, .act) and the generator-map
// literal. Loaders validate invariants and report errors with line numbers.

#ifndef SEMIKIT_IO_HPP_
#define SEMIKIT_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "semikit/acts.hpp"
#include "semikit/presentations.hpp"
#include "semikit/rewriting.hpp"
#include "semikit/tables.hpp"

namespace semikit {
namespace io {

// .rws: `alphabet: b a` then `rule: a b -> b a` lines. The alphabet line
// order is the shortlex order (first letter smallest).
RewriteSystem load_rws(std::filesystem::path const& path);
std::string format_rws(RewriteSystem const& rs);
void save_rws(RewriteSystem const& rs, std::filesystem::path const& path);

// .sgp: `alphabet: b a` then `rel: u = v` lines.
Presentation load_sgp(std::filesystem::path const& path);
std::string format_sgp(Presentation const& p);
void save_sgp(Presentation const& p, std::filesystem::path const& path);

// .tbl: element count, n rows of n 1-based indices, optional `names:` line.
// Loaded tables are checked for associativity unless check_associativity is
// false (used by `table check`, whose job is the verdict itself).
MulTable load_tbl(std::filesystem::path const& path,
                  bool check_associativity = true);
std::string format_tbl(MulTable const& t);
void save_tbl(MulTable const& t, std::filesystem::path const& path);

// .act: `generators:`, `states:`, optional `sink:`, optional `window: N`,
// `edge: STATE GEN TARGET` lines (TARGET may be `@out` in windowed acts) and
// an optional `default: STATE` for unspecified pairs.
Act load_act(std::filesystem::path const& path);
std::string format_act(Act const& act);
void save_act(Act const& act, std::filesystem::path const& path);

// Generator map literal: `a -> a ; b -> b a b` (an optional leading `map:`
// is accepted).
GeneratorMap parse_generator_map(std::string_view text,
                                 Alphabet const& alphabet);
std::string format_generator_map(GeneratorMap const& m,
                                 Alphabet const& alphabet);

}  // namespace io
}  // namespace semikit

#endif  // SEMIKIT_IO_HPP_
