// The built-in verification suite: every bundled scenario (the one-relation
// rewriting system under sec6/, the tower semigroups under sec2/, the
// windowed acts and product semigroup under sec5/) checked with default
// bounds. The CLI command `corpus run` prints this report.

#ifndef SEMIKIT_CORPUS_HPP_
#define SEMIKIT_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace semikit {

struct CorpusCheck {
  enum class Status { pass, fail, skip };

  std::string name;
  Status status;
  std::string witness;  // failure details, or a short summary on pass
  double millis;
};

struct CorpusReport {
  std::vector<CorpusCheck> checks;

  bool all_passed() const;
  std::size_t count(CorpusCheck::Status s) const;
};

// Runs every check against the fixtures directory (containing sec2/, sec5/,
// sec6/).
CorpusReport run_corpus(std::filesystem::path const& fixtures_dir);

// Human-readable report, one line per check, with timings.
std::string corpus_report_text(CorpusReport const& report);

// Machine-readable report with stable key order and no timings, so repeated
// runs on identical inputs are byte-identical.
std::string corpus_report_json(CorpusReport const& report);

}  // namespace semikit

#endif  // SEMIKIT_CORPUS_HPP_
