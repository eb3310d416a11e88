// Finitely presented semigroups and candidate endomorphisms given by images
// of generators: lifting checks, bounded surjectivity / non-injectivity
// searches, and the word problem relative to a complete rewriting system.

#ifndef SEMIKIT_PRESENTATIONS_HPP_
#define SEMIKIT_PRESENTATIONS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "semikit/rewriting.hpp"
#include "semikit/words.hpp"

namespace semikit {

inline constexpr std::size_t kDefaultSurjectivityMaxLen = 6;
inline constexpr std::size_t kDefaultInjectivityMaxLen = 8;

class Presentation {
 public:
  Presentation(Alphabet alphabet,
               std::vector<std::pair<Word, Word>> relations);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::vector<std::pair<Word, Word>> const& relations() const noexcept {
    return relations_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::pair<Word, Word>> relations_;
};

// One nonempty image word per generator; source and target alphabet
// coincide.
class GeneratorMap {
 public:
  GeneratorMap(Alphabet const& alphabet, std::vector<Word> images);

  std::size_t arity() const noexcept { return images_.size(); }
  Word const& image(letter_type g) const { return images_.at(g); }
  std::vector<Word> const& images() const noexcept { return images_; }

 private:
  std::vector<Word> images_;
};

GeneratorMap identity_map(Alphabet const& alphabet);

// Substitutes each letter by its image, preserving order.
Word apply_map(GeneratorMap const& m, Word const& w);

// first, then second: g -> apply_map(second, first(g)).
GeneratorMap compose(Alphabet const& alphabet, GeneratorMap const& first,
                     GeneratorMap const& second);

struct EndoCheck {
  enum class Status { lifts, fails, limit };
  Status status;
  std::size_t relation = 0;  // offending relation for fails / limit

  bool lifts() const noexcept { return status == Status::lifts; }
};

// The map lifts to an endomorphism iff both sides of every relation have
// equal normal forms after substitution. rs must be a complete system
// presenting p (caller responsibility).
EndoCheck check_endomorphism(Presentation const& p, RewriteSystem const& rs,
                             GeneratorMap const& m,
                             std::size_t step_limit = kDefaultStepLimit);

struct SurjectivityVerdict {
  enum class Status { proven, unknown };
  Status status;
  std::vector<Word> witnesses;  // per generator; meaningful iff proven
  std::size_t bound_used;

  bool proven() const noexcept { return status == Status::proven; }
};

// For each generator g, the shortlex-least word w with |w| <= max_len and
// NF(m(w)) = NF(g). Bounded search cannot refute surjectivity, so the
// negative outcome is `unknown`.
SurjectivityVerdict surjectivity_search(
    GeneratorMap const& m, RewriteSystem const& rs,
    std::size_t max_len = kDefaultSurjectivityMaxLen,
    std::size_t step_limit = kDefaultStepLimit);

struct InjectivityVerdict {
  enum class Status { refuted, unknown };
  Status status;
  Word first;   // meaningful iff refuted: distinct normal forms,
  Word second;  // identical image normal forms
  std::size_t bound_used;

  bool refuted() const noexcept { return status == Status::refuted; }
};

// Enumerates irreducible words in shortlex order up to max_len, bucketing by
// the normal form of the image; the first collision is the canonical
// witness pair.
InjectivityVerdict injectivity_search(
    GeneratorMap const& m, RewriteSystem const& rs,
    std::size_t max_len = kDefaultInjectivityMaxLen,
    std::size_t step_limit = kDefaultStepLimit);

// Decides u = v via normal forms. Throws CapExceeded if a normal form does
// not settle within step_limit.
bool word_equal(Word const& u, Word const& v, RewriteSystem const& rs,
                std::size_t step_limit = kDefaultStepLimit);

}  // namespace semikit

#endif  // SEMIKIT_PRESENTATIONS_HPP_
