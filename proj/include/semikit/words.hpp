// Ordered alphabets, words over them, the shortlex order, and substring
// search. Everything downstream (rewriting, presentations, acts) is built on
// the types in this file.

#ifndef SEMIKIT_WORDS_HPP_
#define SEMIKIT_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semikit {

using letter_type = std::uint32_t;

// A word is a sequence of letter indices into some Alphabet. The empty word
// is representable but rejected wherever a semigroup element is expected.
using Word = std::vector<letter_type>;

// An ordered list of distinct letter names. The list order is the termination
// order used by shortlex: the first letter is the smallest. Callers needing a
// different order construct a re-ordered alphabet.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  std::string const& name(letter_type i) const { return letters_.at(i); }
  std::vector<std::string> const& letters() const noexcept { return letters_; }

  std::optional<letter_type> index_of(std::string_view name) const;
  bool contains(Word const& w) const noexcept;

  friend bool operator==(Alphabet const& a, Alphabet const& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, letter_type> index_;
};

// True iff name matches [A-Za-z][A-Za-z0-9_]*.
bool is_valid_letter_name(std::string_view name);

// Shortlex comparison by letter index: shorter words first, equal lengths
// letterwise. Total order.
std::strong_ordering shortlex_cmp(Word const& u, Word const& v) noexcept;

// Checked variant: throws InvalidInput if either word has a letter index out
// of range for the alphabet.
std::strong_ordering shortlex_cmp(Word const& u, Word const& v,
                                  Alphabet const& alphabet);

inline bool shortlex_less(Word const& u, Word const& v) noexcept {
  return shortlex_cmp(u, v) == std::strong_ordering::less;
}

// All start positions p with w[p .. p+|pattern|) == pattern, ascending.
// Overlapping occurrences are included. Throws InvalidInput on an empty
// pattern.
std::vector<std::size_t> find_occurrences(Word const& pattern, Word const& w);

// Advances w to its shortlex successor over letters {0..k-1}, growing the
// length when the current length is exhausted. Returns false (leaving w at
// the first word of length max_len + 1 truncated back to {0,..}) when the
// successor would exceed max_len; callers start from w = {0}.
bool next_word_shortlex(Word& w, std::size_t k, std::size_t max_len);

// The idx-th word (0-based, lexicographic) of the given length over
// {0..k-1}. Used to partition fixed-length strata across threads.
Word word_at(std::size_t k, std::size_t len, std::uint64_t idx);

// Sum of k^l for l in [1, max_len]; throws CapExceeded above cap.
std::uint64_t count_words(std::size_t k, std::size_t max_len,
                          std::uint64_t cap);

// All words of length 1..max_len in shortlex order. Guarded by cap.
std::vector<Word> all_words(std::size_t k, std::size_t max_len,
                            std::uint64_t cap = 10'000'000);

// Word literal syntax: letter names separated by single spaces.
Word parse_word(std::string_view text, Alphabet const& alphabet);
std::string format_word(Word const& w, Alphabet const& alphabet);

// Re-indexes w (over `from`) by letter name into `to`. Throws InvalidInput
// if some letter of w has no namesake in `to`.
Word rename_letters(Word const& w, Alphabet const& from, Alphabet const& to);

}  // namespace semikit

#endif  // SEMIKIT_WORDS_HPP_
