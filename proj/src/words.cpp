#include "semikit/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "semikit/exception.hpp"

namespace semikit {

bool is_valid_letter_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw InvalidInput("alphabet must contain at least one letter");
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!is_valid_letter_name(letters_[i])) {
      throw InvalidInput("invalid letter name \"" + letters_[i] + "\"");
    }
    auto [it, fresh] =
        index_.emplace(letters_[i], static_cast<letter_type>(i));
    if (!fresh) {
      throw InvalidInput("duplicate letter \"" + letters_[i] +
                         "\" in alphabet");
    }
  }
}

std::optional<letter_type> Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? std::nullopt : std::optional(it->second);
}

bool Alphabet::contains(Word const& w) const noexcept {
  return std::all_of(w.begin(), w.end(),
                     [this](letter_type l) { return l < letters_.size(); });
}

std::strong_ordering shortlex_cmp(Word const& u, Word const& v) noexcept {
  if (u.size() != v.size()) {
    return u.size() <=> v.size();
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) {
      return u[i] <=> v[i];
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering shortlex_cmp(Word const& u, Word const& v,
                                  Alphabet const& alphabet) {
  if (!alphabet.contains(u) || !alphabet.contains(v)) {
    throw InvalidInput("word has a letter index outside its alphabet");
  }
  return shortlex_cmp(u, v);
}

std::vector<std::size_t> find_occurrences(Word const& pattern, Word const& w) {
  if (pattern.empty()) {
    throw InvalidInput("occurrence search requires a nonempty pattern");
  }
  std::vector<std::size_t> out;
  if (pattern.size() > w.size()) {
    return out;
  }
  for (std::size_t p = 0; p + pattern.size() <= w.size(); ++p) {
    if (std::equal(pattern.begin(), pattern.end(), w.begin() + p)) {
      out.push_back(p);
    }
  }
  return out;
}

bool next_word_shortlex(Word& w, std::size_t k, std::size_t max_len) {
  auto const last = static_cast<letter_type>(k - 1);
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != last) {
      ++w[i];
      std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
      return true;
    }
  }
  if (w.size() >= max_len) {
    return false;
  }
  w.assign(w.size() + 1, 0);
  return true;
}

Word word_at(std::size_t k, std::size_t len, std::uint64_t idx) {
  Word w(len, 0);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = static_cast<letter_type>(idx % k);
    idx /= k;
  }
  return w;
}

std::uint64_t count_words(std::size_t k, std::size_t max_len,
                          std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t stratum = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (stratum > cap / k) {
      throw CapExceeded("word enumeration exceeds cap");
    }
    stratum *= k;
    total += stratum;
    if (total > cap) {
      throw CapExceeded("word enumeration exceeds cap");
    }
  }
  return total;
}

std::vector<Word> all_words(std::size_t k, std::size_t max_len,
                            std::uint64_t cap) {
  std::vector<Word> out;
  out.reserve(count_words(k, max_len, cap));
  Word w{0};
  do {
    out.push_back(w);
  } while (next_word_shortlex(w, k, max_len));
  return out;
}

Word parse_word(std::string_view text, Alphabet const& alphabet) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto idx = alphabet.index_of(token);
    if (!idx) {
      throw InvalidInput("unknown letter \"" + token + "\" in word");
    }
    w.push_back(*idx);
  }
  if (w.empty()) {
    throw InvalidInput("empty word literal");
  }
  return w;
}

std::string format_word(Word const& w, Alphabet const& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += alphabet.name(w[i]);
  }
  return out;
}

Word rename_letters(Word const& w, Alphabet const& from, Alphabet const& to) {
  Word out;
  out.reserve(w.size());
  for (letter_type l : w) {
    auto idx = to.index_of(from.name(l));
    if (!idx) {
      throw InvalidInput("letter \"" + from.name(l) +
                         "\" missing from target alphabet");
    }
    out.push_back(*idx);
  }
  return out;
}

}  // namespace semikit
