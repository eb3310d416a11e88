#include "semikit/presentations.hpp"

#include <map>

#include "semikit/exception.hpp"

namespace semikit {

Presentation::Presentation(Alphabet alphabet,
                           std::vector<std::pair<Word, Word>> relations)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    auto const& [u, v] = relations_[i];
    if (u.empty() || v.empty()) {
      throw InvalidInput("relation " + std::to_string(i + 1) +
                         " has an empty side");
    }
    if (!alphabet_.contains(u) || !alphabet_.contains(v)) {
      throw InvalidInput("relation " + std::to_string(i + 1) +
                         " uses a letter outside the alphabet");
    }
  }
}

GeneratorMap::GeneratorMap(Alphabet const& alphabet, std::vector<Word> images)
    : images_(std::move(images)) {
  if (images_.size() != alphabet.size()) {
    throw InvalidInput("generator map must assign exactly one image per letter");
  }
  for (auto const& img : images_) {
    if (img.empty()) {
      throw InvalidInput("generator images must be nonempty");
    }
    if (!alphabet.contains(img)) {
      throw InvalidInput("generator image uses a letter outside the alphabet");
    }
  }
}

GeneratorMap identity_map(Alphabet const& alphabet) {
  std::vector<Word> images;
  images.reserve(alphabet.size());
  for (letter_type g = 0; g < alphabet.size(); ++g) {
    images.push_back(Word{g});
  }
  return GeneratorMap(alphabet, std::move(images));
}

Word apply_map(GeneratorMap const& m, Word const& w) {
  Word out;
  for (letter_type l : w) {
    Word const& img = m.image(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

GeneratorMap compose(Alphabet const& alphabet, GeneratorMap const& first,
                     GeneratorMap const& second) {
  std::vector<Word> images;
  images.reserve(first.arity());
  for (letter_type g = 0; g < first.arity(); ++g) {
    images.push_back(apply_map(second, first.image(g)));
  }
  return GeneratorMap(alphabet, std::move(images));
}

EndoCheck check_endomorphism(Presentation const& p, RewriteSystem const& rs,
                             GeneratorMap const& m, std::size_t step_limit) {
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    auto const& [u, v] = p.relations()[i];
    auto nf_u = normal_form(apply_map(m, u), rs, step_limit);
    auto nf_v = normal_form(apply_map(m, v), rs, step_limit);
    if (!nf_u.ok() || !nf_v.ok()) {
      return EndoCheck{EndoCheck::Status::limit, i};
    }
    if (*nf_u.word != *nf_v.word) {
      return EndoCheck{EndoCheck::Status::fails, i};
    }
  }
  return EndoCheck{EndoCheck::Status::lifts, 0};
}

SurjectivityVerdict surjectivity_search(GeneratorMap const& m,
                                        RewriteSystem const& rs,
                                        std::size_t max_len,
                                        std::size_t step_limit) {
  if (max_len < 1) {
    throw InvalidInput("search bound must be at least 1");
  }
  std::size_t const k = rs.alphabet().size();

  std::vector<Word> targets;
  for (letter_type g = 0; g < k; ++g) {
    auto nf = normal_form(Word{g}, rs, step_limit);
    if (!nf.ok()) {
      throw CapExceeded("step limit exhausted while normalizing a generator");
    }
    targets.push_back(std::move(*nf.word));
  }

  std::vector<std::optional<Word>> witnesses(k);
  std::size_t found = 0;
  Word w{0};
  do {
    auto nf = normal_form(apply_map(m, w), rs, step_limit);
    if (!nf.ok()) {
      throw CapExceeded("step limit exhausted during surjectivity search");
    }
    for (letter_type g = 0; g < k; ++g) {
      if (!witnesses[g] && *nf.word == targets[g]) {
        witnesses[g] = w;
        ++found;
      }
    }
    if (found == k) {
      break;
    }
  } while (next_word_shortlex(w, k, max_len));

  SurjectivityVerdict verdict;
  verdict.bound_used = max_len;
  if (found == k) {
    verdict.status = SurjectivityVerdict::Status::proven;
    for (auto& wit : witnesses) {
      verdict.witnesses.push_back(std::move(*wit));
    }
  } else {
    verdict.status = SurjectivityVerdict::Status::unknown;
  }
  return verdict;
}

InjectivityVerdict injectivity_search(GeneratorMap const& m,
                                      RewriteSystem const& rs,
                                      std::size_t max_len,
                                      std::size_t step_limit) {
  if (max_len < 1) {
    throw InvalidInput("search bound must be at least 1");
  }
  std::size_t const k = rs.alphabet().size();

  InjectivityVerdict verdict;
  verdict.bound_used = max_len;
  verdict.status = InjectivityVerdict::Status::unknown;

  std::map<Word, Word> first_with_image;
  Word w{0};
  do {
    if (!is_irreducible(w, rs)) {
      continue;
    }
    auto nf = normal_form(apply_map(m, w), rs, step_limit);
    if (!nf.ok()) {
      throw CapExceeded("step limit exhausted during injectivity search");
    }
    auto [it, fresh] = first_with_image.emplace(std::move(*nf.word), w);
    if (!fresh) {
      verdict.status = InjectivityVerdict::Status::refuted;
      verdict.first = it->second;
      verdict.second = w;
      return verdict;
    }
  } while (next_word_shortlex(w, k, max_len));

  return verdict;
}

bool word_equal(Word const& u, Word const& v, RewriteSystem const& rs,
                std::size_t step_limit) {
  auto nf_u = normal_form(u, rs, step_limit);
  auto nf_v = normal_form(v, rs, step_limit);
  if (!nf_u.ok() || !nf_v.ok()) {
    throw CapExceeded("step limit exhausted while deciding word equality");
  }
  return *nf_u.word == *nf_v.word;
}

}  // namespace semikit
