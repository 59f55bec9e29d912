#include "goldman/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "goldman/rational.hpp"

namespace goldman {

void validate_alphabet(const Word& w) {
  if (w.genus < 1) throw InputError("genus must be >= 1");
  for (const Letter& l : w.letters) {
    if (l.index < 0 || l.index >= 2 * w.genus)
      throw InputError("letter index " + std::to_string(l.index) +
                       " outside genus-" + std::to_string(w.genus) + " alphabet");
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +-1");
  }
}

Word free_reduce(Word w) {
  validate_alphabet(w);
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

Word invert(const Word& w) {
  Word r{w.genus, {}};
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(it->inverse());
  return r;
}

Word concat(const Word& a, const Word& b) {
  if (a.genus != b.genus)
    throw InputError("cannot concatenate words of genus " + std::to_string(a.genus) +
                     " and " + std::to_string(b.genus));
  Word r{a.genus, a.letters};
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(std::move(r));
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word core = free_reduce(w);
  Word conj{w.genus, {}};
  while (core.letters.size() >= 2 && core.letters.front() == core.letters.back().inverse()) {
    conj.letters.push_back(core.letters.front());
    core.letters.erase(core.letters.begin());
    core.letters.pop_back();
  }
  return {std::move(core), std::move(conj)};
}

std::vector<Letter> least_rotation(std::vector<Letter> letters) {
  const std::size_t n = letters.size();
  if (n < 2) return letters;
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter& a = letters[(cand + i) % n];
      const Letter& b = letters[(best + i) % n];
      if (a < b) { best = cand; break; }
      if (b < a) break;
    }
  }
  std::rotate(letters.begin(), letters.begin() + best, letters.end());
  return letters;
}

CyclicWord cyclic_canonical(const Word& w) {
  CyclicReduction cr = cyclic_reduce(w);
  return CyclicWord{w.genus, least_rotation(std::move(cr.core.letters))};
}

std::string letter_to_string(const Letter& l) {
  const int k = l.index / 2 + 1;
  const bool is_a = l.index % 2 == 0;
  char c = is_a ? 'a' : 'b';
  if (l.sign < 0) c = static_cast<char>(std::toupper(c));
  return c + std::to_string(k);
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += letter_to_string(w.letters[i]);
  }
  return out;
}

Word parse_word(const std::string& text, int genus) {
  if (genus < 1) throw InputError("genus must be >= 1");
  Word w{genus, {}};
  std::istringstream in(text);
  std::string tok;
  int pos = 0;
  while (in >> tok) {
    ++pos;
    const auto fail = [&](const std::string& why) {
      throw InputError("bad token '" + tok + "' at position " + std::to_string(pos) +
                       ": " + why);
    };
    if (tok.size() < 2) fail("expected a<k>, b<k>, A<k> or B<k>");
    const char c = tok[0];
    const char lower = static_cast<char>(std::tolower(c));
    if (lower != 'a' && lower != 'b') fail("unknown generator letter");
    int k = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) fail("bad subscript");
      k = 10 * k + (tok[i] - '0');
    }
    if (k < 1 || k > genus) fail("subscript outside 1.." + std::to_string(genus));
    Letter l;
    l.index = static_cast<std::int16_t>(2 * (k - 1) + (lower == 'b' ? 1 : 0));
    l.sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    w.letters.push_back(l);
  }
  return w;
}

}  // namespace goldman
