#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace goldman {

// Generator index k in [0, 2g): even k is a_{k/2+1}, odd k is b_{k/2+1}.
// Text tokens: "a3" = index 4 sign +1, "B2" = index 3 sign -1.
struct Letter {
  std::int16_t index = 0;
  std::int16_t sign = 1;  // +1 or -1

  // Total order a1 < A1 < b1 < B1 < a2 < ...: index major, positive first.
  int key() const { return 2 * index + (sign < 0 ? 1 : 0); }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& x, const Letter& y) {
    return x.key() <=> y.key();
  }
  Letter inverse() const { return Letter{index, static_cast<std::int16_t>(-sign)}; }
};

// A word in the genus-g alphabet. Not automatically freely reduced; the
// reduction invariant is re-established by free_reduce and friends.
struct Word {
  int genus = 1;
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

// Throws InputError if any letter index falls outside [0, 2g).
void validate_alphabet(const Word& w);

// Cancel adjacent inverse pairs until none remain. Result is independent of
// cancellation order.
Word free_reduce(Word w);

Word invert(const Word& w);

// Juxtapose then freely reduce; the two words must share a genus.
Word concat(const Word& a, const Word& b);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // u with input = u * core * u^-1 (freely)
};

// Peel matching first/last inverse pairs off the free reduction.
CyclicReduction cyclic_reduce(const Word& w);

// A cyclically reduced word stored in its lexicographically least rotation.
struct CyclicWord {
  int genus = 1;
  std::vector<Letter> letters;  // least rotation
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& x, const CyclicWord& y) {
    if (auto c = x.letters.size() <=> y.letters.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.letters.size(); ++i)
      if (auto c = x.letters[i] <=> y.letters[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }
};

// Least rotation of the cyclic reduction of w. Free-group canonical form of
// the rotation orbit only; surface-group conjugacy lives in surface_group.
CyclicWord cyclic_canonical(const Word& w);

// Least rotation of an already cyclically reduced letter sequence.
std::vector<Letter> least_rotation(std::vector<Letter> letters);

std::string letter_to_string(const Letter& l);
std::string word_to_string(const Word& w);  // space separated; "" if empty

// Parses whitespace-separated tokens a<k>/b<k>/A<k>/B<k> with 1 <= k <= genus.
// Reports the offending token and its position on error.
Word parse_word(const std::string& text, int genus);

}  // namespace goldman
