#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "goldman/rational.hpp"
#include "goldman/word.hpp"

namespace goldman {

// Standard genus-g presentation: generators a1,b1,...,ag,bg and the single
// relator a1 b1 A1 B1 a2 b2 A2 B2 ... of length 4g. For genus >= 2 the
// presentation carries lookup tables driving Dehn's algorithm:
//   over_half:  subword s of a rotation of r or r^-1, |s| > 2g, mapped to the
//               strictly shorter complement inverse;
//   exact_half: |s| == 2g, mapped to the equal-length complement inverse.
// Distinct rotations of the relator share no subword of length >= 2 (every
// letter occurs once in r), so each table entry is unambiguous.
class Presentation {
 public:
  static Presentation standard(int genus);

  int genus() const { return genus_; }
  const Word& relator() const { return relator_; }

  // nullptr if absent. Keys are encoded letter runs; use encode().
  const std::vector<Letter>* over_half(const std::string& key) const;
  const std::vector<Letter>* exact_half(const std::string& key) const;

  static std::string encode(const Letter* begin, std::size_t n);

 private:
  int genus_ = 1;
  Word relator_;
  std::map<std::string, std::vector<Letter>> over_half_;
  std::map<std::string, std::vector<Letter>> exact_half_;
};

// Repeatedly replace any subword longer than half of a rotated relator (or its
// inverse) by the shorter complement, freely reducing in between; leftmost
// longest match first. Empty result iff the word is trivial in the group.
// Genus 1 is not served by this routine (use exponent arithmetic).
Word dehn_reduce(const Word& w, const Presentation& p);

bool is_identity(const Word& w, const Presentation& p);

// Free homotopy class of a loop: a conjugacy class of the surface group.
// Genus 1 classes are exponent pairs; higher genus classes store the canonical
// cyclic word (lexicographic minimum of the rotation + half-relator closure).
struct LoopClass {
  int genus = 1;
  std::int64_t p = 0, q = 0;  // genus 1 only
  CyclicWord word;            // genus >= 2 only

  bool is_trivial() const { return genus == 1 ? (p == 0 && q == 0) : word.letters.empty(); }
  std::size_t length() const {
    return genus == 1 ? static_cast<std::size_t>(std::llabs(p) + std::llabs(q))
                      : word.letters.size();
  }
  static LoopClass torus(std::int64_t p, std::int64_t q) { return LoopClass{1, p, q, {1, {}}}; }

  friend bool operator==(const LoopClass&, const LoopClass&) = default;
  friend bool operator<(const LoopClass& x, const LoopClass& y) {
    if (x.genus != y.genus) return x.genus < y.genus;
    if (x.genus == 1) {
      const auto lx = x.length(), ly = y.length();
      if (lx != ly) return lx < ly;
      if (x.p != y.p) return x.p < y.p;
      return x.q < y.q;
    }
    return x.word < y.word;
  }
  std::string to_string() const;
};

// Canonical representative of the conjugacy class of w: cyclically Dehn-reduce,
// close under rotations and exact-half replacements, take the lexicographic
// minimum. Genus 1 reads off the exponent pair.
LoopClass conjugacy_canonical(const Word& w, const Presentation& p);

bool are_conjugate(const Word& a, const Word& b, const Presentation& p);

// All distinct classes of canonical length <= max_len, sorted by length then
// lexicographically; includes the trivial class.
std::vector<LoopClass> enumerate_classes(const Presentation& p, int max_len);

// Element of H_1(surface; Q) in coordinates (a1, b1, a2, b2, ...).
struct H1Class {
  int genus = 1;
  std::vector<Rational> coords;  // size 2g

  static H1Class zero(int genus) { return {genus, std::vector<Rational>(2 * genus, Rational(0))}; }
  friend bool operator==(const H1Class&, const H1Class&) = default;
  H1Class& operator+=(const H1Class& o);
  H1Class operator*(const Rational& c) const;
};

H1Class abelianize(const Word& w);
H1Class abelianize(const LoopClass& c);

// Geodesic word representing the class, used by the geometric bracket.
Word class_word(const LoopClass& c);

}  // namespace goldman
