#include "goldman/surface_group.hpp"

#include <algorithm>
#include <set>

namespace goldman {

namespace {

std::vector<Letter> rotation_of(const std::vector<Letter>& v, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(start + i) % v.size()]);
  return out;
}

}  // namespace

std::string Presentation::encode(const Letter* begin, std::size_t n) {
  std::string key;
  key.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Letter& l = begin[i];
    key.push_back(static_cast<char>(2 * l.index + (l.sign < 0 ? 1 : 0)));
  }
  return key;
}

Presentation Presentation::standard(int genus) {
  if (genus < 1) throw InputError("genus must be >= 1");
  Presentation p;
  p.genus_ = genus;
  p.relator_.genus = genus;
  for (int i = 0; i < genus; ++i) {
    const auto a = static_cast<std::int16_t>(2 * i);
    const auto b = static_cast<std::int16_t>(2 * i + 1);
    p.relator_.letters.push_back({a, 1});
    p.relator_.letters.push_back({b, 1});
    p.relator_.letters.push_back({a, -1});
    p.relator_.letters.push_back({b, -1});
  }
  if (genus == 1) return p;

  const std::size_t n = p.relator_.letters.size();  // 4g
  const std::size_t half = n / 2;                   // 2g
  for (const bool inverse : {false, true}) {
    std::vector<Letter> r = inverse ? invert(p.relator_).letters : p.relator_.letters;
    for (std::size_t start = 0; start < n; ++start) {
      const std::vector<Letter> rot = rotation_of(r, start);
      for (std::size_t len = half; len < n; ++len) {
        // rot = s t with |s| = len; s equals t^-1 in the group.
        std::vector<Letter> s(rot.begin(), rot.begin() + len);
        Word t{p.genus_, std::vector<Letter>(rot.begin() + len, rot.end())};
        std::vector<Letter> repl = invert(t).letters;
        const std::string key = encode(s.data(), s.size());
        if (len == half)
          p.exact_half_.emplace(key, std::move(repl));
        else
          p.over_half_.emplace(key, std::move(repl));
      }
      // The full rotation itself collapses to the empty word.
      p.over_half_.emplace(encode(rot.data(), rot.size()), std::vector<Letter>{});
    }
  }
  return p;
}

const std::vector<Letter>* Presentation::over_half(const std::string& key) const {
  auto it = over_half_.find(key);
  return it == over_half_.end() ? nullptr : &it->second;
}

const std::vector<Letter>* Presentation::exact_half(const std::string& key) const {
  auto it = exact_half_.find(key);
  return it == exact_half_.end() ? nullptr : &it->second;
}

Word dehn_reduce(const Word& w, const Presentation& p) {
  if (p.genus() == 1 || w.genus == 1)
    throw InputError("dehn_reduce serves genus >= 2; use exponent arithmetic on the torus");
  if (w.genus != p.genus()) throw InputError("word genus does not match presentation");
  const std::size_t n_rel = p.relator().letters.size();
  const std::size_t half = n_rel / 2;

  Word cur = free_reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = cur.letters.size();
    if (n <= half) break;
    for (std::size_t start = 0; start < n && !changed; ++start) {
      const std::size_t max_len = std::min(n_rel, n - start);
      for (std::size_t len = max_len; len > half && !changed; --len) {
        const std::string key = Presentation::encode(cur.letters.data() + start, len);
        if (const std::vector<Letter>* repl = p.over_half(key)) {
          std::vector<Letter> next(cur.letters.begin(), cur.letters.begin() + start);
          next.insert(next.end(), repl->begin(), repl->end());
          next.insert(next.end(), cur.letters.begin() + start + len, cur.letters.end());
          cur.letters = std::move(next);
          cur = free_reduce(std::move(cur));
          changed = true;
        }
      }
    }
  }
  return cur;
}

bool is_identity(const Word& w, const Presentation& p) {
  if (p.genus() == 1) {
    const H1Class h = abelianize(w);
    return h.coords[0] == 0 && h.coords[1] == 0;
  }
  return dehn_reduce(w, p).empty();
}

namespace {

// One pass of cyclic Dehn reduction: returns true if a replacement happened.
bool cyclic_dehn_step(std::vector<Letter>& v, const Presentation& p) {
  const std::size_t n_rel = p.relator().letters.size();
  const std::size_t half = n_rel / 2;
  const std::size_t n = v.size();
  if (n <= half) return false;
  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t max_len = std::min(n_rel, n);
    for (std::size_t len = max_len; len > half; --len) {
      std::vector<Letter> s;
      s.reserve(len);
      for (std::size_t i = 0; i < len; ++i) s.push_back(v[(start + i) % n]);
      if (const std::vector<Letter>* repl = p.over_half(Presentation::encode(s.data(), len))) {
        std::vector<Letter> next(repl->begin(), repl->end());
        for (std::size_t i = len; i < n; ++i) next.push_back(v[(start + i) % n]);
        v = std::move(next);
        return true;
      }
    }
  }
  return false;
}

std::vector<Letter> cyclic_dehn_reduce(Word w, const Presentation& p) {
  w = cyclic_reduce(w).core;
  while (true) {
    if (!cyclic_dehn_step(w.letters, p)) break;
    w = cyclic_reduce(free_reduce(std::move(w))).core;
  }
  return w.letters;
}

}  // namespace

LoopClass conjugacy_canonical(const Word& w, const Presentation& p) {
  if (w.genus != p.genus()) throw InputError("word genus does not match presentation");
  if (p.genus() == 1) {
    const H1Class h = abelianize(w);
    return LoopClass::torus(numerator(h.coords[0]).convert_to<std::int64_t>(),
                            numerator(h.coords[1]).convert_to<std::int64_t>());
  }

  std::vector<Letter> seed = cyclic_dehn_reduce(w, p);
  const std::size_t half = p.relator().letters.size() / 2;

  // Closure under rotations and exact-half swaps. A swap cannot shorten the
  // word when the start is cyclically Dehn reduced; if numerics of that claim
  // ever fail we restart from the shorter word.
restart:
  std::set<std::vector<Letter>> seen;
  std::vector<std::vector<Letter>> queue;
  seed = least_rotation(std::move(seed));
  seen.insert(seed);
  queue.push_back(seed);
  while (!queue.empty()) {
    std::vector<Letter> cur = std::move(queue.back());
    queue.pop_back();
    const std::size_t n = cur.size();
    if (n < half) continue;
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<Letter> s;
      s.reserve(half);
      for (std::size_t i = 0; i < half; ++i) s.push_back(cur[(start + i) % n]);
      const std::vector<Letter>* repl = p.exact_half(Presentation::encode(s.data(), half));
      if (!repl) continue;
      Word next{p.genus(), std::vector<Letter>(repl->begin(), repl->end())};
      for (std::size_t i = half; i < n; ++i) next.letters.push_back(cur[(start + i) % n]);
      next = cyclic_reduce(free_reduce(std::move(next))).core;
      if (next.letters.size() < n) {
        seed = cyclic_dehn_reduce(std::move(next), p);
        goto restart;
      }
      std::vector<Letter> rot = least_rotation(std::move(next.letters));
      if (seen.insert(rot).second) queue.push_back(std::move(rot));
    }
  }

  LoopClass c;
  c.genus = p.genus();
  c.word = CyclicWord{p.genus(), *seen.begin()};
  return c;
}

bool are_conjugate(const Word& a, const Word& b, const Presentation& p) {
  return conjugacy_canonical(a, p) == conjugacy_canonical(b, p);
}

std::vector<LoopClass> enumerate_classes(const Presentation& p, int max_len) {
  if (max_len < 0) throw InputError("max_len must be >= 0");
  std::vector<LoopClass> out;
  if (p.genus() == 1) {
    for (int len = 0; len <= max_len; ++len) {
      std::vector<LoopClass> level;
      for (int pp = -len; pp <= len; ++pp) {
        const int rest = len - std::abs(pp);
        for (const int qq : rest == 0 ? std::vector<int>{0} : std::vector<int>{-rest, rest})
          level.push_back(LoopClass::torus(pp, qq));
      }
      std::sort(level.begin(), level.end());
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  std::set<LoopClass> classes;
  classes.insert(conjugacy_canonical(Word{p.genus(), {}}, p));
  const int n_letters = 4 * p.genus();
  std::vector<Letter> alphabet;
  for (int i = 0; i < 2 * p.genus(); ++i)
    for (const int s : {1, -1})
      alphabet.push_back({static_cast<std::int16_t>(i), static_cast<std::int16_t>(s)});

  Word stack{p.genus(), {}};
  auto dfs = [&](auto&& self, int remaining) -> void {
    if (!stack.letters.empty() && stack.letters.front() != stack.letters.back().inverse())
      classes.insert(conjugacy_canonical(stack, p));
    if (remaining == 0) return;
    for (int i = 0; i < n_letters; ++i) {
      const Letter& l = alphabet[i];
      if (!stack.letters.empty() && stack.letters.back() == l.inverse()) continue;
      stack.letters.push_back(l);
      self(self, remaining - 1);
      stack.letters.pop_back();
    }
  };
  dfs(dfs, max_len);

  out.assign(classes.begin(), classes.end());
  std::sort(out.begin(), out.end());
  return out;
}

H1Class& H1Class::operator+=(const H1Class& o) {
  if (genus != o.genus) throw InputError("H1 genus mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

H1Class H1Class::operator*(const Rational& c) const {
  H1Class r = *this;
  for (auto& x : r.coords) x *= c;
  return r;
}

H1Class abelianize(const Word& w) {
  validate_alphabet(w);
  H1Class h = H1Class::zero(w.genus);
  for (const Letter& l : w.letters) h.coords[l.index] += l.sign;
  return h;
}

H1Class abelianize(const LoopClass& c) {
  if (c.genus == 1) {
    H1Class h = H1Class::zero(1);
    h.coords[0] = c.p;
    h.coords[1] = c.q;
    return h;
  }
  return abelianize(Word{c.genus, c.word.letters});
}

Word class_word(const LoopClass& c) {
  if (c.genus == 1) {
    Word w{1, {}};
    for (std::int64_t i = 0; i < std::llabs(c.p); ++i)
      w.letters.push_back({0, static_cast<std::int16_t>(c.p > 0 ? 1 : -1)});
    for (std::int64_t i = 0; i < std::llabs(c.q); ++i)
      w.letters.push_back({1, static_cast<std::int16_t>(c.q > 0 ? 1 : -1)});
    return w;
  }
  return Word{c.genus, c.word.letters};
}

std::string LoopClass::to_string() const {
  if (genus == 1) return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  return word_to_string(Word{genus, word.letters});
}

}  // namespace goldman
