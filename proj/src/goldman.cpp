#include "goldman/goldman.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace goldman {

void FormalSum::add(const LoopClass& c, const Rational& coeff) {
  if (coeff == 0) return;
  if (c.genus != genus) throw InputError("formal sum genus mismatch");
  auto it = terms.find(c);
  if (it == terms.end()) {
    terms.emplace(c, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  if (o.genus != genus) throw InputError("formal sum genus mismatch");
  for (const auto& [c, v] : o.terms) add(c, v);
  return *this;
}

FormalSum FormalSum::operator*(const Rational& c) const {
  FormalSum out{genus, {}};
  if (c == 0) return out;
  for (const auto& [k, v] : terms) out.terms.emplace(k, v * c);
  return out;
}

FormalSum FormalSum::operator-() const { return *this * Rational(-1); }

Rational FormalSum::coeff(const LoopClass& c) const {
  const auto it = terms.find(c);
  return it == terms.end() ? Rational(0) : it->second;
}

Rational FormalSum::coefficient_total() const {
  Rational t = 0;
  for (const auto& [c, v] : terms) t += v;
  return t;
}

std::string FormalSum::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, v] : terms) {
    if (!out.empty()) out += " + ";
    out += "(" + rational_to_string(v) + ")[" + c.to_string() + "]";
  }
  return out;
}

FormalSum torus_bracket(const LoopClass& x, const LoopClass& y) {
  if (x.genus != 1 || y.genus != 1) throw InputError("torus_bracket requires genus 1");
  FormalSum out = FormalSum::zero(1);
  const Rational d = Rational(x.p) * y.q - Rational(x.q) * y.p;
  if (d != 0) out.add(LoopClass::torus(x.p + y.p, x.q + y.q), d);
  return out;
}

FormalSum torus_bracket_oracle(const LoopClass& x, const LoopClass& y) {
  if (x.genus != 1 || y.genus != 1) throw InputError("torus_bracket_oracle requires genus 1");
  FormalSum out = FormalSum::zero(1);
  if (x.is_trivial() || y.is_trivial()) return out;
  const std::int64_t p = x.p, q = x.q, r = y.p, s = y.q;
  // Line 1 through (1/7, 1/11) with direction (p,q), line 2 through the
  // origin with direction (r,s), both on R^2/Z^2. Crossings solve
  // t(p,q) - u(r,s) = delta + (m,n) with t,u in [0,1). For moderate inputs
  // the offsets clear through a factor of 77, leaving pure integer window
  // tests; the rational path below covers inputs that could overflow.
  const std::int64_t big = 1'000'000;
  if (std::llabs(p) <= big && std::llabs(q) <= big && std::llabs(r) <= big &&
      std::llabs(s) <= big) {
    const std::int64_t det = p * s - q * r;
    if (det == 0) return out;  // parallel lines, no transversal crossings
    const std::int64_t jj = 77 * det;
    const std::int64_t mw = std::llabs(p) + std::llabs(r) + 1;
    const std::int64_t nw = std::llabs(q) + std::llabs(s) + 1;
    std::int64_t crossings = 0;
    for (std::int64_t m = -mw; m <= mw; ++m)
      for (std::int64_t n = -nw; n <= nw; ++n) {
        const std::int64_t rx = 77 * m - 11, ry = 77 * n - 7;  // 77(dx+m), 77(dy+n)
        const std::int64_t nt = s * rx - r * ry;               // t = nt / jj
        const std::int64_t nu = p * ry - q * rx;               // u = nu / jj
        const bool t01 = jj > 0 ? nt >= 0 && nt < jj : nt <= 0 && nt > jj;
        const bool u01 = jj > 0 ? nu >= 0 && nu < jj : nu <= 0 && nu > jj;
        if (t01 && u01) ++crossings;
      }
    if (crossings) out.add(LoopClass::torus(p + r, q + s), det > 0 ? crossings : -crossings);
    return out;
  }
  const Rational det = Rational(p) * s - Rational(q) * r;
  if (det == 0) return out;
  const Rational sign = det > 0 ? 1 : -1;
  const Rational dx(-1, 7), dy(-1, 11);
  const std::int64_t mw = std::llabs(p) + std::llabs(r) + 1;
  const std::int64_t nw = std::llabs(q) + std::llabs(s) + 1;
  const LoopClass product = LoopClass::torus(p + r, q + s);
  for (std::int64_t m = -mw; m <= mw; ++m)
    for (std::int64_t n = -nw; n <= nw; ++n) {
      const Rational rx = dx + m, ry = dy + n;
      const Rational t = (Rational(s) * rx - Rational(r) * ry) / det;
      const Rational u = (Rational(p) * ry - Rational(q) * rx) / det;
      if (t >= 0 && t < 1 && u >= 0 && u < 1) out.add(product, sign);
    }
  return out;
}

Rational intersection_pairing(const H1Class& x, const H1Class& y) {
  if (x.genus != y.genus) throw InputError("pairing genus mismatch");
  Rational total = 0;
  for (int i = 0; i < x.genus; ++i)
    total += x.coords[2 * i] * y.coords[2 * i + 1] - x.coords[2 * i + 1] * y.coords[2 * i];
  return total;
}

FormalSum loop_h1_pairing(const H1Class& alpha, const FormalSum& gamma) {
  if (alpha.genus != gamma.genus) throw InputError("pairing genus mismatch");
  FormalSum out = FormalSum::zero(gamma.genus);
  for (const auto& [c, v] : gamma.terms)
    out.add(c, v * intersection_pairing(alpha, abelianize(c)));
  return out;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Within a factor of 2 of boundary_chordal; cheap enough for the inner loop.
double gap_estimate(double s, double t) {
  const bool si = std::isinf(s), ti = std::isinf(t);
  if (si && ti) return 0.0;
  if (si) return 1.0 / std::max(1.0, std::abs(t));
  if (ti) return 1.0 / std::max(1.0, std::abs(s));
  return std::abs(s - t) / (std::max(1.0, std::abs(s)) * std::max(1.0, std::abs(t)));
}

// Strictly inside the ccw arc from u to v. Ccw order is increasing boundary
// coordinate, wrapping at infinity; callers exclude coincidences first.
bool in_ccw_arc(double u, double v, double p) {
  if (u < v) return p > u && p < v;
  return p > u || p < v;
}

// +1 / -1 crossing sign, 0 disjoint or nested, 2 marginal (take the robust
// path). Must agree with axes_cross / crossing_sign away from the margin.
int crossing_fast(const Geodesic& gx, double r2, double a2, double tol) {
  const double m =
      std::min(std::min(gap_estimate(gx.repelling, r2), gap_estimate(gx.repelling, a2)),
               std::min(gap_estimate(gx.attracting, r2), gap_estimate(gx.attracting, a2)));
  if (m < 200.0 * tol) return 2;
  const bool r_in = in_ccw_arc(gx.repelling, gx.attracting, r2);
  const bool a_in = in_ccw_arc(gx.repelling, gx.attracting, a2);
  if (r_in == a_in) return 0;
  return a_in ? 1 : -1;
}

Word word_power(const Word& w, std::int64_t k) {
  Word out{w.genus, {}};
  const Word base = k < 0 ? invert(w) : w;
  for (std::int64_t i = 0; i < std::llabs(k); ++i) out = concat(out, base);
  return out;
}

struct CrossingBucket {
  double rawpos;  // position along the base axis at first discovery
  double posmod;  // rawpos modulo the base translation length
  Word h;         // discovering conjugator
  CrossingRecord record;
};

// Largest n with w equal to the n-th power of a shorter cyclic word.
int cyclic_power(const std::vector<Letter>& w) {
  const int len = static_cast<int>(w.size());
  for (int d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (int i = 0; i < len && periodic; ++i) periodic = w[i] == w[(i + d) % len];
    if (periodic) return len / d;
  }
  return 1;
}

struct Enumerator {
  const Presentation& pres;
  const Representation& rep;
  const BracketConfig& cfg;
  Word wx, wy, wxi;
  Geodesic gx, gy;
  double lx = 0;
  int y_mult = 1;  // wy = v^n for primitive v: n strands of y per crossing point
  std::vector<MobiusMap> letter_mats;  // indexed by Letter::key()
  FormalSum sum;
  std::vector<CrossingBucket> buckets;
  std::vector<Letter> path;
  std::vector<MobiusMap> prefix;  // prefix[k] = image of path[0..k)

  Enumerator(const Presentation& p, const Representation& r, const BracketConfig& c,
             const Word& wx_, const Word& wy_)
      : pres(p), rep(r), cfg(c), wx(wx_), wy(wy_), wxi(invert(wx_)),
        sum(FormalSum::zero(p.genus())) {
    const MobiusMap mx = rep.evaluate(wx);
    const MobiusMap my = rep.evaluate(wy);
    gx = axis(mx, cfg.tolerance);
    gy = axis(my, cfg.tolerance);
    lx = gx.translation_length;
    // Conjugates of wy by g and by g v^j coincide as group elements, so the
    // enumeration sees one lift per geometric point; the y loop still passes
    // through it n times. The x-side multiplicity needs no factor: it shows
    // up as n distinct crossing positions modulo the full axis period.
    y_mult = cyclic_power(wy.letters);
    for (int i = 0; i < 2 * pres.genus(); ++i) {
      letter_mats.push_back(rep.gens[i]);
      letter_mats.push_back(rep.gens[i].inverse());
    }
    prefix.push_back(MobiusMap{});
  }

  // h wy h^-1 == wx^k h0 wy h0^-1 wx^-k in the group?
  bool same_orbit(const Word& h, const Word& h0, std::int64_t k) const {
    const Word lhs = concat(concat(h, wy), invert(h));
    Word rhs = concat(word_power(wx, k), concat(concat(h0, wy), invert(h0)));
    rhs = concat(rhs, word_power(wx, -k));
    return is_identity(concat(lhs, invert(rhs)), pres);
  }

  bool ends_with(const Word& suffix) const {
    const std::size_t n = suffix.size();
    if (n == 0 || path.size() < n) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (path[path.size() - n + i] != suffix.letters[i]) return false;
    return true;
  }

  void handle_leaf() {
    // h ending in wy^+-1 yields the identical conjugate as its shortening.
    if (ends_with(wy) || ends_with(invert(wy))) return;
    const MobiusMap& eh = prefix.back();
    const double r2 = eh.apply_boundary(gy.repelling);
    const double a2 = eh.apply_boundary(gy.attracting);
    int sign = crossing_fast(gx, r2, a2, cfg.tolerance);
    if (sign == 0) return;
    const Geodesic gz{r2, a2, gy.translation_length};
    if (sign == 2) {
      const CrossingTest ct = axes_cross(gx, gz, cfg.tolerance);
      if (ct.coincident) return;  // parallel push-offs, no transversal point
      if (ct.degenerate)
        throw DegenerateGeometryError("tangent axes in bracket enumeration");
      if (!ct.crosses) return;
      sign = crossing_sign(gx, gz, cfg.tolerance);
    }
    const double pos = axis_position(gx, gz, cfg.tolerance);
    double posmod = pos - lx * std::floor(pos / lx);
    if (posmod >= lx) posmod -= lx;
    const Word h{pres.genus(), path};
    for (const CrossingBucket& b : buckets) {
      const double gap = std::abs(posmod - b.posmod);
      if (std::min(gap, lx - gap) >= cfg.dedup_tolerance) continue;
      const auto k = static_cast<std::int64_t>(std::llround((pos - b.rawpos) / lx));
      if (same_orbit(h, b.h, k)) return;  // crossing already counted
    }
    const Word loop = concat(wx, concat(concat(h, wy), invert(h)));
    const LoopClass cls = conjugacy_canonical(loop, pres);
    const Rational coeff = Rational(sign) * y_mult;
    buckets.push_back({pos, posmod, h, CrossingRecord{gz, sign, coeff, cls, posmod}});
    sum.add(cls, coeff);
  }

  // Enumerate reduced conjugators of exactly the given length. Subtrees whose
  // spelled prefix completes wx^+-1 are pruned: such h give <wx>-translates of
  // crossings already found through the unprefixed conjugator.
  void round(int len) { descend(len, 0, 0); }

  void descend(int remaining, int match_pos, int match_neg) {
    if (remaining == 0) {
      handle_leaf();
      return;
    }
    const int nl = static_cast<int>(letter_mats.size());
    for (int key = 0; key < nl; ++key) {
      const Letter l{static_cast<std::int16_t>(key / 2),
                     static_cast<std::int16_t>(key % 2 ? -1 : 1)};
      if (!path.empty() && path.back() == l.inverse()) continue;
      int mp = -1, mn = -1;
      if (match_pos >= 0 && l == wx.letters[match_pos]) {
        if (match_pos + 1 == static_cast<int>(wx.size())) continue;  // prune wx prefix
        mp = match_pos + 1;
      }
      if (match_neg >= 0 && l == wxi.letters[match_neg]) {
        if (match_neg + 1 == static_cast<int>(wxi.size())) continue;  // prune wx^-1 prefix
        mn = match_neg + 1;
      }
      path.push_back(l);
      prefix.push_back(prefix.back() * letter_mats[key]);
      descend(remaining - 1, mp, mn);
      prefix.pop_back();
      path.pop_back();
    }
  }
};

BracketResult run_bracket(const LoopClass& x, const LoopClass& y, const Representation& rep,
                          const BracketConfig& cfg, bool early_stop) {
  if (x.genus != y.genus || x.genus != rep.genus) throw InputError("bracket genus mismatch");
  if (x.genus < 2) throw InputError("geometric bracket requires genus >= 2");
  if (cfg.max_conjugator_length < 1 || cfg.stabilization_step < 1)
    throw InputError("invalid bracket configuration");
  const Presentation pres = Presentation::standard(x.genus);

  BracketResult out;
  if (x.is_trivial() || y.is_trivial() || x == y) {
    // Trivial classes have point representatives; equal classes are covered
    // by antisymmetry. Both give the zero bracket without enumeration.
    out.value = FormalSum::zero(x.genus);
    out.by_depth.assign(1, out.value);
    out.stabilized_at = 0;
    return out;
  }

  Enumerator en(pres, rep, cfg, class_word(x), class_word(y));
  const int step = cfg.stabilization_step;
  for (int n = 0; n <= cfg.max_conjugator_length; ++n) {
    en.round(n);
    out.by_depth.push_back(en.sum);
    if (out.stabilized_at < 0 && n >= 2 * step && out.by_depth[n] == out.by_depth[n - step]) {
      out.stabilized_at = n;
      if (early_stop) break;
    }
  }
  out.value = (early_stop && out.stabilized_at >= 0) ? out.by_depth[out.stabilized_at]
                                                     : out.by_depth.back();
  out.crossings.reserve(en.buckets.size());
  for (const CrossingBucket& b : en.buckets) out.crossings.push_back(b.record);
  return out;
}

}  // namespace

FormalSum goldman_bracket(const LoopClass& x, const LoopClass& y, const Representation& rep,
                          const BracketConfig& cfg) {
  BracketResult r = run_bracket(x, y, rep, cfg, true);
  if (r.stabilized_at < 0) {
    const FormalSum& deep = r.by_depth.back();
    const std::size_t back = std::min(r.by_depth.size() - 1,
                                      static_cast<std::size_t>(cfg.stabilization_step));
    const FormalSum& shallow = r.by_depth[r.by_depth.size() - 1 - back];
    throw BracketNotStabilized(
        "bracket did not stabilize by depth " + std::to_string(cfg.max_conjugator_length) +
            ": sum at depth " +
            std::to_string(cfg.max_conjugator_length - cfg.stabilization_step) + " = " +
            shallow.to_string() + ", sum at depth " +
            std::to_string(cfg.max_conjugator_length) + " = " + deep.to_string(),
        shallow, deep);
  }
  return r.value;
}

BracketResult goldman_bracket_full(const LoopClass& x, const LoopClass& y,
                                   const Representation& rep, const BracketConfig& cfg) {
  return run_bracket(x, y, rep, cfg, false);
}

}  // namespace goldman
