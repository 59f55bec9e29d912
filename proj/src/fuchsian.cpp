#include "goldman/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "goldman/rational.hpp"

namespace goldman {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

double circle_angle(double t) { return 2.0 * std::atan(t); }  // atan(inf) = pi/2

// Counterclockwise angular advance from boundary point u to v, in [0, 2pi).
double ccw_delta(double u, double v) {
  double d = std::fmod(circle_angle(v) - circle_angle(u), 2.0 * kPi);
  if (d < 0) d += 2.0 * kPi;
  return d;
}

}  // namespace

MobiusMap MobiusMap::normalized() const {
  const double dt = det();
  // For products of det-1 matrices the computed det is dominated by the
  // cancellation noise of a*d - b*c once entries are large; rescaling by it
  // would wreck otherwise accurate entries. Treat such dets as exactly 1.
  const double noise = 64.0 * 2.3e-16 * (std::abs(a * d) + std::abs(b * c));
  MobiusMap m{a, b, c, d};
  if (std::abs(dt - 1.0) > std::max(noise, 1e-9)) {
    if (!(dt > 0))
      throw DegenerateGeometryError("Moebius map with non-positive determinant");
    const double s = std::sqrt(dt);
    m = {a / s, b / s, c / s, d / s};
  }
  double sign = 1.0;
  if (std::abs(m.a + m.d) > 1e-12) {
    sign = (m.a + m.d) < 0 ? -1.0 : 1.0;
  } else if (std::abs(m.c) > 1e-12) {
    sign = m.c < 0 ? -1.0 : 1.0;
  } else if (std::abs(m.b) > 1e-12) {
    sign = m.b < 0 ? -1.0 : 1.0;
  }
  return {sign * m.a, sign * m.b, sign * m.c, sign * m.d};
}

double MobiusMap::apply_boundary(double t) const {
  if (std::isinf(t)) return c == 0 ? kInf : a / c;
  const double den = c * t + d;
  if (den == 0) return kInf;
  return (a * t + b) / den;
}

Geodesic axis(const MobiusMap& m_in, double tol) {
  const MobiusMap m = m_in.normalized();
  const double tr = m.trace();
  if (!(std::abs(tr) > 2.0 + tol))
    throw DegenerateGeometryError("axis of a non-hyperbolic map");
  const double disc = std::sqrt(tr * tr - 4.0);
  const double diff = m.a - m.d;
  double t1, t2;  // the two fixed points
  bool t1_attracting;
  if (std::abs(m.c) <= 1e-12 * (std::abs(diff) + disc)) {
    // Fixed points infinity and b/(d-a); infinity attracts iff |a| > |d|.
    t1 = kInf;
    t2 = m.b / (m.d - m.a);
    t1_attracting = std::abs(m.a) > std::abs(m.d);
  } else {
    // Avoid cancellation: big root first, mate via the product -b/c.
    const double numer = diff >= 0 ? diff + disc : diff - disc;
    t1 = numer / (2.0 * m.c);
    t2 = (-m.b / m.c) / t1;
    t1_attracting = std::abs(m.c * t1 + m.d) > 1.0;
  }
  Geodesic g;
  g.translation_length = 2.0 * std::acosh(std::abs(tr) / 2.0);
  g.attracting = t1_attracting ? t1 : t2;
  g.repelling = t1_attracting ? t2 : t1;
  return g;
}

double boundary_chordal(double s, double t) {
  const bool si = std::isinf(s), ti = std::isinf(t);
  if (si && ti) return 0.0;
  if (si) return 1.0 / std::hypot(1.0, t);
  if (ti) return 1.0 / std::hypot(1.0, s);
  return std::abs(s - t) / (std::hypot(1.0, s) * std::hypot(1.0, t));
}

namespace {

struct AxesAnalysis {
  CrossingTest test;
  int sign = 0;
};

// Fixed isometries used to redo marginal predicates in a moved frame.
const MobiusMap kRetryMoves[] = {{2.0, 1.0, 1.0, 1.0}, {1.0, -1.0, 1.0, 0.0}};

AxesAnalysis analyze_axes(const Geodesic& g1, const Geodesic& g2, double tol) {
  double r1 = g1.repelling, a1 = g1.attracting;
  double r2 = g2.repelling, a2 = g2.attracting;

  // Coincidence and tangency are decided at tolerance tol on endpoint gaps.
  const auto close = [&](double x, double y) { return boundary_chordal(x, y) < tol; };
  AxesAnalysis out;
  if ((close(r1, r2) && close(a1, a2)) || (close(r1, a2) && close(a1, r2))) {
    out.test = {false, true, true};
    return out;
  }
  if (close(r1, r2) || close(r1, a2) || close(a1, r2) || close(a1, a2)) {
    out.test = {false, true, false};
    return out;
  }

  // Margin of the cyclic-order decision: gap between {r2,a2} and {r1,a1}.
  const auto margin = [](double rr1, double aa1, double rr2, double aa2) {
    return std::min(std::min(boundary_chordal(rr1, rr2), boundary_chordal(rr1, aa2)),
                    std::min(boundary_chordal(aa1, rr2), boundary_chordal(aa1, aa2)));
  };
  std::size_t retry = 0;
  while (margin(r1, a1, r2, a2) < 10.0 * tol) {
    if (retry >= std::size(kRetryMoves))
      throw DegenerateGeometryError("axis endpoints remain marginal after moving the frame");
    const MobiusMap& mv = kRetryMoves[retry++];
    r1 = mv.apply_boundary(r1);
    a1 = mv.apply_boundary(a1);
    r2 = mv.apply_boundary(r2);
    a2 = mv.apply_boundary(a2);
  }

  const double span = ccw_delta(r1, a1);
  const bool r2_in = ccw_delta(r1, r2) < span;
  const bool a2_in = ccw_delta(r1, a2) < span;
  out.test.crosses = r2_in != a2_in;
  if (out.test.crosses) out.sign = a2_in ? 1 : -1;
  return out;
}

}  // namespace

CrossingTest axes_cross(const Geodesic& g1, const Geodesic& g2, double tol) {
  return analyze_axes(g1, g2, tol).test;
}

int crossing_sign(const Geodesic& g1, const Geodesic& g2, double tol) {
  const AxesAnalysis a = analyze_axes(g1, g2, tol);
  if (!a.test.crosses)
    throw DegenerateGeometryError("crossing_sign requires transversally crossing axes");
  return a.sign;
}

double axis_position(const Geodesic& g1, const Geodesic& g2, double tol) {
  // Normalizer sending g1 to the axis (0, inf), repelling to 0; positions on
  // that axis are plain logarithms.
  double n00, n01, n10, n11;
  const double r1 = g1.repelling, a1 = g1.attracting;
  if (std::isinf(a1)) {
    n00 = 1; n01 = -r1; n10 = 0; n11 = 1;
  } else if (std::isinf(r1)) {
    n00 = 0; n01 = -1; n10 = 1; n11 = -a1;
  } else {
    const double k = r1 > a1 ? 1.0 : -1.0;
    n00 = k; n01 = -k * r1; n10 = 1; n11 = -a1;
  }
  const MobiusMap n{n00, n01, n10, n11};
  const double u = n.apply_boundary(g2.repelling);
  const double v = n.apply_boundary(g2.attracting);
  if (std::isinf(u) || std::isinf(v) || !(u * v < 0))
    throw DegenerateGeometryError("axis_position requires crossing axes");
  const double cross_pos = 0.5 * std::log(-u * v);
  const double base_pos = std::log(std::hypot(n00, n01) / std::hypot(n10, n11));
  (void)tol;
  return cross_pos - base_pos;
}

namespace {

using CMat = std::array<std::complex<double>, 4>;

CMat cmul(const CMat& x, const CMat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

CMat cinv(const CMat& x) {
  const std::complex<double> det = x[0] * x[3] - x[1] * x[2];
  return {x[3] / det, -x[1] / det, -x[2] / det, x[0] / det};
}

// Disk-model side pairing carrying edge k+2 onto edge k of the regular
// 4g-gon centered at 0 with interior angles 2pi/4g: the reflection in the
// diameter bisecting the two edges followed by the reflection in the geodesic
// through edge k. Edge midpoints sit at directions 2pi k/(4g) at hyperbolic
// distance d with cosh d = cot(pi/4g); the edge geodesic meets the boundary
// at angular half-width psi with cos psi = tanh d.
CMat disk_side_pairing(int genus, int k) {
  const int n = 4 * genus;
  const double phi_k = 2.0 * kPi * k / n;
  const double phi_mid = 2.0 * kPi * (k + 1) / n;
  const double cosh_d = 1.0 / std::tan(kPi / n);
  const double tanh_d = std::sqrt(cosh_d * cosh_d - 1.0) / cosh_d;
  const double psi = std::acos(tanh_d);
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> alpha = -i * std::exp(i * (phi_k - phi_mid)) / std::sin(psi);
  const std::complex<double> beta = i * std::exp(i * phi_mid) / std::tan(psi);
  return {alpha, beta, std::conj(beta), std::conj(alpha)};
}

MobiusMap to_half_plane(const CMat& m) {
  // Cayley conjugation by z -> i(1+z)/(1-z); SU(1,1) lands in SL(2,R).
  const std::complex<double> i(0.0, 1.0);
  const CMat cayley{i, i, {-1.0, 0.0}, {1.0, 0.0}};
  const CMat cayley_inv{-0.5 * i, {-0.5, 0.0}, -0.5 * i, {0.5, 0.0}};
  const CMat h = cmul(cmul(cayley, m), cayley_inv);
  for (const auto& e : h)
    if (std::abs(e.imag()) > 1e-9)
      throw DegenerateGeometryError("half-plane conversion left an imaginary residue");
  return MobiusMap{h[0].real(), h[1].real(), h[2].real(), h[3].real()}.normalized();
}

void validate_representation(const Representation& rep) {
  // Relator must land on +-identity.
  Word relator{rep.genus, {}};
  for (int i = 0; i < rep.genus; ++i) {
    const auto a = static_cast<std::int16_t>(2 * i);
    const auto b = static_cast<std::int16_t>(2 * i + 1);
    relator.letters.insert(relator.letters.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  const MobiusMap r = rep.evaluate(relator);
  const double resid =
      std::min(std::max({std::abs(r.a - 1), std::abs(r.b), std::abs(r.c), std::abs(r.d - 1)}),
               std::max({std::abs(r.a + 1), std::abs(r.b), std::abs(r.c), std::abs(r.d + 1)}));
  if (resid > 1e-9)
    throw DegenerateGeometryError("surface relator does not evaluate to +-identity");

  // Every nontrivial reduced word of length <= 6 must be uniformly hyperbolic.
  std::vector<MobiusMap> letters;
  for (const MobiusMap& m : rep.gens) {
    letters.push_back(m);
    letters.push_back(m.inverse());
  }
  const int nl = static_cast<int>(letters.size());
  struct Frame { MobiusMap m; int last; int depth; };
  std::vector<Frame> stack;
  for (int i = 0; i < nl; ++i) stack.push_back({letters[i], i, 1});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (!(std::abs(f.m.trace()) / std::sqrt(f.m.det()) > 2.0 + rep.tolerance))
      throw DegenerateGeometryError("short word fails the hyperbolicity margin");
    if (f.depth == 6) continue;
    for (int i = 0; i < nl; ++i) {
      if ((i ^ 1) == f.last) continue;  // letters come in inverse pairs
      stack.push_back({f.m * letters[i], i, f.depth + 1});
    }
  }
}

}  // namespace

MobiusMap Representation::evaluate(const Word& w) const {
  if (w.genus != genus) throw InputError("word genus does not match representation");
  validate_alphabet(w);
  MobiusMap m;
  for (const Letter& l : w.letters) {
    const MobiusMap& g = gens[l.index];
    m = m * (l.sign > 0 ? g : g.inverse());
  }
  return m.normalized();
}

Representation build_representation(int genus, double tolerance) {
  if (genus < 2) throw InputError("Fuchsian representation requires genus >= 2");
  Representation rep;
  rep.genus = genus;
  rep.tolerance = tolerance;
  for (int i = 0; i < genus; ++i) {
    rep.gens.push_back(to_half_plane(disk_side_pairing(genus, 4 * i)));
    rep.gens.push_back(to_half_plane(cinv(disk_side_pairing(genus, 4 * i + 1))));
  }
  validate_representation(rep);
  return rep;
}

}  // namespace goldman
