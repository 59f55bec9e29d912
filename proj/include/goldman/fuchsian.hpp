#pragma once

#include <vector>

#include "goldman/word.hpp"

namespace goldman {

// Real Moebius transformation of the upper half-plane, acting by
// z -> (a z + b)/(c z + d). Normalized maps have det 1 and trace >= 0
// whenever |trace| is resolvable from 0.
struct MobiusMap {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  MobiusMap inverse() const { return {d, -b, -c, a}; }
  friend MobiusMap operator*(const MobiusMap& x, const MobiusMap& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  // Rescale to det 1, then fix the projective sign.
  MobiusMap normalized() const;
  // Action on the boundary circle R + {inf}.
  double apply_boundary(double t) const;
};

// Oriented hyperbolic axis: the geodesic from the repelling toward the
// attracting fixed point, both on the boundary circle.
struct Geodesic {
  double repelling = 0;
  double attracting = 0;
  double translation_length = 0;
};

// Fixed points and translation length of a hyperbolic map (|trace| > 2 + tol).
Geodesic axis(const MobiusMap& m, double tol = 1e-9);

// Distance between boundary points in the chordal metric of the circle
// compactification (handles inf; scale-free near inf).
double boundary_chordal(double s, double t);

struct CrossingTest {
  bool crosses = false;
  bool degenerate = false;  // some pair of endpoints within tolerance
  bool coincident = false;  // the two axes have the same endpoint set
};

// Strict interleaving of endpoint pairs on the boundary circle. Marginal
// configurations (endpoint gap below 10x tol) are retried after moving the
// whole picture by a fixed isometry; a persistent marginal gap is an error.
CrossingTest axes_cross(const Geodesic& g1, const Geodesic& g2, double tol = 1e-9);

// +1 iff g2's attracting endpoint lies in the counterclockwise arc from g1's
// repelling to g1's attracting endpoint; requires crossing axes. Swapping the
// arguments or reversing one orientation flips the sign. The choice of which
// interleaving is +1 is calibrated so that summed signs reproduce the
// homological intersection pairing with <a_i, b_i> = +1.
int crossing_sign(const Geodesic& g1, const Geodesic& g2, double tol = 1e-9);

// Signed arclength along g1 from the foot of the perpendicular dropped from
// the basepoint i to the crossing point with g2; positive toward attracting.
double axis_position(const Geodesic& g1, const Geodesic& g2, double tol = 1e-9);

// Discrete faithful representation of the genus-g surface group built from
// the regular 4g-gon with interior angles 2pi/4g: generator images are the
// side pairings of the commutator-pattern edge identification, written in the
// upper half-plane. gens[2i] is the image of a_{i+1}, gens[2i+1] of b_{i+1}.
struct Representation {
  int genus = 2;
  double tolerance = 1e-9;
  std::vector<MobiusMap> gens;

  MobiusMap evaluate(const Word& w) const;
};

// Throws on genus < 2. Construction asserts the relator lands within 1e-9 of
// +-identity and that every nontrivial reduced word of length <= 6 is
// hyperbolic with margin > tolerance.
Representation build_representation(int genus, double tolerance = 1e-9);

}  // namespace goldman
