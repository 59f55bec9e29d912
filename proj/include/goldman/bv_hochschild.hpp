#pragma once

#include <functional>
#include <string>
#include <vector>

#include "goldman/goldman.hpp"
#include "goldman/rational.hpp"
#include "goldman/surface_group.hpp"

namespace goldman {

// Element of HH*(k[pi_1 X]) for a closed oriented surface X, stored by graded
// piece. Writing L for the free k-module on the loop classes and gamma0 for
// the trivial class:
//   degree 0: k
//   degree 1: H_1(X; k) + L / k*gamma0
//   degree 2: L
// The degree-1 loop part is kept as the representative with zero gamma0
// coefficient; every operation producing h1_loops projects gamma0 away.
struct BVElement {
  int genus = 1;
  Rational h0 = Rational(0);
  H1Class h1_alpha;
  FormalSum h1_loops;
  FormalSum h2;

  static BVElement zero(int genus);
  bool is_zero() const;
  BVElement& operator+=(const BVElement& o);
  BVElement operator*(const Rational& c) const;
  BVElement operator-() const { return *this * Rational(-1); }
  friend bool operator==(const BVElement&, const BVElement&) = default;
  std::string to_string() const;
};

// Homogeneous piece of given degree (0, 1 or 2).
BVElement component(const BVElement& x, int degree);

// The four signs of the degree (1,1) cup product
//   (alpha, gamma) u (alpha', gamma') =
//     s1 <alpha, alpha'> gamma0 + s2 P(alpha', gamma) + s3 P(alpha, gamma')
//     + s4 [gamma, gamma']
// where <,> is the intersection form, P weights each loop term by its pairing
// with the H_1 class, and [,] is the Goldman bracket. Values are +1 or -1.
struct SignConfig {
  int s1 = 1, s2 = 1, s3 = -1, s4 = 1;

  friend bool operator==(const SignConfig&, const SignConfig&) = default;
  std::string to_string() const;  // "(+,+,-,+)"
};

// Signs shipped as the library default: the axiom-passing configuration with
// the fewest flips relative to (+,+,+,+), earliest slot kept positive on ties.
SignConfig default_sign_config();

// Goldman bracket of two loop classes, as a pluggable dependency of the cup
// and Gerstenhaber operations.
using BracketBackend = std::function<FormalSum(const LoopClass&, const LoopClass&)>;

// Genus 1: exact closed form. Genus >= 2: geodesic representation built once,
// results memoized (both argument orders, via antisymmetry) across calls.
BracketBackend make_bracket_backend(int genus, const BracketConfig& cfg = {});

// Cup product. Degree 0 acts by scalar multiplication, the (1,1) component
// follows the SignConfig formula above (gamma0 terms are kept in degree 2),
// and any component landing above degree 2 vanishes.
BVElement cup(const BVElement& x, const BVElement& y, const SignConfig& signs,
              const BracketBackend& bracket);

// BV operator: identity L -> L / k*gamma0 from degree 2 to the loop part of
// degree 1, zero on degrees 0 and 1.
BVElement bv_delta(const BVElement& x);

// Gerstenhaber bracket generated from the BV operator degreewise:
//   [x, y] = (-1)^{|x|+1} delta(x u y) + (-1)^{|x|} delta(x) u y + x u delta(y)
// for homogeneous x, extended bilinearly. Scalars bracket to zero on either
// side; the (1,1) piece is the Goldman bracket mod gamma0 when s4 = +1.
BVElement gerstenhaber(const BVElement& x, const BVElement& y, const SignConfig& signs,
                       const BracketBackend& bracket);

struct AxiomCheck {
  std::string name;
  bool passed = false;
  int samples = 0;
  std::string counterexample;  // empty when passed
};

struct AxiomReport {
  int genus = 1;
  SignConfig signs;
  unsigned seed = 0;
  int samples = 0;
  int max_class_length = 2;
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
};

// Exact verification of the BV package on pseudorandom elements supported on
// classes of canonical length <= max_class_length:
//   delta_squared        delta(delta(x)) = 0
//   graded_commutativity x u y = (-1)^{ij} y u x
//   associativity        (x u y) u z = x u (y u z)
//   graded_antisymmetry  [x,y] = -(-1)^{(i-1)(j-1)} [y,x]
//   graded_jacobi        [x,[y,z]] = [[x,y],z] + (-1)^{(i-1)(j-1)} [y,[x,z]]
//   graded_leibniz       [x, y u z] = [x,y] u z + (-1)^{(i-1)j} y u [x,z]
// Sign-sensitive checks draw homogeneous elements of pseudorandom degrees.
// Sample streams are derived from (seed, check, index), so a report is
// reproducible and independent of the order checks run in. The first
// commutativity sample is a fixed witness separating the s2/s3 signs.
AxiomReport verify_axioms(int genus, int max_class_length, int samples, unsigned seed,
                          const SignConfig& signs, const BracketBackend& bracket);

struct SignSearchResult {
  // Configurations passing every axiom, fewest flips from (+,+,+,+) first,
  // ties broken by keeping earlier slots positive. selected = passing.front().
  std::vector<SignConfig> passing;
  SignConfig selected;
  // One report per configuration, in enumeration order (s1 slowest bit).
  std::vector<AxiomReport> reports;
};

// Runs verify_axioms for all 16 sign configurations with a shared bracket
// backend. Throws SignResolutionError when nothing passes.
SignSearchResult resolve_signs(int genus, int max_class_length, int samples, unsigned seed,
                               const BracketBackend& bracket);

struct SignResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace goldman
