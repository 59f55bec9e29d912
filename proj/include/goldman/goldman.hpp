#pragma once

#include <map>
#include <string>
#include <vector>

#include "goldman/fuchsian.hpp"
#include "goldman/rational.hpp"
#include "goldman/surface_group.hpp"

namespace goldman {

// Element of the Goldman space L: finitely supported rational combination of
// free homotopy classes. Zero coefficients are never stored.
struct FormalSum {
  int genus = 1;
  std::map<LoopClass, Rational> terms;

  static FormalSum zero(int genus) { return {genus, {}}; }
  bool is_zero() const { return terms.empty(); }
  void add(const LoopClass& c, const Rational& coeff);
  FormalSum& operator+=(const FormalSum& o);
  FormalSum operator*(const Rational& c) const;
  FormalSum operator-() const;
  Rational coeff(const LoopClass& c) const;
  Rational coefficient_total() const;
  friend bool operator==(const FormalSum&, const FormalSum&) = default;
  std::string to_string() const;  // "0" when empty
};

struct BracketConfig {
  int max_conjugator_length = 8;
  int stabilization_step = 2;
  double tolerance = 1e-9;        // geometric predicates
  double dedup_tolerance = 1e-6;  // crossing positions along the base axis
};

// Closed form on the torus: [(p,q),(r,s)] = (ps - qr) (p+r, q+s).
FormalSum torus_bracket(const LoopClass& x, const LoopClass& y);

// Literal intersection count: straight lines with generic offsets on the unit
// square, one signed term per transversal crossing, exact arithmetic
// throughout. Independent code path from the closed form.
FormalSum torus_bracket_oracle(const LoopClass& x, const LoopClass& y);

// One geometric crossing point kept after deduplication; enough data to draw
// the configuration without rerunning the enumeration.
struct CrossingRecord {
  Geodesic y_axis;       // axis of h wy h^-1 for the discovering conjugator h
  int sign = 1;
  Rational coeff;        // sign times the y strand multiplicity
  LoopClass loop;        // class of the merged loop wx h wy h^-1
  double position = 0;   // along the x axis, modulo its translation length
};

// Depth-resolved outcome of the geometric enumeration.
struct BracketResult {
  FormalSum value;
  int stabilized_at = -1;           // first N with sum(N) == sum(N - step)
  std::vector<FormalSum> by_depth;  // partial sum after each conjugator depth
  std::vector<CrossingRecord> crossings;
};

struct BracketNotStabilized : NonStabilizedError {
  BracketNotStabilized(const std::string& msg, FormalSum shallow_, FormalSum deep_)
      : NonStabilizedError(msg), shallow(std::move(shallow_)), deep(std::move(deep_)) {}
  FormalSum shallow, deep;  // partial sums at max depth - step and max depth
};

// Goldman bracket for genus >= 2 via the Fuchsian representation: enumerate
// reduced conjugators h, test the axis of h wy h^-1 against the axis of wx,
// deduplicate crossings modulo <wx> by position along the base axis (confirmed
// by an exact conjugacy check), and sum sign * class(wx h wy h^-1). Stops at
// the first depth N >= 2*step whose partial sum matches depth N - step.
FormalSum goldman_bracket(const LoopClass& x, const LoopClass& y,
                          const Representation& rep, const BracketConfig& cfg = {});

// Same enumeration, forced to run to max_conjugator_length with no early stop
// and no stabilization requirement; used to probe depth stability directly.
BracketResult goldman_bracket_full(const LoopClass& x, const LoopClass& y,
                                   const Representation& rep, const BracketConfig& cfg = {});

// Standard symplectic form on H_1: <a_i, b_i> = +1, <b_i, a_i> = -1.
Rational intersection_pairing(const H1Class& x, const H1Class& y);

// Terms of gamma reweighted by their pairing with alpha: a term c*[w]
// contributes c*<alpha, ab(w)>*[w].
FormalSum loop_h1_pairing(const H1Class& alpha, const FormalSum& gamma);

}  // namespace goldman
