#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "goldman/bv_hochschild.hpp"
#include "goldman/goldman.hpp"
#include "goldman/surface_group.hpp"

using namespace goldman;

namespace {

LoopClass torus_class(std::int64_t p, std::int64_t q) { return LoopClass::torus(p, q); }

BVElement loop_elt(int genus, const LoopClass& c, int degree) {
  BVElement e = BVElement::zero(genus);
  if (degree == 1)
    e.h1_loops.add(c, Rational(1));
  else
    e.h2.add(c, Rational(1));
  return e;
}

BVElement alpha_elt(int genus, int coord) {
  BVElement e = BVElement::zero(genus);
  e.h1_alpha.coords[static_cast<std::size_t>(coord)] = Rational(1);
  return e;
}

const AxiomCheck& find_check(const AxiomReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  REQUIRE(false);
  return r.checks.front();
}

}  // namespace

TEST_CASE("bv element arithmetic") {
  BVElement z = BVElement::zero(1);
  CHECK(z.is_zero());
  CHECK(z.genus == 1);

  BVElement x = alpha_elt(1, 0);
  x.h0 = Rational(2);
  x.h2.add(torus_class(1, 0), Rational(3));
  CHECK(!x.is_zero());

  BVElement y = x * Rational(-1, 2);
  CHECK(y.h0 == Rational(-1));
  CHECK(y.h1_alpha.coords[0] == Rational(-1, 2));
  CHECK(y.h2.coeff(torus_class(1, 0)) == Rational(-3, 2));

  y += x;
  CHECK(y.h0 == Rational(1));
  BVElement s = x;
  s += -x;
  CHECK(s.is_zero());

  BVElement g2 = BVElement::zero(2);
  CHECK_THROWS_AS(g2 += x, InputError);

  CHECK(x.to_string().find("h0=2/1") != std::string::npos);
}

TEST_CASE("component extraction") {
  BVElement x = alpha_elt(1, 1);
  x.h0 = Rational(5);
  x.h1_loops.add(torus_class(0, 1), Rational(2));
  x.h2.add(torus_class(1, 1), Rational(-1));

  CHECK(component(x, 0).h0 == Rational(5));
  CHECK(component(x, 0).h2.is_zero());
  CHECK(component(x, 1).h1_alpha == x.h1_alpha);
  CHECK(component(x, 1).h1_loops == x.h1_loops);
  CHECK(component(x, 1).h0 == Rational(0));
  CHECK(component(x, 2).h2 == x.h2);
  CHECK_THROWS_AS(component(x, 3), InputError);

  BVElement back = component(x, 0);
  back += component(x, 1);
  back += component(x, 2);
  CHECK(back == x);
}

TEST_CASE("sign config formatting and default") {
  CHECK(SignConfig{1, 1, 1, 1}.to_string() == "(+,+,+,+)");
  CHECK(SignConfig{-1, 1, -1, 1}.to_string() == "(-,+,-,+)");
  CHECK(default_sign_config() == SignConfig{1, 1, -1, 1});
}

TEST_CASE("cup product on the torus") {
  const auto br = make_bracket_backend(1);
  const SignConfig sc = default_sign_config();

  SUBCASE("degree zero acts as scalar") {
    BVElement c = BVElement::zero(1);
    c.h0 = Rational(3);
    BVElement y = alpha_elt(1, 0);
    y.h1_loops.add(torus_class(2, 1), Rational(1, 2));
    y.h2.add(torus_class(0, 1), Rational(-1));
    y.h0 = Rational(7);

    const BVElement prod = cup(c, y, sc, br);
    CHECK(prod == y * Rational(3));
    CHECK(cup(y, c, sc, br) == y * Rational(3));
  }

  SUBCASE("degree (1,1) formula") {
    // x = (alpha = a1, loops = [b1]), y = (alpha = b1, loops = [(1,1)])
    BVElement x = alpha_elt(1, 0);
    x.h1_loops.add(torus_class(0, 1), Rational(1));
    BVElement y = alpha_elt(1, 1);
    y.h1_loops.add(torus_class(1, 1), Rational(1));

    const BVElement prod = cup(x, y, sc, br);
    CHECK(prod.h0 == Rational(0));
    CHECK(prod.h1_alpha == H1Class::zero(1));
    CHECK(prod.h1_loops.is_zero());
    // s1<a1,b1>gamma0 + s2<b1,b1>[b1] + s3<a1,(1,1)>[(1,1)] + s4[b1,(1,1)]
    FormalSum expect = FormalSum::zero(1);
    expect.add(torus_class(0, 0), Rational(1));
    expect.add(torus_class(1, 1), Rational(-1));
    expect.add(torus_class(1, 2), Rational(-1));
    CHECK(prod.h2 == expect);
  }

  SUBCASE("higher degrees vanish") {
    const BVElement a = loop_elt(1, torus_class(1, 0), 1);
    const BVElement b = loop_elt(1, torus_class(0, 1), 2);
    CHECK(cup(a, b, sc, br).is_zero());
    CHECK(cup(b, a, sc, br).is_zero());
    CHECK(cup(b, b, sc, br).is_zero());
  }

  SUBCASE("genus mismatch throws") {
    CHECK_THROWS_AS(cup(BVElement::zero(1), BVElement::zero(2), sc, br), InputError);
  }
}

TEST_CASE("bv operator") {
  BVElement x = alpha_elt(1, 0);
  x.h0 = Rational(4);
  x.h1_loops.add(torus_class(2, 0), Rational(1));
  x.h2.add(torus_class(0, 0), Rational(5));   // gamma0 component is killed
  x.h2.add(torus_class(1, 1), Rational(-2));

  const BVElement d = bv_delta(x);
  CHECK(d.h0 == Rational(0));
  CHECK(d.h1_alpha == H1Class::zero(1));
  CHECK(d.h2.is_zero());
  FormalSum expect = FormalSum::zero(1);
  expect.add(torus_class(1, 1), Rational(-2));
  CHECK(d.h1_loops == expect);

  CHECK(bv_delta(bv_delta(x)).is_zero());
  CHECK(bv_delta(component(x, 0)).is_zero());
  CHECK(bv_delta(component(x, 1)).is_zero());
}

TEST_CASE("gerstenhaber bracket on the torus") {
  const auto br = make_bracket_backend(1);
  const SignConfig sc = default_sign_config();

  SUBCASE("pure loops reduce to the goldman bracket mod gamma0") {
    const BVElement x = loop_elt(1, torus_class(1, 0), 1);
    const BVElement y = loop_elt(1, torus_class(0, 1), 1);
    const BVElement g = gerstenhaber(x, y, sc, br);
    FormalSum expect = FormalSum::zero(1);
    expect.add(torus_class(1, 1), Rational(1));
    CHECK(g.h1_loops == expect);
    CHECK(g.h2.is_zero());
    CHECK(g.h0 == Rational(0));

    // [(1,0),(-1,0)] lands entirely on gamma0, so the bracket vanishes.
    const BVElement xm = loop_elt(1, torus_class(-1, 0), 1);
    CHECK(gerstenhaber(x, xm, sc, br).is_zero());
  }

  SUBCASE("scalars are central") {
    BVElement c = BVElement::zero(1);
    c.h0 = Rational(3);
    BVElement y = alpha_elt(1, 0);
    y.h1_loops.add(torus_class(1, 1), Rational(2));
    y.h2.add(torus_class(0, 1), Rational(1));
    CHECK(gerstenhaber(c, y, sc, br).is_zero());
    CHECK(gerstenhaber(y, c, sc, br).is_zero());
  }

  SUBCASE("degree one against degree two") {
    const BVElement x = loop_elt(1, torus_class(1, 0), 1);
    const BVElement y = loop_elt(1, torus_class(1, 1), 2);
    // [x,y] = x u delta(y), [y,x] = delta(y) u x
    const BVElement xy = gerstenhaber(x, y, sc, br);
    FormalSum expect = FormalSum::zero(1);
    expect.add(torus_class(2, 1), Rational(1));
    CHECK(xy.h2 == expect);
    CHECK(xy.h1_loops.is_zero());

    const BVElement yx = gerstenhaber(y, x, sc, br);
    CHECK(yx.h2 == -expect);
    CHECK(xy == -yx);
  }
}

TEST_CASE("axiom verification on the torus") {
  const auto br = make_bracket_backend(1);

  const AxiomReport good = verify_axioms(1, 2, 60, 20260814u, default_sign_config(), br);
  CHECK(good.all_passed());
  CHECK(good.checks.size() == 6);
  for (const auto& c : good.checks) {
    CAPTURE(c.name);
    CAPTURE(c.counterexample);
    CHECK(c.passed);
    CHECK(c.samples == 60);
    CHECK(c.counterexample.empty());
  }

  const AxiomReport bad = verify_axioms(1, 2, 60, 20260814u, SignConfig{1, 1, 1, 1}, br);
  CHECK(!bad.all_passed());
  const auto& comm = find_check(bad, "graded_commutativity");
  CHECK(!comm.passed);
  CHECK(comm.samples == 1);  // the fixed witness fails immediately
  CHECK(comm.counterexample.find("sample 0") != std::string::npos);

  CHECK_THROWS_AS(verify_axioms(0, 2, 10, 1u, default_sign_config(), br), InputError);
  CHECK_THROWS_AS(verify_axioms(1, 0, 10, 1u, default_sign_config(), br), InputError);
  CHECK_THROWS_AS(verify_axioms(1, 2, 0, 1u, default_sign_config(), br), InputError);
}

TEST_CASE("sign resolution on the torus") {
  const auto br = make_bracket_backend(1);
  const SignSearchResult res = resolve_signs(1, 2, 40, 7u, br);

  CHECK(res.reports.size() == 16);
  CHECK(res.passing.size() == 8);
  for (const auto& sc : res.passing) CHECK(sc.s2 == -sc.s3);
  CHECK(res.selected == default_sign_config());
  // All-plus signs are the first report and fail with a witness.
  const AxiomReport& all_plus = res.reports.front();
  CHECK(all_plus.signs == SignConfig{1, 1, 1, 1});
  CHECK(!all_plus.all_passed());
  CHECK(!find_check(all_plus, "graded_commutativity").passed);
}

TEST_CASE("genus two backend and axioms") {
  const auto br = make_bracket_backend(2);
  const Presentation pres = Presentation::standard(2);
  const LoopClass a1 = conjugacy_canonical(parse_word("a1", 2), pres);
  const LoopClass b1 = conjugacy_canonical(parse_word("b1", 2), pres);
  const LoopClass a1b1 = conjugacy_canonical(parse_word("a1 b1", 2), pres);

  FormalSum expect = FormalSum::zero(2);
  expect.add(a1b1, Rational(1));
  CHECK(br(a1, b1) == expect);
  CHECK(br(b1, a1) == -expect);  // memoized reverse order

  const AxiomReport rep = verify_axioms(2, 2, 4, 11u, default_sign_config(), br);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.counterexample);
    CHECK(c.passed);
  }
}
