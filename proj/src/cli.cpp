#include "goldman/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "goldman/bv_hochschild.hpp"
#include "goldman/fuchsian.hpp"
#include "goldman/goldman.hpp"
#include "goldman/io.hpp"
#include "goldman/surface_group.hpp"

namespace goldman {

namespace {

BVElement load_element(const std::string& path, int genus) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("bad JSON in '" + path + "': " + e.what());
  }
  BVElement e = bv_element_from_json(j);
  if (e.genus != genus)
    throw InputError("element in '" + path + "' has genus " + std::to_string(e.genus) +
                     ", expected " + std::to_string(genus));
  return e;
}

std::string display_token(const LoopClass& c) {
  const std::string t = class_to_token(c);
  return t.empty() ? "(trivial)" : t;
}

// ---- disk rendering ----

struct Vec2 {
  double x = 0, y = 0;
};

// Boundary map from the half-plane to the unit disk: w = (t - i)/(t + i).
Vec2 disk_point(double t) {
  if (std::isinf(t)) return {1.0, 0.0};
  const std::complex<double> w =
      std::complex<double>(t, -1.0) / std::complex<double>(t, 1.0);
  return {w.real(), w.imag()};
}

// Geodesic in the disk: diameter, or an arc of the circle through both
// boundary points orthogonal to the unit circle.
struct DiskGeodesic {
  bool is_line = false;
  Vec2 u;       // unit direction when a diameter
  Vec2 center;  // orthocircle data otherwise
  double radius = 0;
  Vec2 p1, p2;
};

DiskGeodesic disk_geodesic(double t1, double t2) {
  DiskGeodesic g;
  g.p1 = disk_point(t1);
  g.p2 = disk_point(t2);
  const double d = g.p1.x * g.p2.x + g.p1.y * g.p2.y;
  if (d < -1.0 + 1e-12) {
    g.is_line = true;
    g.u = g.p1;
    return g;
  }
  g.center = {(g.p1.x + g.p2.x) / (1 + d), (g.p1.y + g.p2.y) / (1 + d)};
  g.radius =
      std::sqrt(std::max(g.center.x * g.center.x + g.center.y * g.center.y - 1.0, 0.0));
  return g;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v == 0 ? 0.0 : v);
  return buf;
}

// SVG y grows downward; negate y on emission.
std::string pt(const Vec2& v) { return fmt(v.x) + " " + fmt(-v.y); }

std::string geodesic_path(const DiskGeodesic& g) {
  std::ostringstream d;
  d << "M " << pt(g.p1);
  if (g.is_line) {
    d << " L " << pt(g.p2);
    return d.str();
  }
  const double a1 = std::atan2(g.p1.y - g.center.y, g.p1.x - g.center.x);
  const double a2 = std::atan2(g.p2.y - g.center.y, g.p2.x - g.center.x);
  const double sweep = std::remainder(a2 - a1, 2 * 3.14159265358979323846);
  const int segs = 48;
  for (int i = 1; i <= segs; ++i) {
    const double a = a1 + sweep * i / segs;
    d << " L "
      << pt({g.center.x + g.radius * std::cos(a), g.center.y + g.radius * std::sin(a)});
  }
  return d.str();
}

// Both geodesics are orthogonal to the unit circle, so their radical line
// passes through the origin; the inside intersection is the root of
// s^2 - 2cs + 1 with |s| < 1 along that line.
Vec2 crossing_marker(const DiskGeodesic& a, const DiskGeodesic& b) {
  const auto inside_root = [](double c) {
    const double disc = c * c - 1.0;
    if (disc <= 0) return 0.0;
    const double s = std::sqrt(disc);
    return c >= 0 ? c - s : c + s;
  };
  if (a.is_line && b.is_line) return {0.0, 0.0};
  if (a.is_line || b.is_line) {
    const DiskGeodesic& line = a.is_line ? a : b;
    const DiskGeodesic& circ = a.is_line ? b : a;
    const double c = line.u.x * circ.center.x + line.u.y * circ.center.y;
    const double s = inside_root(c);
    return {s * line.u.x, s * line.u.y};
  }
  const Vec2 diff{b.center.x - a.center.x, b.center.y - a.center.y};
  const double n = std::hypot(diff.x, diff.y);
  if (n == 0) return {0.0, 0.0};
  const Vec2 u{-diff.y / n, diff.x / n};
  const double c = u.x * a.center.x + u.y * a.center.y;
  const double s = inside_root(c);
  return {s * u.x, s * u.y};
}

void write_svg(const std::string& path, const LoopClass& x, const LoopClass& y,
               const Representation& rep, const BracketConfig& cfg,
               const BracketResult& res) {
  const Geodesic gx = axis(rep.evaluate(class_word(x)), cfg.tolerance);
  const DiskGeodesic dx = disk_geodesic(gx.repelling, gx.attracting);
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.08 -1.08 2.16 2.16\" "
       "width=\"640\" height=\"640\">\n";
  f << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\" "
       "stroke-width=\"0.006\"/>\n";
  f << "  <path d=\"" << geodesic_path(dx)
    << "\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"0.012\"><title>axis of "
    << display_token(x) << "</title></path>\n";
  for (const auto& cr : res.crossings) {
    const DiskGeodesic dy = disk_geodesic(cr.y_axis.repelling, cr.y_axis.attracting);
    const char* color = cr.sign > 0 ? "#1a7f37" : "#cf222e";
    f << "  <path d=\"" << geodesic_path(dy) << "\" fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"0.008\"><title>conjugate axis of " << display_token(y)
      << ", sign " << (cr.sign > 0 ? "+1" : "-1") << "</title></path>\n";
    const Vec2 m = crossing_marker(dx, dy);
    f << "  <circle cx=\"" << fmt(m.x) << "\" cy=\"" << fmt(-m.y) << "\" r=\"0.022\" fill=\""
      << color << "\"><title>class " << display_token(cr.loop) << ", contribution "
      << rational_to_string(cr.coeff) << ", position " << fmt(cr.position)
      << "</title></circle>\n";
  }
  f << "</svg>\n";
}

// ---- goldman verification suite ----

std::mt19937 stream(unsigned seed, unsigned check, unsigned index) {
  std::seed_seq sq{seed, check, index};
  return std::mt19937(sq);
}

LoopClass random_class(std::mt19937& g, int genus, const std::vector<LoopClass>& pool) {
  if (genus == 1) {
    std::uniform_int_distribution<std::int64_t> v(-4, 4);
    const auto p = v(g);
    return LoopClass::torus(p, v(g));
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(g)];
}

FormalSum unit_sum(const LoopClass& c) {
  FormalSum s = FormalSum::zero(c.genus);
  s.add(c, Rational(1));
  return s;
}

FormalSum bracket_bilinear(const FormalSum& a, const FormalSum& b, const BracketBackend& br) {
  FormalSum out = FormalSum::zero(a.genus);
  for (const auto& [ca, xa] : a.terms)
    for (const auto& [cb, xb] : b.terms) out += br(ca, cb) * (xa * xb);
  return out;
}

struct SuiteCheck {
  std::string name;
  bool passed = true;
  int samples = 0;
  std::string counterexample;
};

std::vector<SuiteCheck> goldman_suite(int genus, int max_len, int samples, unsigned seed,
                                      const BracketBackend& br) {
  std::vector<LoopClass> pool;
  if (genus >= 2)
    for (const auto& c : enumerate_classes(Presentation::standard(genus), max_len))
      if (!c.is_trivial()) pool.push_back(c);

  std::vector<SuiteCheck> checks;
  {
    SuiteCheck c{"antisymmetry", true, 0, ""};
    for (int t = 0; t < samples; ++t) {
      auto g = stream(seed, 0, static_cast<unsigned>(t));
      const LoopClass x = random_class(g, genus, pool);
      const LoopClass y = random_class(g, genus, pool);
      ++c.samples;
      const FormalSum xy = br(x, y);
      const FormalSum yx = br(y, x);
      if (!(xy == -yx)) {
        c.passed = false;
        c.counterexample = "sample " + std::to_string(t) + ": x = " + display_token(x) +
                           ", y = " + display_token(y) + ", [x,y] = " + xy.to_string() +
                           ", [y,x] = " + yx.to_string();
        break;
      }
    }
    checks.push_back(std::move(c));
  }
  {
    SuiteCheck c{"jacobi", true, 0, ""};
    for (int t = 0; t < samples; ++t) {
      auto g = stream(seed, 1, static_cast<unsigned>(t));
      const LoopClass x = random_class(g, genus, pool);
      const LoopClass y = random_class(g, genus, pool);
      const LoopClass z = random_class(g, genus, pool);
      ++c.samples;
      FormalSum j = bracket_bilinear(unit_sum(x), br(y, z), br);
      j += bracket_bilinear(unit_sum(y), br(z, x), br);
      j += bracket_bilinear(unit_sum(z), br(x, y), br);
      if (!j.is_zero()) {
        c.passed = false;
        c.counterexample = "sample " + std::to_string(t) + ": x = " + display_token(x) +
                           ", y = " + display_token(y) + ", z = " + display_token(z) +
                           ", cyclic sum = " + j.to_string();
        break;
      }
    }
    checks.push_back(std::move(c));
  }
  {
    SuiteCheck c{"homological_consistency", true, 0, ""};
    for (int t = 0; t < samples; ++t) {
      auto g = stream(seed, 2, static_cast<unsigned>(t));
      const LoopClass x = random_class(g, genus, pool);
      const LoopClass y = random_class(g, genus, pool);
      ++c.samples;
      const FormalSum xy = br(x, y);
      const Rational expect = intersection_pairing(abelianize(x), abelianize(y));
      if (xy.coefficient_total() != expect) {
        c.passed = false;
        c.counterexample = "sample " + std::to_string(t) + ": x = " + display_token(x) +
                           ", y = " + display_token(y) + ", total " +
                           rational_to_string(xy.coefficient_total()) + " != pairing " +
                           rational_to_string(expect);
        break;
      }
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

// ---- subcommand argument bundles ----

struct BracketArgs {
  int genus = 1;
  std::string x, y, svg;
  int depth = 8;
  int step = 2;
  double tol = 1e-9;
};

struct ClassesArgs {
  int genus = 1;
  int max_len = 2;
};

struct PairArgs {
  int genus = 1;
  std::string e1, e2, signs;
  int depth = 8;
  double tol = 1e-9;
};

struct DeltaArgs {
  int genus = 1;
  std::string e;
};

struct VerifyArgs {
  std::string suite;
  int genus = 1;
  int samples = 100;
  unsigned seed = 7;
  int max_len = 2;
  std::string signs;
  int depth = 8;
  double tol = 1e-9;
};

struct SignsArgs {
  int genus = 1;
  int samples = 40;
  unsigned seed = 7;
  int max_len = 2;
  int depth = 8;
  double tol = 1e-9;
};

struct RepArgs {
  int genus = 2;
  double tol = 1e-9;
};

BracketConfig make_config(int depth, int step, double tol) {
  BracketConfig cfg;
  cfg.max_conjugator_length = depth;
  cfg.stabilization_step = step;
  cfg.tolerance = tol;
  return cfg;
}

int do_bracket(const BracketArgs& a, bool json, std::ostream& out) {
  const LoopClass cx = token_to_class(a.x, a.genus);
  const LoopClass cy = token_to_class(a.y, a.genus);
  FormalSum value = FormalSum::zero(a.genus);
  int stabilized = -1;
  if (a.genus == 1) {
    if (!a.svg.empty()) throw InputError("svg output requires genus >= 2");
    value = torus_bracket(cx, cy);
  } else {
    const Representation rep = build_representation(a.genus, a.tol);
    const BracketConfig cfg = make_config(a.depth, a.step, a.tol);
    const BracketResult res = goldman_bracket_full(cx, cy, rep, cfg);
    if (res.stabilized_at < 0)
      throw NonStabilizedError("bracket did not stabilize by depth " +
                               std::to_string(a.depth) + "; increase --depth");
    value = res.by_depth[static_cast<std::size_t>(res.stabilized_at)];
    stabilized = res.stabilized_at;
    if (!a.svg.empty()) write_svg(a.svg, cx, cy, rep, cfg, res);
  }
  if (json) {
    out << formal_sum_to_json(value).dump(2) << "\n";
  } else {
    out << "[" << display_token(cx) << ", " << display_token(cy) << "] = " << value.to_string()
        << "\n";
    if (stabilized >= 0) out << "stabilized at depth " << stabilized << "\n";
  }
  return 0;
}

int do_classes(const ClassesArgs& a, bool json, std::ostream& out) {
  const auto classes = enumerate_classes(Presentation::standard(a.genus), a.max_len);
  const auto n = classes.size();
  const std::size_t hh1 = 2 * static_cast<std::size_t>(a.genus) + n - 1;
  if (json) {
    Json list = Json::array();
    for (const auto& c : classes) list.push_back(class_to_token(c));
    const Json j{{"genus", a.genus},
                 {"max_length", a.max_len},
                 {"count", n},
                 {"classes", std::move(list)},
                 {"dims", Json{{"hh0", 1}, {"hh1", hh1}, {"hh2", n}}}};
    out << j.dump(2) << "\n";
  } else {
    out << "genus " << a.genus << ", classes of canonical length <= " << a.max_len << ": " << n
        << "\n";
    for (const auto& c : classes) out << "  " << display_token(c) << "\n";
    out << "dim HH^0 = 1\n";
    out << "dim HH^1 = " << hh1 << "  (2g + classes - 1)\n";
    out << "dim HH^2 = " << n << "\n";
  }
  return 0;
}

void print_element(const BVElement& e, bool json, std::ostream& out) {
  if (json)
    out << bv_element_to_json(e).dump(2) << "\n";
  else
    out << e.to_string() << "\n";
}

int do_cup(const PairArgs& a, bool gerst, bool json, std::ostream& out) {
  const BVElement e1 = load_element(a.e1, a.genus);
  const BVElement e2 = load_element(a.e2, a.genus);
  const SignConfig sc = a.signs.empty() ? default_sign_config() : parse_sign_config(a.signs);
  const auto br = make_bracket_backend(a.genus, make_config(a.depth, 2, a.tol));
  const BVElement r = gerst ? gerstenhaber(e1, e2, sc, br) : cup(e1, e2, sc, br);
  print_element(r, json, out);
  return 0;
}

int do_delta(const DeltaArgs& a, bool json, std::ostream& out) {
  const BVElement e = load_element(a.e, a.genus);
  print_element(bv_delta(e), json, out);
  return 0;
}

int do_verify(const VerifyArgs& a, bool json, std::ostream& out) {
  const auto br = make_bracket_backend(a.genus, make_config(a.depth, 2, a.tol));
  if (a.suite == "bv") {
    const SignConfig sc = a.signs.empty() ? default_sign_config() : parse_sign_config(a.signs);
    const AxiomReport report =
        verify_axioms(a.genus, a.max_len, a.samples, a.seed, sc, br);
    if (json) {
      out << axiom_report_to_json(report).dump(2) << "\n";
    } else {
      out << "suite bv, genus " << a.genus << ", samples " << a.samples << ", seed " << a.seed
          << ", signs " << sc.to_string() << "\n";
      for (const auto& c : report.checks) {
        if (c.passed)
          out << "PASS " << c.name << " (" << c.samples << " samples)\n";
        else
          out << "FAIL " << c.name << ": " << c.counterexample << "\n";
      }
      out << (report.all_passed() ? "all axioms passed\n" : "axiom failures present\n");
    }
    return report.all_passed() ? 0 : 1;
  }

  const auto checks = goldman_suite(a.genus, a.max_len, a.samples, a.seed, br);
  const bool ok =
      std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
  if (json) {
    Json jc = Json::array();
    for (const auto& c : checks)
      jc.push_back(Json{{"name", c.name},
                        {"passed", c.passed},
                        {"samples", c.samples},
                        {"counterexample", c.counterexample}});
    const Json j{{"suite", "goldman"}, {"genus", a.genus},    {"seed", a.seed},
                 {"samples", a.samples}, {"max_class_length", a.max_len},
                 {"all_passed", ok},     {"checks", std::move(jc)}};
    out << j.dump(2) << "\n";
  } else {
    out << "suite goldman, genus " << a.genus << ", samples " << a.samples << ", seed "
        << a.seed << "\n";
    for (const auto& c : checks) {
      if (c.passed)
        out << "PASS " << c.name << " (" << c.samples << " samples)\n";
      else
        out << "FAIL " << c.name << ": " << c.counterexample << "\n";
    }
    out << (ok ? "all checks passed\n" : "check failures present\n");
  }
  return ok ? 0 : 1;
}

int do_resolve_signs(const SignsArgs& a, bool json, std::ostream& out) {
  const auto br = make_bracket_backend(a.genus, make_config(a.depth, 2, a.tol));
  const SignSearchResult res = resolve_signs(a.genus, a.max_len, a.samples, a.seed, br);
  if (json) {
    out << sign_search_to_json(res).dump(2) << "\n";
    return 0;
  }
  out << "tested 16 sign configurations, " << res.passing.size() << " passing\n";
  out << "passing:";
  for (const auto& sc : res.passing) out << " " << sc.to_string();
  out << "\n";
  out << "selected default: " << res.selected.to_string() << "\n";
  const AxiomReport& all_plus = res.reports.front();
  if (all_plus.all_passed()) {
    out << "all-plus (+,+,+,+): PASS\n";
  } else {
    for (const auto& c : all_plus.checks) {
      if (c.passed) continue;
      out << "all-plus (+,+,+,+): FAIL " << c.name << "\n";
      out << "counterexample: " << c.counterexample << "\n";
      break;
    }
  }
  return 0;
}

int do_rep_check(const RepArgs& a, bool json, std::ostream& out) {
  const Representation rep = build_representation(a.genus, a.tol);
  const Presentation pres = Presentation::standard(a.genus);
  const MobiusMap rel = rep.evaluate(pres.relator());
  const auto dev = [&](double s) {
    return std::max(std::max(std::abs(rel.a - s), std::abs(rel.d - s)),
                    std::max(std::abs(rel.b), std::abs(rel.c)));
  };
  const double residual = std::min(dev(1.0), dev(-1.0));
  std::vector<double> traces;
  bool hyperbolic = true;
  for (const auto& m : rep.gens) {
    traces.push_back(std::abs(m.trace()));
    if (traces.back() <= 2.0) hyperbolic = false;
  }
  if (json) {
    Json jt = Json::array();
    for (const double t : traces) jt.push_back(t);
    const Json j{{"genus", a.genus},
                 {"tolerance", a.tol},
                 {"relator_residual", residual},
                 {"generator_traces", std::move(jt)},
                 {"hyperbolic_generators", hyperbolic},
                 {"status", "ok"}};
    out << j.dump(2) << "\n";
  } else {
    out << "genus " << a.genus << " representation\n";
    out << "relator residual = " << residual << "\n";
    out << "generator |trace|:";
    for (const double t : traces) out << " " << t;
    out << "\n";
    out << (hyperbolic ? "all generators hyperbolic\n" : "non-hyperbolic generator found\n");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();
  const auto emit_error = [&](const std::string& kind, const std::string& what, int code) {
    if (json_mode)
      err << Json{{"error", what}, {"kind", kind}, {"exit", code}}.dump(2) << "\n";
    else
      err << "error (" << kind << "): " << what << "\n";
    return code;
  };

  CLI::App app{"Goldman bracket and surface BV algebra toolkit", "goldman"};
  app.require_subcommand(0, 1);
  bool json = false;
  app.add_flag("--json", json, "emit schema JSON instead of text");

  BracketArgs ba;
  auto* bracket_cmd = app.add_subcommand("bracket", "Goldman bracket of two loop classes");
  bracket_cmd->fallthrough();
  bracket_cmd->add_option("genus", ba.genus, "surface genus")->required();
  bracket_cmd->add_option("x", ba.x, "first class: word, or (p,q) at genus 1")->required();
  bracket_cmd->add_option("y", ba.y, "second class")->required();
  bracket_cmd->add_option("--depth", ba.depth, "max conjugator length")->capture_default_str();
  bracket_cmd->add_option("--step", ba.step, "stabilization step")->capture_default_str();
  bracket_cmd->add_option("--tolerance", ba.tol, "geometric tolerance")->capture_default_str();
  bracket_cmd->add_option("--svg", ba.svg, "write a disk picture of axes and crossings");

  ClassesArgs ca;
  auto* classes_cmd = app.add_subcommand("classes", "loop classes up to a canonical length");
  classes_cmd->fallthrough();
  classes_cmd->add_option("genus", ca.genus, "surface genus")->required();
  classes_cmd->add_option("max_length", ca.max_len, "canonical length bound")->required();

  PairArgs cupa;
  auto* cup_cmd = app.add_subcommand("cup", "cup product of two elements");
  cup_cmd->fallthrough();
  cup_cmd->add_option("genus", cupa.genus, "surface genus")->required();
  cup_cmd->add_option("e1", cupa.e1, "first element JSON file")->required();
  cup_cmd->add_option("e2", cupa.e2, "second element JSON file")->required();
  cup_cmd->add_option("--signs", cupa.signs, "sign config, e.g. (+,+,-,+)");
  cup_cmd->add_option("--depth", cupa.depth, "max conjugator length")->capture_default_str();
  cup_cmd->add_option("--tolerance", cupa.tol, "geometric tolerance")->capture_default_str();

  DeltaArgs da;
  auto* delta_cmd = app.add_subcommand("delta", "BV operator");
  delta_cmd->fallthrough();
  delta_cmd->add_option("genus", da.genus, "surface genus")->required();
  delta_cmd->add_option("element", da.e, "element JSON file")->required();

  PairArgs ga;
  auto* gerst_cmd = app.add_subcommand("gerstenhaber", "Gerstenhaber bracket of two elements");
  gerst_cmd->fallthrough();
  gerst_cmd->add_option("genus", ga.genus, "surface genus")->required();
  gerst_cmd->add_option("e1", ga.e1, "first element JSON file")->required();
  gerst_cmd->add_option("e2", ga.e2, "second element JSON file")->required();
  gerst_cmd->add_option("--signs", ga.signs, "sign config, e.g. (+,+,-,+)");
  gerst_cmd->add_option("--depth", ga.depth, "max conjugator length")->capture_default_str();
  gerst_cmd->add_option("--tolerance", ga.tol, "geometric tolerance")->capture_default_str();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", va.suite, "goldman or bv")
      ->required()
      ->check(CLI::IsMember({"goldman", "bv"}));
  verify_cmd->add_option("--genus", va.genus, "surface genus")->capture_default_str();
  verify_cmd->add_option("--samples", va.samples, "sample count")->capture_default_str();
  verify_cmd->add_option("--seed", va.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--max-len", va.max_len, "class length bound")->capture_default_str();
  verify_cmd->add_option("--signs", va.signs, "sign config for the bv suite");
  verify_cmd->add_option("--depth", va.depth, "max conjugator length")->capture_default_str();
  verify_cmd->add_option("--tolerance", va.tol, "geometric tolerance")->capture_default_str();

  SignsArgs sa;
  auto* signs_cmd = app.add_subcommand("resolve-signs", "search axiom-compatible sign configs");
  signs_cmd->fallthrough();
  signs_cmd->add_option("--genus", sa.genus, "surface genus")->capture_default_str();
  signs_cmd->add_option("--samples", sa.samples, "sample count")->capture_default_str();
  signs_cmd->add_option("--seed", sa.seed, "random seed")->capture_default_str();
  signs_cmd->add_option("--max-len", sa.max_len, "class length bound")->capture_default_str();
  signs_cmd->add_option("--depth", sa.depth, "max conjugator length")->capture_default_str();
  signs_cmd->add_option("--tolerance", sa.tol, "geometric tolerance")->capture_default_str();

  RepArgs ra;
  auto* rep_cmd = app.add_subcommand("rep-check", "validate the Fuchsian representation");
  rep_cmd->fallthrough();
  rep_cmd->add_option("genus", ra.genus, "surface genus")->required();
  rep_cmd->add_option("--tolerance", ra.tol, "geometric tolerance")->capture_default_str();

  try {
    std::vector<const char*> argv;
    argv.push_back("goldman");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (bracket_cmd->parsed()) return do_bracket(ba, json, out);
    if (classes_cmd->parsed()) return do_classes(ca, json, out);
    if (cup_cmd->parsed()) return do_cup(cupa, false, json, out);
    if (delta_cmd->parsed()) return do_delta(da, json, out);
    if (gerst_cmd->parsed()) return do_cup(ga, true, json, out);
    if (verify_cmd->parsed()) return do_verify(va, json, out);
    if (signs_cmd->parsed()) return do_resolve_signs(sa, json, out);
    if (rep_cmd->parsed()) return do_rep_check(ra, json, out);
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    return emit_error("input", e.what(), 2);
  } catch (const InputError& e) {
    return emit_error("input", e.what(), 2);
  } catch (const NonStabilizedError& e) {
    return emit_error("geometry", e.what(), 3);
  } catch (const DegenerateGeometryError& e) {
    return emit_error("geometry", e.what(), 3);
  } catch (const SignResolutionError& e) {
    return emit_error("verification", e.what(), 1);
  } catch (const std::exception& e) {
    return emit_error("internal", e.what(), 2);
  }
}

}  // namespace goldman
