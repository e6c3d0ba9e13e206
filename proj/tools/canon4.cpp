#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "canon4/corpus.hpp"
#include "canon4/correspond.hpp"
#include "canon4/divisors.hpp"
#include "canon4/lattices.hpp"
#include "canon4/polyio.hpp"
#include "canon4/singclass.hpp"
#include "canon4/stability.hpp"

using namespace canon4;

namespace {

// Accepts a bare payload or a corpus entry wrapping one.
json payload_of(const std::string& path) {
  json j = load_json_file(path);
  return j.contains("payload") ? j["payload"] : j;
}

template <class Fn>
auto with_path(const std::string& path, Fn fn) {
  try {
    return fn(payload_of(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what());
  }
}

TwoThreeScheme load_scheme(const std::string& path) { return with_path(path, parse_scheme); }
CubicThreefold load_cubic(const std::string& path) { return with_path(path, parse_cubic); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json type_list(const std::vector<SingType>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(t.str());
  return a;
}

json verdict_json(const StabilityVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["clause"] = v.reasons.empty() ? "" : v.reasons[0];
  json r = json::array();
  for (std::size_t i = 1; i < v.reasons.size(); ++i) r.push_back(v.reasons[i]);
  j["reasons"] = r;
  if (v.minimal_orbit) j["orbit"] = *v.minimal_orbit;
  if (v.certificate) j["certificate"] = v.certificate->str();
  return j;
}

json report_json(const SingularityReport& rep) {
  json j;
  j["quadric_rank"] = rep.quadric_rank;
  j["complete_intersection"] = rep.complete_intersection;
  j["non_isolated"] = rep.non_isolated;
  j["complete"] = rep.complete;
  json pts = json::array();
  for (const auto& p : rep.points) {
    json e{{"type", p.type.str()}, {"point", point_to_json(normalize_point(p.point))}, {"location", to_string(p.location)}};
    if (p.plane_component) e["plane_component"] = to_string(*p.plane_component);
    pts.push_back(e);
  }
  j["singularities"] = pts;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

json fp_points(const std::vector<FpPoint>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

json certificate_json(const std::optional<Certificate>& c) {
  if (!c) return nullptr;
  return json{{"w", c->w.str()},
              {"convention", to_string(c->w.tag)},
              {"frame_index", c->frame_index},
              {"frame", matrix_to_json(c->frame)},
              {"min_weight", to_string(c->min_weight)}};
}

json root_json(const Lattice& L) {
  RootSystem rs = root_system(L);
  return json{{"lattice", L.blocks.empty() ? "" : [&] {
                 std::string s;
                 for (const auto& b : L.blocks) s += (s.empty() ? "" : "+") + b;
                 return s;
               }()},
              {"rank", L.rank()},
              {"roots", rs.root_count},
              {"root_system", rs.label()}};
}

std::string int_list(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

M4Class parse_m4(const std::string& s) {
  std::vector<Rational> xs;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    xs.push_back(parse_rational(s.substr(start, end - start)));
    start = end + 1;
  }
  if (xs.size() != 4) throw ParseError("expected a,b0,b1,b2 but got " + std::to_string(xs.size()) + " numbers");
  return {xs[0], xs[1], xs[2], xs[3]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canon4: (2,3) complete intersections, cubic threefolds and their GIT and lattice invariants"};
  app.require_subcommand(1);
  int rc = 0;

  // sing
  auto* sing = app.add_subcommand("sing", "singularities of a (2,3) scheme");
  sing->require_subcommand(1);
  std::string scheme_path, cubic_path;
  std::uint32_t prime = 0;
  int jet = kDefaultJet;
  auto* classify = sing->add_subcommand("classify", "exact singular points with ADE types");
  classify->add_option("--scheme", scheme_path, "scheme JSON")->required();
  classify->add_option("--prime", prime, "scan prime");
  classify->add_option("--jet", jet, "jet bound");
  classify->callback([&] {
    ClassifyOptions opt;
    if (prime) opt.primes = {prime};
    opt.J = jet;
    print(report_json(classify_scheme(load_scheme(scheme_path), opt)));
  });
  auto* scan = sing->add_subcommand("scan", "singular F_p points");
  scan->add_option("--scheme", scheme_path, "scheme JSON")->required();
  scan->add_option("--prime", prime, "prime")->default_val(101);
  scan->callback([&] {
    auto pts = singular_points_scan(load_scheme(scheme_path), prime);
    print(json{{"prime", prime}, {"count", pts.size()}, {"points", fp_points(pts)}});
  });

  // stab
  auto* stab = app.add_subcommand("stab", "GIT stability");
  stab->require_subcommand(1);
  int frames = 100;
  std::uint64_t seed = 7;
  auto* verdict = stab->add_subcommand("verdict", "stability of a (2,3) scheme");
  verdict->add_option("--scheme", scheme_path, "scheme JSON")->required();
  verdict->callback([&] {
    TwoThreeScheme C = load_scheme(scheme_path);
    SingularityReport rep = classify_scheme(C);
    json j = report_json(rep);
    j["verdict"] = verdict_json(git_verdict(rep, rep.quadric_rank, verdict_flags(C, rep)));
    print(j);
  });
  auto* cubic = stab->add_subcommand("cubic", "stability of a cubic threefold");
  cubic->add_option("--cubic", cubic_path, "cubic JSON")->required();
  cubic->callback([&] {
    CubicAnalysis an = analyze_cubic(load_cubic(cubic_path));
    json pts = json::array();
    for (const auto& [p, t] : an.points) pts.push_back(json{{"type", t.str()}, {"point", point_to_json(normalize_point(p))}});
    json j{{"types", type_list(an.data.types)}, {"points", pts}, {"non_isolated", an.data.non_isolated}};
    if (an.data.chordal) j["chordal"] = *an.data.chordal;
    j["verdict"] = verdict_json(allcock_verdict(an.data));
    if (!an.notes.empty()) j["notes"] = an.notes;
    print(j);
  });
  auto* destab = stab->add_subcommand("destabilize", "search for a destabilizing 1-PS");
  destab->add_option("--cubic", cubic_path, "cubic JSON")->required();
  destab->add_option("--frames", frames, "random frames besides the given one");
  destab->add_option("--seed", seed, "frame seed");
  destab->callback([&] {
    CubicThreefold X = load_cubic(cubic_path);
    auto c = destabilize_search(X.F, SearchOptions{frames, seed, {}});
    json j{{"frames_searched", 1 + frames}, {"certificate", certificate_json(c)}};
    auto z = zero_weight_1ps(X.F);
    j["zero_weight_1ps"] = z ? json(z->str()) : json(nullptr);
    print(j);
  });
  auto* chowcmd = stab->add_subcommand("chowform", "Chow form of the curve");
  chowcmd->add_option("--scheme", scheme_path, "scheme JSON")->required();
  chowcmd->callback([&] {
    ChowForm R = chow_form(load_scheme(scheme_path));
    json j{{"degree", R.degree}, {"terms", R.R.terms().size()}, {"variables", plucker_vars()}};
    j["certificate"] = certificate_json(destabilize_chow(R));
    j["form"] = poly_to_json(R.R);
    print(j);
  });

  // lat
  auto* lat = app.add_subcommand("lat", "lattices and the ball quotient");
  lat->require_subcommand(1);
  std::string expr;
  auto* lroots = lat->add_subcommand("roots", "roots and root system");
  lroots->add_option("lattice", expr, "e.g. \"E8+A2\"")->required();
  lroots->callback([&] { print(root_json(make_lattice(expr))); });
  auto* ldisc = lat->add_subcommand("disc", "discriminant group");
  ldisc->add_option("lattice", expr, "e.g. \"U(3)+E8\"")->required();
  ldisc->callback([&] {
    Lattice L = make_lattice(expr);
    auto d = discriminant_group(L);
    Integer order = 1;
    for (const auto& x : d) order *= x;
    print(json{{"lattice", expr}, {"invariants", int_list(d)}, {"order", to_string(order)}});
  });
  auto* lfpf = lat->add_subcommand("fpf", "fixed-point-free isometry of order 3");
  lfpf->add_option("lattice", expr, "e.g. \"E6\"")->required();
  lfpf->callback([&] {
    Lattice L = make_lattice(expr);
    FpfResult r = fpf_order3(L);
    json j{{"lattice", expr}, {"outcome", to_string(r.outcome)}, {"method", r.method}, {"certificate", r.certificate}};
    if (r.rho) {
      j["rho"] = matrix_to_json(*r.rho);
      j["checks_pass"] = check_isometry(L.gram, *r.rho).all();
    }
    print(j);
    if (r.outcome == FpfOutcome::Inconclusive) rc = 1;
  });
  auto* lcusps = lat->add_subcommand("cusps", "one-dimensional cusp labels");
  lcusps->callback([&] {
    json a = json::array();
    for (const auto& c : cusp_invariants())
      a.push_back(json{{"case", c.case_name},
                       {"ambient", c.ambient},
                       {"placement", c.placement},
                       {"label", c.complement.label()},
                       {"expected", c.expected},
                       {"meets_H_h", c.meets_hh}});
    print(a);
  });
  auto* lbor = lat->add_subcommand("borcherds", "vanishing orders and divisor coefficients");
  lbor->callback([&] {
    json a = json::array();
    for (const auto& b : borcherds_orders()) {
      json e{{"divisor", b.name},
             {"roots_M_perp", b.roots_mperp},
             {"roots_R", b.roots_r},
             {"vanishing", to_string(b.vanishing)},
             {"stated_vanishing", b.stated_vanishing},
             {"ramification", b.ramification},
             {"coefficient", to_string(b.coefficient)},
             {"flagged", b.flagged}};
      if (!b.note.empty()) e["note"] = b.note;
      a.push_back(e);
    }
    print(a);
  });
  auto* lheeg = lat->add_subcommand("heegner", "Heegner divisor types");
  lheeg->callback([&] {
    json a = json::array();
    for (const auto& h : heegner_types())
      a.push_back(json{{"divisor", h.name},
                       {"M_perp", h.expr},
                       {"root_system", h.system.label()},
                       {"expected", h.expected},
                       {"roots_M_perp", h.roots_mperp},
                       {"roots_R", h.roots_r},
                       {"contains_R", h.contains_r},
                       {"eisenstein", h.eisenstein}});
    print(a);
  });

  // div
  auto* div = app.add_subcommand("div", "divisor classes");
  div->require_subcommand(1);
  std::string cls, to = "eta-h", config;
  auto* dconst = div->add_subcommand("constants", "classes on the moduli of cubic threefolds");
  dconst->callback([&] {
    PEConstants k = pe_constants();
    json t;
    for (const auto& [n, c] : k.table) t[n] = c.str();
    t["eta"] = k.eta.str();
    t["h"] = k.h.str();
    print(t);
  });
  auto* dconv = div->add_subcommand("convert", "change basis between (lambda, delta) and (eta, h)");
  dconv->add_option("--class", cls, "e.g. \"9l-1d\"")->required();
  dconv->add_option("--to", to, "eta-h or lambda-delta")->check(CLI::IsMember({"eta-h", "lambda-delta"}));
  dconv->callback([&] {
    PEClass c = parse_pe_class(cls);
    PEClass out = convert(c, to == "eta-h" ? PEBasis::EtaH : PEBasis::LambdaDelta);
    print(json{{"input", c.str()}, {"output", out.str()}});
  });
  auto* dpencil = div->add_subcommand("pencil", "singular fibres of a test pencil");
  dpencil->add_option("--config", config, "quadric or cubic")->required();
  dpencil->callback([&] {
    PencilCount p = pencil_singular_count(parse_pencil_config(config));
    print(json{{"euler_surface", p.euler_surface},
               {"base_points", p.base_points},
               {"base_point_product", p.base_point_product},
               {"euler_fiber", p.euler_fiber},
               {"singular_fibers", p.singular_fibers}});
  });
  auto* dalpha = div->add_subcommand("alpha", "log canonical parameter of a class on M4");
  dalpha->add_option("--class", cls, "a,b0,b1,b2")->required();
  dalpha->callback([&] {
    M4Class m = parse_m4(cls);
    auto a = hassett_keel_alpha(m);
    print(json{{"class", m.str()}, {"alpha", a ? json(to_string(*a)) : json(nullptr)}});
    if (!a) rc = 1;
  });
  auto* dtest = div->add_subcommand("testcurves", "solve the test curve constraints");
  dtest->callback([&] {
    TestCurveSolution t = test_curve_constraints();
    json rp = json::array();
    for (const auto& x : t.reduced_pullback) rp.push_back(to_string(x));
    auto a = hassett_keel_alpha(t.adjusted());
    print(json{{"pullback", t.pullback().str()},
               {"reduced_pullback_omega_lambda_delta1", rp},
               {"adjusted", t.adjusted().str()},
               {"alpha", a ? json(to_string(*a)) : json(nullptr)}});
  });

  // corpus
  auto* corpus = app.add_subcommand("corpus", "the validation corpus");
  corpus->require_subcommand(1);
  CorpusOptions copt;
  std::string json_out;
  bool quiet = false;
  auto* run = corpus->add_subcommand("run", "run every check and report");
  run->add_option("--dir", copt.dir, "corpus directory");
  run->add_option("--filter", copt.filter, "group or entry name");
  run->add_option("--seed", copt.seed, "seed for frames, random instances and lines");
  run->add_option("--frames", copt.frames, "random frames per certificate search");
  run->add_option("--instances", copt.random_instances, "random F_101 instances");
  run->add_option("--lines", copt.random_lines, "random lines per curve");
  run->add_option("--json", json_out, "write the JSON report here");
  run->add_flag("--quiet", quiet, "suppress the text report");
  run->callback([&] {
    Report r = run_corpus(copt);
    json j = r.to_json();
    j["seed"] = copt.seed;
    j["filter"] = copt.filter;
    if (!json_out.empty()) {
      std::ofstream out(json_out);
      if (!out) throw ParseError("cannot write " + json_out);
      out << j.dump(2) << "\n";
    }
    if (!quiet) std::cout << r.text();
    rc = r.exit_code();
  });
  std::string canon_dir;
  auto* canon = corpus->add_subcommand("canonicalize", "rewrite payloads through parse and emit");
  canon->add_option("dir", canon_dir, "corpus directory")->required();
  canon->callback([&] {
    for (const auto& de : std::filesystem::directory_iterator(canon_dir)) {
      if (de.path().extension() != ".json") continue;
      json c = canonical_entry(load_json_file(de.path().string()));
      std::ofstream(de.path()) << c.dump(2) << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
