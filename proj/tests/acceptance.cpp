#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "canon4/corpus.hpp"
#include "canon4/correspond.hpp"
#include "canon4/divisors.hpp"
#include "canon4/lattices.hpp"
#include "canon4/singclass.hpp"
#include "canon4/stability.hpp"

using namespace canon4;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Criterion&)>& body) {
  Criterion c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.notes.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    c.ok = false;
    c.notes.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  }
  if (!c.ok) ++failures;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", secs);
  std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << buf << " s)\n";
  for (const auto& n : c.notes) std::cout << "       " << n << "\n";
  std::cout.flush();
}

const CorpusEntry& entry(const std::vector<CorpusEntry>& es, const std::string& name) {
  for (const auto& e : es)
    if (e.name == name) return e;
  throw std::runtime_error("corpus entry missing: " + name);
}

std::vector<std::string> labels(const SingularityReport& rep) {
  std::vector<std::string> out;
  for (const auto& p : rep.points) out.push_back(p.type.str() + "@" + to_string(normalize_point(p.point)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> types(const SingularityReport& rep) {
  std::vector<std::string> out;
  for (const auto& p : rep.points) out.push_back(p.type.str());
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to canon4>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<CorpusEntry> corpus = load_corpus(default_corpus_dir());

  criterion(1, "classification of C_{1,1}, C_D and C_2A5", 10, [&](Criterion& c) {
    SingularityReport ab = classify_scheme(*entry(corpus, "c_ab_generic").scheme);
    c.expect(labels(ab) == std::vector<std::string>{"A3@(1:0:0:0)", "A5@(0:0:0:1)"}, "C_{1,1}: " + join(labels(ab)));
    c.expect(ab.types_at(Location::VertexOfQ).size() == 1, "C_{1,1}: A3 at the vertex");
    SingularityReport d = classify_scheme(*entry(corpus, "c_d").scheme);
    c.expect(types(d) == std::vector<std::string>{"A1", "A1", "A1", "D4", "D4"}, "C_D: " + join(types(d)));
    SingularityReport a5 = classify_scheme(*entry(corpus, "c_2a5").scheme);
    c.expect(types(a5) == std::vector<std::string>{"A5", "A5"} && a5.quadric_rank == 4, "C_2A5: " + join(types(a5)));
  });

  criterion(2, "verdicts with clause citations", 10, [&](Criterion& c) {
    int stable = 0, ss = 0, unstable = 0, total = 0;
    bool a2_vertex = false, simultaneous = false, cl_i = false, cl_ii = false, cl_iii = false;
    for (const auto& e : corpus) {
      if (!e.scheme) continue;
      const TwoThreeScheme& C = *e.scheme;
      SingularityReport rep = classify_scheme(C);
      StabilityVerdict v = git_verdict(rep, rep.quadric_rank, verdict_flags(C, rep));
      const json& want = e.expect["verdict"];
      std::string clause = v.reasons.empty() ? "" : v.reasons[0];
      bool match = to_string(v.status) == want["status"] && clause == want["clause"];
      c.expect(match && !clause.empty(), e.name + ": " + to_string(v.status) + " " + clause);
      if (!match) continue;
      ++total;
      if (v.status == Status::Stable) {
        ++stable;
        a2_vertex |= std::any_of(rep.points.begin(), rep.points.end(), [](const SingularPoint& p) {
          return p.type.is_A(2) && p.location == Location::VertexOfQ;
        });
      } else if (v.status == Status::StrictlySemistable) {
        ++ss;
        cl_i |= clause.rfind("2.i.", 0) == 0;
        cl_ii |= clause.rfind("2.ii.", 0) == 0;
        cl_iii |= clause == "2.iii";
      } else if (v.status == Status::Unstable) {
        ++unstable;
        simultaneous |= rep.has_not_hypersurface();
      }
    }
    std::cout << "       " << total << " verdicts: " << stable << " stable, " << ss << " strictly semistable, " << unstable
              << " unstable\n";
    c.expect(total >= 12, "at least 12 verdicts");
    c.expect(stable >= 4 && a2_vertex, "4 stable including A2 at the vertex");
    c.expect(ss >= 6 && cl_i && cl_ii && cl_iii, "6 strictly semistable covering 2.i, 2.ii, 2.iii");
    c.expect(unstable >= 2 && simultaneous, "2 unstable including a simultaneous-singular pair");
  });

  criterion(3, "cross-validation of certificates over 1+100 frames", 300, [&](Criterion& c) {
    CorpusOptions opt;
    opt.filter = "cross";
    opt.frames = 100;
    opt.seed = 7;
    Report r = run_corpus(opt);
    int certs = 0, zero = 0, none = 0;
    for (const auto& ch : r.checks) {
      c.expect(ch.outcome == Outcome::Pass, ch.entry + " " + ch.name + ": " + ch.computed);
      certs += ch.name == "certificate";
      zero += ch.name == "zero-weight 1-PS";
      none += ch.name.rfind("no certificate in 101", 0) == 0;
    }
    std::cout << "       " << certs << " unstable certificates, " << zero << " zero-weight 1-PS, " << none
              << " stable exemplars without certificate\n";
    c.expect(certs >= 2 && zero >= 5 && none >= 4, "coverage");
  });

  criterion(4, "200 random F_101 instances, singular counts agree", 120, [&](Criterion& c) {
    std::mt19937_64 rng(7);
    int tested = 0, mismatches = 0, skipped = 0;
    while (tested < 200 && tested + skipped < 800) {
      RandomInstance inst = random_fp_instance(rng, 101);
      bool line = false;
      auto sx = cubic_singular_scan(curve_to_cubic(inst.C), 101, line);
      if (line) {
        ++skipped;
        continue;
      }
      auto sc = singular_points_scan(inst.C, 101);
      ++tested;
      mismatches += sc.size() != sx.size();
    }
    std::cout << "       " << tested << " tested, " << mismatches << " mismatches, " << skipped << " skipped\n";
    c.expect(tested >= 200, "200 instances");
    c.expect(mismatches == 0, "zero mismatches");
  });

  criterion(5, "Chow form degree, incidence, Mumford and Schubert numerics", 0, [&](Criterion& c) {
    std::vector<std::pair<const TwoThreeScheme*, ChowForm>> forms;
    for (const auto& e : corpus)
      if (e.scheme) {
        ChowForm R = chow_form(*e.scheme);
        c.expect(R.degree == 6, e.name + " degree " + std::to_string(R.degree));
        if (!e.scheme->field) forms.emplace_back(&*e.scheme, std::move(R));
      }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-6, 6);
    int lines = 0, agree = 0, meeting = 0;
    for (std::size_t k = 0; lines < 100; ++k) {
      const auto& [C, R] = forms[k % forms.size()];
      std::vector<Rational> a(4), b(4);
      for (auto& x : b) x = small(rng);
      if (k % 2 == 0) {
        a = (k / 2) % 2 ? std::vector<Rational>{0, 0, 0, 1} : std::vector<Rational>{1, 0, 0, 0};
      } else {
        for (auto& x : a) x = small(rng);
      }
      auto p = plucker_point(a, b);
      if (std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; })) continue;
      bool oracle = line_meets_curve(*C, a, b);
      ++lines;
      meeting += oracle;
      agree += oracle == (R.R.evaluate(p) == 0);
    }
    std::cout << "       incidence " << agree << "/" << lines << " (" << meeting << " meeting)\n";
    c.expect(agree == lines, "incidence oracle");
    c.expect(meeting > 0 && meeting < lines, "both outcomes exercised");
    Rational m = mumford_rhs(1, 3, 6, OnePS::r_weights({0, 1, 1, 1}));
    c.expect(m == 9, "mumford_rhs = " + to_string(m));
    c.expect(schubert_surviving_splits() == std::vector<std::pair<int, int>>{{3, 3}}, "only d1 = d2 = 3 survives");
    SchubertBound b = schubert_bound(3, 3);
    c.expect(!b.exceeds && b.bound == 9, "bound at (3,3)");
  });

  criterion(6, "lattices: roots, Borcherds, cusps, Heegner, order-3 isometries", 60, [&](Criterion& c) {
    const std::vector<std::pair<const char*, std::size_t>> counts{{"A2", 6}, {"D4", 24}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
    for (auto [n, k] : counts) c.expect(roots(make_lattice(n)).size() == k, std::string(n) + " roots");
    auto rows = borcherds_orders();
    std::vector<std::string> v, co;
    for (const auto& r : rows) {
      v.push_back(to_string(r.vanishing));
      co.push_back(to_string(r.coefficient));
    }
    c.expect(v == std::vector<std::string>{"3", "9", "84"}, "vanishing orders " + join(v));
    c.expect(co == std::vector<std::string>{"1", "9/2", "14"}, "coefficients " + join(co));
    c.expect(rows[0].flagged && rows[0].stated_vanishing == "2" && !rows[1].flagged && !rows[2].flagged,
             "A2 row flagged against the stated 2");
    std::vector<std::string> cusps;
    for (const auto& cu : cusp_invariants()) {
      cusps.push_back(cu.complement.label());
      c.expect(cu.complement.label() == cu.expected, "cusp " + cu.case_name);
    }
    c.expect(cusps == std::vector<std::string>{"A2^2+E6^2", "A2+E6+E8", "E8^2"}, "cusp labels " + join(cusps));
    std::vector<std::string> heeg;
    for (const auto& h : heegner_types()) {
      heeg.push_back(h.system.label());
      c.expect(h.system.label() == h.expected && h.contains_r && h.eisenstein, h.name);
    }
    c.expect(heeg == std::vector<std::string>{"D4+E6", "A2^2+E6", "A2+E8"}, "Heegner triple " + join(heeg));
    for (const char* n : {"A2", "D4", "E6", "E8"}) {
      Lattice L = make_lattice(n);
      FpfResult r = fpf_order3(L);
      c.expect(r.outcome == FpfOutcome::Found && r.rho && check_isometry(L.gram, *r.rho).all(), std::string("fpf on ") + n);
    }
    for (const char* n : {"A1", "A3", "A4"})
      c.expect(fpf_order3(make_lattice(n)).outcome == FpfOutcome::Nonexistent, std::string("no fpf on ") + n);
  });

  criterion(7, "divisor classes and the alpha computation", 1, [&](Criterion& c) {
    PEConstants k = pe_constants();
    c.expect(k.get("K").str() == "-14eta-16h" && k.get("V").str() == "4eta+0h" && k.get("Sigma").str() == "33eta+34h" &&
                 k.get("lambda").str() == "4eta+4h" && k.get("delta").str() == "33eta+34h",
             "constants");
    c.expect(pencil_singular_count(PencilConfig::FixedQuadric).singular_fibers == 34, "quadric pencil 34");
    c.expect(pencil_singular_count(PencilConfig::FixedCubic).singular_fibers == 33, "cubic pencil 33");
    c.expect(convert(parse_pe_class("9l-1d"), PEBasis::EtaH).str() == "3eta+2h", "9l-d to 3eta+2h");
    c.expect(proportional(parse_pe_class("Sigma+9/2V"), parse_pe_class("9l-1d")), "Sigma + 9/2 V proportional");
    TestCurveSolution t = test_curve_constraints();
    c.expect(t.b1 == 3 && t.b2 == 3, "b1 = b2 = 3 derived");
    auto a = hassett_keel_alpha({9, 1, 1, 1});
    c.expect(a && *a == Rational(5) / 9, "alpha(9,1,1,1) = 5/9");
    auto adj = hassett_keel_alpha(t.adjusted());
    c.expect(adj && *adj == Rational(5) / 9, "alpha of the adjusted pullback");
  });

  criterion(8, "corpus run --seed 7 is byte-identical across runs", 0, [&](Criterion& c) {
    auto dir = std::filesystem::temp_directory_path();
    std::string a = (dir / "canon4_acc_a.json").string(), b = (dir / "canon4_acc_b.json").string();
    for (const auto& out : {a, b}) {
      std::string cmd = "\"" + cli + "\" corpus run --seed 7 --quiet --json \"" + out + "\"";
      int rc = std::system(cmd.c_str());
      c.expect(rc != -1 && WEXITSTATUS(rc) != 1, "corpus run exits without failures");
    }
    std::string ja = slurp(a), jb = slurp(b);
    c.expect(!ja.empty() && ja == jb, "identical JSON");
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria pass\n");
  return failures ? 1 : 0;
}
