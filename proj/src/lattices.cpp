#include "canon4/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "canon4/exactalg.hpp"
#include "canon4/polyio.hpp"

namespace canon4 {

namespace {

IntMatrix cartan(char family, int n) {
  IntMatrix C(n, n);
  for (int i = 0; i < n; ++i) C(i, i) = 2;
  auto edge = [&](int a, int b) {
    C(a, b) = -1;
    C(b, a) = -1;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'D':
      for (int i = 0; i + 3 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 2);
      edge(n - 3, n - 1);
      break;
    case 'E':
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    default:
      throw MathError("unknown root lattice family");
  }
  return C;
}

Lattice block_lattice(const std::string& name, IntMatrix gram) {
  Lattice L;
  L.gram = std::move(gram);
  L.blocks = {name};
  L.block_ranks = {L.gram.rows()};
  return L;
}

Lattice parse_term(const std::string& term) {
  static const std::regex root_re(R"(^([ADE])(?:\((\d+)\)|(\d+))(?:\((\d+)\))?(?:\^(\d+))?$)");
  static const std::regex u_re(R"(^U(?:\((\d+)\))?(?:\^(\d+))?$)");
  std::smatch m;
  Lattice base;
  int scale = 1, reps = 1;
  std::string name;
  if (std::regex_match(term, m, root_re)) {
    char fam = m[1].str()[0];
    int n = std::stoi(m[2].matched ? m[2].str() : m[3].str());
    bool ok = (fam == 'A' && n >= 1) || (fam == 'D' && n >= 4) || (fam == 'E' && n >= 6 && n <= 8);
    if (!ok) throw ParseError("unknown constructor '" + term + "'");
    if (m[4].matched) scale = std::stoi(m[4].str());
    if (m[5].matched) reps = std::stoi(m[5].str());
    name = std::string(1, fam) + std::to_string(n);
    IntMatrix C = cartan(fam, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) C(i, j) = -C(i, j);
    base = block_lattice(name, C);
  } else if (std::regex_match(term, m, u_re)) {
    if (m[1].matched) scale = std::stoi(m[1].str());
    if (m[2].matched) reps = std::stoi(m[2].str());
    name = "U";
    base = block_lattice(name, IntMatrix{{Integer(0), Integer(1)}, {Integer(1), Integer(0)}});
  } else {
    throw ParseError("unknown constructor '" + term + "'");
  }
  if (scale < 1 || reps < 1) throw ParseError("bad multiplier in '" + term + "'");
  if (scale != 1) {
    for (int i = 0; i < base.rank(); ++i)
      for (int j = 0; j < base.rank(); ++j) base.gram(i, j) *= scale;
    base.blocks[0] = name + "(" + std::to_string(scale) + ")";
  }
  std::vector<Lattice> copies(reps, base);
  return direct_sum(copies);
}

std::vector<std::vector<Rational>> ldl_upper(const IntMatrix& G, bool& definite) {
  int n = G.rows();
  std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = Rational(G(i, j));
  definite = true;
  for (int i = 0; i < n; ++i) {
    if (sgn(q[i][i]) <= 0) {
      definite = false;
      return q;
    }
    for (int j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (int k = i + 1; k < n; ++k)
      for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  return q;
}

long long norm_of(const IntMatrix& G, const LVec& x) {
  long long s = 0;
  int n = G.rows();
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n; ++j)
      if (x[j]) s += x[i] * x[j] * G(i, j).get_si();
  }
  return s;
}

long long pair_of(const IntMatrix& G, const LVec& a, const LVec& b) {
  long long s = 0;
  int n = G.rows();
  for (int i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < n; ++j)
      if (b[j]) s += a[i] * b[j] * G(i, j).get_si();
  }
  return s;
}

IntMatrix neg(const IntMatrix& M) {
  IntMatrix out = M;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) out(i, j) = -M(i, j);
  return out;
}

IntMatrix power(const IntMatrix& M, int k) {
  IntMatrix out = IntMatrix::identity(M.rows());
  for (int i = 0; i < k; ++i) out = out * M;
  return out;
}

IntMatrix block_diag(const std::vector<IntMatrix>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.rows();
  IntMatrix out(n, n);
  int off = 0;
  for (const auto& p : parts) {
    for (int i = 0; i < p.rows(); ++i)
      for (int j = 0; j < p.cols(); ++j) out(off + i, off + j) = p(i, j);
    off += p.rows();
  }
  return out;
}

IntMatrix rows_matrix(const std::vector<LVec>& rows, int n) {
  IntMatrix M(static_cast<int>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) M(static_cast<int>(i), j) = Integer(static_cast<long>(rows[i][j]));
  return M;
}

std::vector<LVec> unit_rows(int n, const std::vector<int>& idx) {
  std::vector<LVec> out;
  for (int i : idx) {
    LVec v(n, 0);
    v[i] = 1;
    out.push_back(v);
  }
  return out;
}

Embedding verified(const std::string& name, const std::string& ambient, const std::string& sub,
                   const std::vector<LVec>& rows) {
  Lattice A = make_lattice(ambient);
  Embedding e{name, rows_matrix(rows, A.rank())};
  if (restricted_gram(A, e.rows) != make_lattice(sub).gram)
    throw MathError("embedding " + name + " does not restrict to the Gram of " + sub);
  return e;
}

struct AutSearch {
  const IntMatrix& G;
  long long limit;
  bool stop_at_first;
  int n;
  std::vector<std::vector<LVec>> cand;
  std::vector<LVec> img;
  long long nodes = 0, total = 0;
  bool aborted = false;
  std::optional<IntMatrix> found;

  AutSearch(const IntMatrix& g, long long lim, bool first) : G(g), limit(lim), stop_at_first(first), n(g.rows()) {
    std::map<long long, std::vector<LVec>> by_norm;
    for (int i = 0; i < n; ++i) {
      long long d = G(i, i).get_si();
      if (!by_norm.count(d)) by_norm[d] = short_vectors(G, d);
      cand.push_back(by_norm[d]);
    }
    img.resize(n);
  }

  bool done() const { return aborted || (stop_at_first && found); }

  void run(int i) {
    if (done()) return;
    if (i == n) {
      ++total;
      IntMatrix rho(n, n);
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) rho(r, c) = Integer(static_cast<long>(img[c][r]));
      if (check_isometry(G, rho).all() && !found) found = rho;
      return;
    }
    for (const auto& v : cand[i]) {
      if (++nodes > limit) {
        aborted = true;
        return;
      }
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = pair_of(G, v, img[j]) == G(i, j).get_si();
      if (!ok) continue;
      img[i] = v;
      run(i + 1);
      if (done()) return;
    }
  }
};

FpfResult search_fpf(const IntMatrix& G, const FpfOptions& opt, bool exhaustive) {
  AutSearch s(G, opt.node_limit, !exhaustive);
  s.run(0);
  FpfResult r;
  r.automorphisms_seen = s.total;
  if (s.found) {
    r.outcome = FpfOutcome::Found;
    r.rho = s.found;
    r.method = "automorphism search";
    return r;
  }
  if (s.aborted) {
    r.outcome = FpfOutcome::Inconclusive;
    r.method = "automorphism search";
    r.certificate = "node limit reached";
    return r;
  }
  r.outcome = FpfOutcome::Nonexistent;
  r.method = "exhaustive automorphism search";
  r.certificate = "|Aut| = " + std::to_string(s.total) + ", none of order 3 without fixed vectors";
  return r;
}

std::optional<IntMatrix> known_rho(const std::string& block, const FpfOptions& opt) {
  if (block == "A2") return IntMatrix{{Integer(0), Integer(-1)}, {Integer(1), Integer(-1)}};
  if (block == "E6") return power(coxeter_element(cartan('E', 6)), 4);
  if (block == "E8") return power(coxeter_element(cartan('E', 8)), 10);
  if (block == "D4") {
    FpfResult r = search_fpf(cartan('D', 4), opt, false);
    if (r.outcome == FpfOutcome::Found) return r.rho;
  }
  return std::nullopt;
}

}  // namespace

Lattice Lattice::flipped() const {
  Lattice L = *this;
  L.gram = neg(gram);
  L.sign = sign == Sign::Negative ? Sign::Positive : Sign::Negative;
  return L;
}

IntMatrix Lattice::positive_gram() const {
  IntMatrix G = sign == Sign::Negative ? neg(gram) : gram;
  if (!is_positive_definite(G)) throw MathError("lattice is not definite");
  return G;
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  Lattice L;
  std::vector<IntMatrix> grams;
  for (const auto& p : parts) {
    if (!parts.empty() && p.sign != parts[0].sign) throw MathError("direct sum of mixed sign conventions");
    grams.push_back(p.gram);
    L.blocks.insert(L.blocks.end(), p.blocks.begin(), p.blocks.end());
    L.block_ranks.insert(L.block_ranks.end(), p.block_ranks.begin(), p.block_ranks.end());
  }
  if (!parts.empty()) L.sign = parts[0].sign;
  L.gram = block_diag(grams);
  return L;
}

Lattice make_lattice(const std::string& expr, Sign sign) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty lattice expression");
  std::vector<Lattice> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t plus = s.find('+', start);
    std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (term.empty()) throw ParseError("empty summand at position " + std::to_string(start));
    parts.push_back(parse_term(term));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  Lattice L = direct_sum(parts);
  return sign == Sign::Negative ? L : L.flipped();
}

bool is_positive_definite(const IntMatrix& G) {
  bool definite = false;
  ldl_upper(G, definite);
  return definite;
}

std::vector<LVec> short_vectors(const IntMatrix& G, long long norm) {
  int n = G.rows();
  bool definite = false;
  auto q = ldl_upper(G, definite);
  if (!definite) throw MathError("enumeration requires a definite form");
  std::vector<LVec> out;
  if (n == 0) return out;
  LVec x(n, 0);
  std::vector<Rational> budget(n + 1);
  budget[n] = Rational(static_cast<long>(norm));
  std::function<void(int)> rec = [&](int i) {
    Rational c = 0;
    for (int j = i + 1; j < n; ++j)
      if (x[j]) c -= q[i][j] * Rational(static_cast<long>(x[j]));
    const Rational& T = budget[i + 1];
    double r = std::sqrt(std::max(0.0, Rational(T / q[i][i]).get_d()));
    long long lo = static_cast<long long>(std::floor(c.get_d() - r)) - 1;
    long long hi = static_cast<long long>(std::ceil(c.get_d() + r)) + 1;
    for (long long v = lo; v <= hi; ++v) {
      Rational d = Rational(static_cast<long>(v)) - c;
      Rational used = q[i][i] * d * d;
      if (used > T) continue;
      x[i] = v;
      budget[i] = T - used;
      if (i == 0) {
        bool nz = std::any_of(x.begin(), x.end(), [](long long t) { return t != 0; });
        if (nz && norm_of(G, x) == norm) out.push_back(x);
      } else {
        rec(i - 1);
      }
    }
    x[i] = 0;
  };
  rec(n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LVec> roots(const Lattice& L) { return short_vectors(L.positive_gram(), 2); }

int classical_root_count(char family, int rank) {
  switch (family) {
    case 'A':
      return rank >= 1 ? rank * (rank + 1) : -1;
    case 'D':
      return rank >= 4 ? 2 * rank * (rank - 1) : -1;
    case 'E':
      return rank == 6 ? 72 : rank == 7 ? 126 : rank == 8 ? 240 : -1;
    default:
      return -1;
  }
}

std::string RootComponent::str() const {
  if (family == '?') return "?" + std::to_string(rank) + "[" + std::to_string(root_count) + "]";
  return std::string(1, family) + std::to_string(rank);
}

bool RootSystem::has_unknown() const {
  return std::any_of(components.begin(), components.end(), [](const RootComponent& c) { return c.family == '?'; });
}

std::string RootSystem::label() const {
  if (components.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j].str() == components[i].str()) ++j;
    if (!out.empty()) out += "+";
    out += components[i].str();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

RootSystem root_system(const Lattice& L) {
  IntMatrix G = L.positive_gram();
  auto R = short_vectors(G, 2);
  int m = static_cast<int>(R.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (pair_of(G, R[a], R[b]) != 0) parent[find(a)] = find(b);
  std::map<int, std::vector<int>> comps;
  for (int a = 0; a < m; ++a) comps[find(a)].push_back(a);
  RootSystem rs;
  rs.root_count = m;
  for (const auto& [root, members] : comps) {
    RatMatrix span(static_cast<int>(members.size()), L.rank());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int j = 0; j < L.rank(); ++j) span(static_cast<int>(i), j) = Rational(static_cast<long>(R[members[i]][j]));
    RootComponent c;
    c.rank = rank(span);
    c.root_count = static_cast<int>(members.size());
    for (char f : {'A', 'D', 'E'})
      if (classical_root_count(f, c.rank) == c.root_count) {
        c.family = f;
        break;
      }
    rs.components.push_back(c);
  }
  auto key = [](const RootComponent& c) {
    int f = c.family == 'A' ? 0 : c.family == 'D' ? 1 : c.family == 'E' ? 2 : 3;
    return std::make_tuple(f, c.rank, c.root_count);
  };
  std::sort(rs.components.begin(), rs.components.end(),
            [&](const RootComponent& a, const RootComponent& b) { return key(a) < key(b); });
  return rs;
}

std::vector<Integer> discriminant_group(const Lattice& L) {
  std::vector<Integer> out;
  for (const auto& d : smith_normal_form(L.gram).diagonal()) {
    if (sgn(d) == 0) throw MathError("degenerate Gram matrix");
    Integer a = abs(d);
    if (a != 1) out.push_back(a);
  }
  return out;
}

IntMatrix restricted_gram(const Lattice& ambient, const IntMatrix& S) {
  return S * ambient.gram * S.transpose();
}

Complement orthogonal_complement(const Lattice& ambient, const IntMatrix& S) {
  int n = ambient.rank();
  if (S.cols() != n) throw MathError("sublattice vectors have the wrong length");
  if (rank(to_rat(S)) != S.rows()) throw MathError("sublattice vectors are dependent");
  Complement c;
  for (const auto& d : smith_normal_form(S).diagonal())
    if (abs(d) != 1) c.saturated = false;
  SmithForm sf = smith_normal_form(S * ambient.gram);
  int r = 0;
  for (const auto& d : sf.diagonal())
    if (sgn(d) != 0) ++r;
  c.basis = IntMatrix(n - r, n);
  for (int k = r; k < n; ++k)
    for (int i = 0; i < n; ++i) c.basis(k - r, i) = sf.V(i, k);
  c.lattice.sign = ambient.sign;
  c.lattice.gram = restricted_gram(ambient, c.basis);
  return c;
}

std::vector<Rational> characteristic_polynomial(const IntMatrix& M) {
  int n = M.rows();
  RatMatrix A = to_rat(M), Mk(n, n);
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    RatMatrix next = A * Mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    Mk = next;
    RatMatrix AM = A * Mk;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / k;
  }
  std::reverse(c.begin(), c.end());
  return c;
}

IsometryChecks check_isometry(const IntMatrix& G, const IntMatrix& rho) {
  IsometryChecks chk;
  int n = G.rows();
  chk.preserves_form = rho.transpose() * G * rho == G;
  chk.order3 = rho * rho * rho == IntMatrix::identity(n);
  chk.fixed_point_free = sgn(det_bareiss(rho - IntMatrix::identity(n))) != 0;
  if (n % 2 == 0) {
    std::vector<Rational> expect{Rational(1)};
    for (int k = 0; k < n / 2; ++k) {
      std::vector<Rational> next(expect.size() + 2);
      for (std::size_t i = 0; i < expect.size(); ++i)
        for (int j = 0; j < 3; ++j) next[i + j] += expect[i];
      expect = next;
    }
    chk.charpoly_ok = characteristic_polynomial(rho) == expect;
  }
  return chk;
}

IntMatrix coxeter_element(const IntMatrix& C) {
  int n = C.rows();
  IntMatrix c = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (int j = 0; j < n; ++j) s(i, j) -= C(i, j);
    c = c * s;
  }
  return c;
}

std::string to_string(FpfOutcome o) {
  switch (o) {
    case FpfOutcome::Found:
      return "found";
    case FpfOutcome::Nonexistent:
      return "nonexistent";
    default:
      return "inconclusive";
  }
}

FpfResult fpf_order3(const Lattice& L, const FpfOptions& opt) {
  FpfResult r;
  IntMatrix G;
  try {
    G = L.positive_gram();
  } catch (const MathError&) {
    r.method = "none";
    r.certificate = "form is not definite";
    return r;
  }
  int n = L.rank();
  if (n % 2 == 1) {
    r.outcome = FpfOutcome::Nonexistent;
    r.method = "parity";
    r.certificate = "rank " + std::to_string(n) + " is odd; a fixed-point-free order-3 isometry has characteristic polynomial (x^2+x+1)^(rank/2)";
    return r;
  }
  static const std::vector<std::string> known{"A2", "D4", "E6", "E8"};
  bool blockwise = !L.blocks.empty() && std::all_of(L.blocks.begin(), L.blocks.end(), [](const std::string& b) {
    return std::find(known.begin(), known.end(), b) != known.end();
  });
  if (blockwise) {
    std::vector<IntMatrix> parts;
    for (const auto& b : L.blocks) {
      auto rho = known_rho(b, opt);
      if (!rho) {
        blockwise = false;
        break;
      }
      parts.push_back(*rho);
    }
    if (blockwise) {
      IntMatrix rho = block_diag(parts);
      if (check_isometry(G, rho).all()) {
        r.outcome = FpfOutcome::Found;
        r.rho = rho;
        r.method = "blockwise (A2 explicit, D4 search, E6 c^4, E8 c^10)";
        return r;
      }
    }
  }
  return search_fpf(G, opt, true);
}

Embedding a2_in_e6() {
  static const Embedding e = verified("A2<E6", "E6", "A2", unit_rows(6, {0, 2}));
  return e;
}

Embedding a2_in_e8() {
  static const Embedding e = verified("A2<E8", "E8", "A2", unit_rows(8, {0, 2}));
  return e;
}

Embedding e6_in_e8() {
  static const Embedding e = verified("E6<E8", "E8", "E6", unit_rows(8, {0, 1, 2, 3, 4, 5}));
  return e;
}

Embedding a2_perp_e6_in_e8() {
  // alpha_8 and minus the highest root.
  static const Embedding e = [] {
    Embedding a = verified("A2<E6^perp<E8", "E8", "A2", {{0, 0, 0, 0, 0, 0, 0, 1}, {-2, -3, -4, -6, -5, -4, -3, -2}});
    IntMatrix cross = e6_in_e8().rows * make_lattice("E8").gram * a.rows.transpose();
    for (int i = 0; i < cross.rows(); ++i)
      for (int j = 0; j < cross.cols(); ++j)
        if (sgn(cross(i, j)) != 0) throw MathError("A2 is not orthogonal to E6 in E8");
    return a;
  }();
  return e;
}

std::vector<HeegnerRecord> heegner_types() {
  struct Spec {
    const char* name;
    const char* expr;
    const char* expected;
    std::vector<int> e6;
    std::vector<int> a2;
  };
  const std::vector<Spec> specs{
      {"H_v", "D4+E6", "D4+E6", {4, 5, 6, 7, 8, 9}, {0, 1}},
      {"H_n", "A2+A2+E6", "A2^2+E6", {4, 5, 6, 7, 8, 9}, {0, 1}},
      {"H_h", "A2+E8", "A2+E8", {2, 3, 4, 5, 6, 7}, {0, 1}},
  };
  Lattice R = make_lattice("E6+A2");
  std::vector<HeegnerRecord> out;
  for (const auto& s : specs) {
    HeegnerRecord h;
    h.name = s.name;
    h.expr = s.expr;
    h.expected = s.expected;
    h.lattice = make_lattice(s.expr);
    h.system = root_system(h.lattice);
    h.roots_mperp = h.system.root_count;
    std::vector<int> idx = s.e6;
    idx.insert(idx.end(), s.a2.begin(), s.a2.end());
    h.r_embedding = {"E6+A2<" + std::string(s.expr), rows_matrix(unit_rows(h.lattice.rank(), idx), h.lattice.rank())};
    Lattice img;
    img.gram = restricted_gram(h.lattice, h.r_embedding.rows);
    h.contains_r = img.gram == R.gram;
    h.roots_r = static_cast<int>(roots(img).size());
    h.eisenstein = fpf_order3(h.lattice).outcome == FpfOutcome::Found;
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<BorcherdsRow> borcherds_orders() {
  auto heeg = heegner_types();
  auto get = [&](const std::string& n) {
    for (const auto& h : heeg)
      if (h.name == n) return h;
    throw MathError("missing Heegner class " + n);
  };
  struct Stated {
    const char* name;
    int ramification;
    Rational coefficient;
    const char* vanishing;
  };
  const std::vector<Stated> table{
      {"H_n", 3, Rational(1), "2"},
      {"H_v", 2, Rational(9, 2), "9"},
      {"H_h", 6, Rational(14), "84"},
  };
  std::vector<BorcherdsRow> out;
  for (const auto& t : table) {
    HeegnerRecord h = get(t.name);
    BorcherdsRow row;
    row.name = t.name;
    row.roots_mperp = h.roots_mperp;
    row.roots_r = h.roots_r;
    row.vanishing = Rational(h.roots_mperp - h.roots_r) / 2;
    row.ramification = t.ramification;
    row.coefficient = row.vanishing / t.ramification;
    row.stated_coefficient = t.coefficient;
    row.stated_vanishing = t.vanishing;
    if (to_string(row.vanishing) != row.stated_vanishing) {
      row.flagged = true;
      row.note = "stated vanishing order " + row.stated_vanishing + " but (" + std::to_string(row.roots_mperp) + "-" +
                 std::to_string(row.roots_r) + ")/2 = " + to_string(row.vanishing) + "; coefficient " +
                 to_string(row.coefficient) + (row.coefficient == row.stated_coefficient ? " agrees" : " disagrees") +
                 " with the stated divisor";
    }
    out.push_back(row);
  }
  return out;
}

std::vector<CuspRecord> cusp_invariants() {
  struct Case {
    const char* name;
    const char* family;
    int e6_block;
    int a2_block;
    Embedding e6;
    Embedding a2;
    const char* expected;
  };
  Embedding e6_self{"E6=E6", rows_matrix(unit_rows(6, {0, 1, 2, 3, 4, 5}), 6)};
  const std::vector<Case> cases{
      {"(i)", "E6", 0, 1, e6_self, a2_in_e6(), "A2^2+E6^2"},
      {"(ii)", "E8", 0, 1, e6_in_e8(), a2_in_e8(), "A2+E6+E8"},
      {"(iii)", "E8", 0, 0, e6_in_e8(), a2_perp_e6_in_e8(), "E8^2"},
  };
  std::vector<CuspRecord> out;
  for (const auto& c : cases) {
    int copies = std::string(c.family) == "E6" ? 4 : 3;
    Lattice block = make_lattice(c.family);
    std::vector<Lattice> pieces;
    for (int b = 0; b < copies; ++b) {
      std::vector<LVec> rows;
      auto take = [&](const Embedding& e) {
        for (int i = 0; i < e.rows.rows(); ++i) {
          LVec v;
          for (int j = 0; j < e.rows.cols(); ++j) v.push_back(e.rows(i, j).get_si());
          rows.push_back(v);
        }
      };
      if (b == c.e6_block) take(c.e6);
      if (b == c.a2_block) take(c.a2);
      if (rows.empty()) {
        pieces.push_back(block);
        continue;
      }
      Complement comp = orthogonal_complement(block, rows_matrix(rows, block.rank()));
      if (comp.lattice.rank() > 0) pieces.push_back(comp.lattice);
    }
    CuspRecord rec;
    rec.case_name = c.name;
    rec.ambient = std::string(c.family) + "^" + std::to_string(copies);
    std::ostringstream pl;
    pl << "E6 in copy " << c.e6_block + 1 << ", A2 in copy " << c.a2_block + 1;
    rec.placement = pl.str();
    rec.complement = root_system(direct_sum(pieces));
    rec.expected = c.expected;
    // H_h has perp A2+E8 with E6 inside the E8: needs an E8 copy holding E6 and not the A2.
    rec.meets_hh = std::string(c.family) == "E8" && c.e6_block != c.a2_block;
    out.push_back(rec);
  }
  return out;
}

}  // namespace canon4
