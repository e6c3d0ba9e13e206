#include "canon4/polyio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "canon4/exactalg.hpp"

namespace canon4 {

namespace {

// Recursive-descent parser for expressions like "x3^2 - 1/2*x2*x4".
class ExprParser {
 public:
  ExprParser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" + s_ + "\"");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  MultiPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      Rational r;
      try {
        r = parse_rational(s_.substr(start, pos_ - start));
      } catch (const MathError& e) {
        fail(e.what());
      }
      return MultiPoly::constant(vars_, r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < static_cast<int>(vars_.size()); ++i)
        if (vars_[i] == name) return MultiPoly::variable(vars_, i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string coeff_prefix(const std::string& c, bool has_monomial, bool first) {
  std::string body = c;
  bool neg = !body.empty() && body[0] == '-';
  if (neg) body = body.substr(1);
  std::string out;
  if (neg) out = first ? "-" : " - ";
  else if (!first) out = " + ";
  if (!has_monomial) return out + body;
  if (body != "1") out += body + "*";
  return out;
}

template <class K>
std::string poly_string(const BasicPoly<K>& p, bool paren_coeffs) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mon;
    for (int i = 0; i < p.nvars(); ++i) {
      if (e[i] == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += p.vars()[i];
      if (e[i] > 1) mon += "^" + std::to_string(e[i]);
    }
    std::string cs = to_string(c);
    if (paren_coeffs && cs.find_first_of("+", 1) != std::string::npos) cs = "(" + cs + ")";
    if (paren_coeffs && cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) != std::string::npos)
      cs = "(" + cs + ")";
    out += coeff_prefix(cs, !mon.empty(), first);
    out += mon;
    first = false;
  }
  return out;
}

std::string ptr_join(const std::string& where, const std::string& key) { return where + "/" + key; }

}  // namespace

MultiPoly parse_poly_string(const std::string& s, const std::vector<std::string>& vars) {
  return ExprParser(s, vars).parse();
}

std::string to_string(const MultiPoly& p) { return poly_string(p, false); }
std::string to_string(const AlgPoly& p) { return poly_string(p, true); }

AlgPoly to_alg(const MultiPoly& p) {
  return p.map_coeffs<AlgNum>([](const Rational& c) { return AlgNum(c); });
}

MultiPoly poly_from_json(const json& j, const std::vector<std::string>& expected_vars, const std::string& where) {
  if (j.is_string()) {
    if (expected_vars.empty()) throw ParseError(where + ": expression string needs a known variable list");
    try {
      return parse_poly_string(j.get<std::string>(), expected_vars);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (!j.is_object()) throw ParseError(where + ": polynomial must be an object or a string");
  if (!j.contains("vars") || !j["vars"].is_array()) throw ParseError(ptr_join(where, "vars") + ": missing variable list");
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError(ptr_join(where, "terms") + ": missing term list");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < j["vars"].size(); ++i) {
    const auto& v = j["vars"][i];
    std::string here = ptr_join(ptr_join(where, "vars"), std::to_string(i));
    if (!v.is_string()) throw ParseError(here + ": variable name must be a string");
    std::string name = v.get<std::string>();
    if (!expected_vars.empty() &&
        std::find(expected_vars.begin(), expected_vars.end(), name) == expected_vars.end())
      throw ParseError(here + ": unknown variable '" + name + "'");
    if (std::find(vars.begin(), vars.end(), name) != vars.end())
      throw ParseError(here + ": duplicate variable '" + name + "'");
    vars.push_back(name);
  }
  MultiPoly p(vars);
  std::vector<Monomial> seen;
  for (std::size_t t = 0; t < j["terms"].size(); ++t) {
    const auto& term = j["terms"][t];
    std::string here = ptr_join(ptr_join(where, "terms"), std::to_string(t));
    if (!term.is_object() || !term.contains("c") || !term.contains("e"))
      throw ParseError(here + ": term needs \"c\" and \"e\"");
    Rational c;
    try {
      if (term["c"].is_string()) c = parse_rational(term["c"].get<std::string>());
      else if (term["c"].is_number_integer()) c = Rational(term["c"].get<long>());
      else throw ParseError("coefficient must be a rational string");
    } catch (const std::exception& e) {
      throw ParseError(ptr_join(here, "c") + ": " + e.what());
    }
    const auto& ej = term["e"];
    if (!ej.is_array() || ej.size() != vars.size())
      throw ParseError(ptr_join(here, "e") + ": exponent vector length must equal the variable count");
    Monomial e;
    for (const auto& x : ej) {
      if (!x.is_number_integer() || x.get<int>() < 0)
        throw ParseError(ptr_join(here, "e") + ": exponents must be nonnegative integers");
      e.push_back(x.get<int>());
    }
    if (std::find(seen.begin(), seen.end(), e) != seen.end())
      throw ParseError(ptr_join(here, "e") + ": duplicate exponent vector");
    seen.push_back(e);
    p.add_term(e, c);
  }
  if (!expected_vars.empty()) return p.with_vars(expected_vars);
  return p;
}

json poly_to_json(const MultiPoly& p) {
  json j;
  j["vars"] = p.vars();
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(json{{"c", to_string(it->second)}, {"e", it->first}});
  j["terms"] = terms;
  return j;
}

RatMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw ParseError(ptr_join(where, std::to_string(i)) + ": row must be an array");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      const auto& x = j[i][k];
      std::string here = ptr_join(ptr_join(where, std::to_string(i)), std::to_string(k));
      try {
        row.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
      } catch (const std::exception& e) {
        throw ParseError(here + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows[0].size()) throw ParseError(ptr_join(where, std::to_string(i)) + ": ragged matrix");
    rows.push_back(row);
  }
  return RatMatrix::from_rows(rows);
}

json matrix_to_json(const RatMatrix& m) {
  json j = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    j.push_back(row);
  }
  return j;
}

json matrix_to_json(const IntMatrix& m) { return matrix_to_json(to_rat(m)); }

json point_to_json(const ProjPoint& p) {
  json j = json::array();
  for (const auto& x : p) {
    if (x.is_rational()) {
      j.push_back(to_string(x.rational_value()));
    } else {
      json c = json::array();
      for (const auto& r : x.coeffs()) c.push_back(to_string(r));
      j.push_back(c);
    }
  }
  return j;
}

ProjPoint point_from_json(const json& j, const FieldPtr& field, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": point must be an array");
  ProjPoint p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string here = ptr_join(where, std::to_string(i));
    const auto& x = j[i];
    try {
      if (x.is_string()) {
        p.emplace_back(parse_rational(x.get<std::string>()));
      } else if (x.is_array()) {
        if (!field) throw ParseError("field element given but no field declared");
        std::vector<Rational> c;
        for (const auto& y : x) c.push_back(parse_rational(y.get<std::string>()));
        p.emplace_back(field, c);
      } else if (x.is_number_integer()) {
        p.emplace_back(Rational(x.get<long>()));
      } else {
        throw ParseError("coordinate must be a rational string or coefficient array");
      }
    } catch (const ParseError& e) {
      throw ParseError(here + ": " + e.what());
    } catch (const std::exception& e) {
      throw ParseError(here + ": " + e.what());
    }
  }
  return p;
}

namespace {

FieldPtr field_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("name") || !j.contains("minpoly"))
    throw ParseError(where + ": field needs \"name\" and \"minpoly\"");
  std::vector<Rational> mp;
  for (const auto& c : j["minpoly"]) mp.push_back(parse_rational(c.get<std::string>()));
  try {
    return std::make_shared<NumberField>(j["name"].get<std::string>(), mp);
  } catch (const MathError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

TwoThreeScheme parse_scheme(const json& j) {
  if (!j.is_object()) throw ParseError(": scheme must be an object");
  if (j.contains("type") && j["type"] != "scheme") throw ParseError("/type: expected \"scheme\"");
  if (!j.contains("q") || !j.contains("f")) throw ParseError(": scheme needs \"q\" and \"f\"");
  auto vars = scheme_vars();
  MultiPoly q = poly_from_json(j["q"], vars, "/q");
  MultiPoly f = poly_from_json(j["f"], vars, "/f");
  TwoThreeScheme C;
  try {
    C = make_scheme(q, f, j.value("name", ""));
  } catch (const MathError& e) {
    throw ParseError(std::string(": ") + e.what());
  }
  if (j.contains("field")) C.field = field_from_json(j["field"], "/field");
  if (j.contains("points")) {
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
      ProjPoint p = point_from_json(j["points"][i], C.field, "/points/" + std::to_string(i));
      if (p.size() != 4) throw ParseError("/points/" + std::to_string(i) + ": point must have 4 coordinates");
      C.hints.push_back(p);
    }
  }
  return C;
}

CubicThreefold parse_cubic(const json& j) {
  if (!j.is_object()) throw ParseError(": cubic must be an object");
  if (j.contains("type") && j["type"] != "cubic") throw ParseError("/type: expected \"cubic\"");
  if (!j.contains("F")) throw ParseError(": cubic needs \"F\"");
  CubicThreefold X;
  X.name = j.value("name", "");
  X.F = poly_from_json(j["F"], cubic_vars(), "/F");
  if (!X.F.is_homogeneous() || X.F.degree() != 3) throw ParseError("/F: must be a cubic form");
  if (j.contains("marked")) {
    ProjPoint p = point_from_json(j["marked"], nullptr, "/marked");
    if (p.size() != 5) throw ParseError("/marked: point must have 5 coordinates");
    X.marked = p;
  }
  return X;
}

json emit_scheme(const TwoThreeScheme& C) {
  json j;
  j["type"] = "scheme";
  j["name"] = C.name;
  j["q"] = poly_to_json(C.q);
  j["f"] = poly_to_json(C.f);
  if (C.field) {
    json mp = json::array();
    for (const auto& c : C.field->minpoly()) mp.push_back(to_string(c));
    j["field"] = json{{"name", C.field->name()}, {"minpoly", mp}};
  }
  if (!C.hints.empty()) {
    json pts = json::array();
    for (const auto& p : C.hints) pts.push_back(point_to_json(p));
    j["points"] = pts;
  }
  return j;
}

json emit_cubic(const CubicThreefold& X) {
  json j;
  j["type"] = "cubic";
  j["name"] = X.name;
  j["F"] = poly_to_json(X.F);
  if (X.marked) j["marked"] = point_to_json(*X.marked);
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace canon4
