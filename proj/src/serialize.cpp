#include "ladder/serialize.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace ladder {

namespace {

using nlohmann::json;

constexpr int kMaxExponent = 100000;

[[noreturn]] void fail(const std::string& what) { throw validation_error(what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

int get_dim(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) fail(std::string("field \"") + name + "\" must be an integer");
  int d = v.get<int>();
  if (d < 1 || d > 64) fail(std::string("field \"") + name + "\" out of range");
  return d;
}

int get_small_int(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) fail(std::string("field \"") + name + "\" must be an integer");
  int d = v.get<int>();
  if (d < -kMaxExponent || d > kMaxExponent)
    fail(std::string("field \"") + name + "\" out of range");
  return d;
}

MultiIndex parse_tuple(const json& v, int len, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != len)
    fail(std::string(what) + " must be an array of length " + std::to_string(len));
  std::vector<int> e;
  e.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number_integer()) fail(std::string(what) + " entries must be integers");
    int n = x.get<int>();
    if (n < 0 || n > kMaxExponent) fail(std::string(what) + " entries out of range");
    e.push_back(n);
  }
  return MultiIndex(std::move(e));
}

Rational parse_rational(const json& v, const char* what) {
  if (!v.is_string()) fail(std::string(what) + " must be a \"num/den\" string");
  try {
    return rational_from_string(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

ExactComplex parse_coeff(const json& term) {
  return {parse_rational(field(term, "re"), "re"), parse_rational(field(term, "im"), "im")};
}

json coeff_to_json_re(const ExactComplex& c) { return rational_to_string(c.re); }
json coeff_to_json_im(const ExactComplex& c) { return rational_to_string(c.im); }

json tuple_to_json(const MultiIndex& m) {
  json a = json::array();
  for (int i = 0; i < m.size(); ++i) a.push_back(m[i]);
  return a;
}

}  // namespace

json fock_to_json(const FockPoly& f) {
  json terms = json::array();
  for (const auto& [key, c] : f.terms) {
    terms.push_back({{"l", tuple_to_json(key.l)},
                     {"m", tuple_to_json(key.m)},
                     {"re", coeff_to_json_re(c)},
                     {"im", coeff_to_json_im(c)}});
  }
  return {{"p", f.p}, {"q", f.q}, {"terms", std::move(terms)}};
}

FockPoly fock_from_json(const json& j) {
  FockPoly f;
  f.p = get_dim(j, "p");
  f.q = get_dim(j, "q");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) fail("\"terms\" must be an array");
  for (const json& t : terms) {
    MultiIndex l = parse_tuple(field(t, "l"), f.p, "\"l\"");
    MultiIndex m = parse_tuple(field(t, "m"), f.q, "\"m\"");
    fock_add_term(f, {std::move(l), std::move(m)}, parse_coeff(t));
  }
  return f;
}

json section_to_json(const DiskSection& s) {
  json comps = json::array();
  for (const auto& [eta, psi] : s.comps) {
    json poly = json::array();
    for (const auto& [gamma, c] : psi) {
      json rows = json::array();
      for (int i = 0; i < gamma.rows(); ++i) rows.push_back(tuple_to_json(gamma.row(i)));
      poly.push_back(
          {{"gamma", std::move(rows)}, {"re", coeff_to_json_re(c)}, {"im", coeff_to_json_im(c)}});
    }
    comps.push_back({{"eta", tuple_to_json(eta)}, {"poly", std::move(poly)}});
  }
  return {{"p", s.p}, {"q", s.q}, {"n", s.n}, {"components", std::move(comps)}};
}

DiskSection section_from_json(const json& j) {
  int p = get_dim(j, "p");
  int q = get_dim(j, "q");
  int n = get_small_int(j, "n");
  DiskSection s = section_zero(p, q, n);
  const json& comps = field(j, "components");
  if (!comps.is_array()) fail("\"components\" must be an array");
  for (const json& comp : comps) {
    MultiIndex eta = parse_tuple(field(comp, "eta"), q, "\"eta\"");
    if (eta.order() != n) fail("component weight |eta| does not match n");
    const json& poly = field(comp, "poly");
    if (!poly.is_array()) fail("component \"poly\" must be an array");
    for (const json& term : poly) {
      const json& rows = field(term, "gamma");
      if (!rows.is_array() || static_cast<int>(rows.size()) != p)
        fail("\"gamma\" must be an array of p rows");
      std::vector<MultiIndex> parsed;
      parsed.reserve(rows.size());
      for (const json& r : rows) parsed.push_back(parse_tuple(r, q, "\"gamma\" row"));
      try {
        section_add_term(s, eta, MatrixIndex::from_rows(parsed), parse_coeff(term));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
  }
  try {
    section_validate(s);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return s;
}

json group_to_json(const GroupElementX& g) {
  json rows = json::array();
  for (int i = 0; i < g.mat.rows(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < g.mat.cols(); ++jj) {
      const ExactComplex& c = g.mat.at(i, jj);
      row.push_back({rational_to_string(c.re), rational_to_string(c.im)});
    }
    rows.push_back(std::move(row));
  }
  return {{"p", g.p}, {"q", g.q}, {"matrix", std::move(rows)}};
}

GroupElementX group_from_json(const json& j) {
  int p = get_dim(j, "p");
  int q = get_dim(j, "q");
  const json& rows = field(j, "matrix");
  int n = p + q;
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    fail("\"matrix\" must have p + q rows");
  CMatX m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail("\"matrix\" rows must have p + q entries");
    for (int k = 0; k < n; ++k) {
      const json& ent = row[static_cast<size_t>(k)];
      if (!ent.is_array() || ent.size() != 2) fail("matrix entries must be [\"re\",\"im\"] pairs");
      m.at(i, k) = ExactComplex{parse_rational(ent[0], "matrix entry re"),
                                parse_rational(ent[1], "matrix entry im")};
    }
  }
  return {p, q, std::move(m)};
}

json load_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("cannot read " + path);
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("invalid JSON: ") + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw io_error("cannot write " + path);
}

}  // namespace ladder
