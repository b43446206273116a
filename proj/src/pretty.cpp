#include "ladder/pretty.hpp"

#include <array>

namespace ladder {

namespace {

const std::array<const char*, 10> kSub = {"₀", "₁", "₂", "₃", "₄",
                                          "₅", "₆", "₇", "₈", "₉"};
const std::array<const char*, 10> kSup = {"⁰", "¹", "²", "³", "⁴",
                                          "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string digits(int n, const std::array<const char*, 10>& glyphs) {
  std::string plain = std::to_string(n);
  std::string out;
  for (char c : plain) {
    if (c == '-')
      out += "⁻";
    else
      out += glyphs[static_cast<size_t>(c - '0')];
  }
  return out;
}

std::string subscript(int n) { return digits(n, kSub); }

std::string power_suffix(int e) { return e == 1 ? std::string() : digits(e, kSup); }

/// One variable family raised to a multi-exponent: name-per-slot with
/// subscript slot labels starting at `base` + 1.
std::string var_monomial(const char* name, const MultiIndex& m, int base) {
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += name;
    out += subscript(base + i + 1);
    out += power_suffix(m[i]);
  }
  return out;
}

std::string zeta_monomial(const MatrixIndex& gamma) {
  if (gamma.rows() == 1) return var_monomial("ζ", gamma.row(0), 0);
  std::string out;
  for (int i = 0; i < gamma.rows(); ++i)
    for (int j = 0; j < gamma.cols(); ++j) {
      if (gamma.at(i, j) == 0) continue;
      out += "ζ";
      out += subscript(i + 1);
      out += subscript(j + 1);
      out += power_suffix(gamma.at(i, j));
    }
  return out;
}

/// vbar^eta together with the 1/eta! normalization it is displayed under.
std::string vbar_monomial(const MultiIndex& eta) {
  std::string out = var_monomial("v̄", eta, 0);
  std::string fac;
  for (int i = 0; i < eta.size(); ++i)
    if (eta[i] >= 2) fac += std::to_string(eta[i]) + "!";
  if (!fac.empty()) out += "/" + fac;
  return out;
}

void append_term(std::string& out, const ExactComplex& c, const std::string& vars) {
  std::string coeff = pretty_coeff(c);
  bool negative = false;
  if (coeff.size() > 1 && coeff[0] == '-') {
    negative = true;
    coeff = coeff.substr(1);
  }
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (coeff == "1" && !vars.empty())
    out += vars;
  else if (vars.empty())
    out += coeff;
  else
    out += coeff + " " + vars;
}

}  // namespace

std::string pretty_rational(const Rational& r) {
  std::string num = r.get_num().get_str();
  if (r.get_den() == 1) return num;
  return num + "/" + r.get_den().get_str();
}

std::string pretty_coeff(const ExactComplex& c) {
  if (c.im == 0) return pretty_rational(c.re);
  std::string im = pretty_rational(c.im) + "i";
  if (c.re == 0) return im;
  std::string sign = c.im > 0 ? " + " : " - ";
  if (c.im < 0) im = pretty_rational(-c.im) + "i";
  return "(" + pretty_rational(c.re) + sign + im + ")";
}

std::string pretty_fock(const FockPoly& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : f.terms) {
    std::string vars = var_monomial("z", key.l, 0) + var_monomial("z̄", key.m, f.p);
    append_term(out, c, vars);
  }
  return out;
}

std::string pretty_section(const DiskSection& s) {
  if (s.comps.empty()) return "0";
  std::string out;
  for (const auto& [eta, psi] : s.comps) {
    std::string tail = vbar_monomial(eta);
    for (const auto& [gamma, c] : psi) {
      std::string vars = zeta_monomial(gamma);
      if (!vars.empty() && !tail.empty()) vars += " ";
      vars += tail;
      append_term(out, c, vars);
    }
  }
  return out;
}

}  // namespace ladder
