#pragma once

#include <string>

#include "ladder/fock.hpp"
#include "ladder/section.hpp"

namespace ladder {

/// Human-readable monomial sums for terminal output. Variables are indexed
/// the way the coordinates are split: holomorphic slots are z_1..z_p and
/// conjugated slots continue as zbar_{p+1}..zbar_{p+q}, so e.g. the cubic
/// z_1^3 zbar_2 zbar_3^3 zbar_4 prints exactly like that (with unicode
/// sub/superscripts). Sections print in the absolute normalization: each
/// component's vbar^eta carries its /eta! divisor explicitly.
std::string pretty_rational(const Rational& r);
std::string pretty_coeff(const ExactComplex& c);
std::string pretty_fock(const FockPoly& f);
std::string pretty_section(const DiskSection& s);

}  // namespace ladder
