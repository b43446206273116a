#pragma once

#include "ladder/fock.hpp"
#include "ladder/section.hpp"

namespace ladder {

/// Image of a pure-grade-n polynomial under the weight-n integral transform
///
///   (T_n f)(zeta, v) = Integral f(zeta w, w) e^{v^* w} e^{-|w|^2} dm(w),
///
/// computed through its closed form: a monomial a z_R^alpha zbar_S^beta
/// contributes, for every eta <= beta with |eta| = n and every table gamma
/// with row totals alpha and column totals beta - eta,
///
///   a * alpha! beta! / gamma! * zeta^gamma   to the component at eta.
///
/// Negative grade maps to the zero section; mixed grade throws. OpenMP
/// splits the input terms across threads when the input is large.
DiskSection phi(const FockPoly& f);

/// Single-threaded reference implementation; identical output by exactness.
DiskSection phi_serial(const FockPoly& f);

/// Image of the p = 1 ball monomial z_1^{|nu|-n} zbar_S^nu, directly from
/// the specialized closed form
///
///   Sum_{eta <= nu, |eta| = n} nu! (|nu|-n)! / (nu-eta)!
///       zeta^{nu-eta} vbar^eta / eta!.
DiskSection phi_ball(int q, const MultiIndex& nu, int n);

}  // namespace ladder
