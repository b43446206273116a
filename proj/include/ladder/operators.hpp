#pragma once

#include "ladder/section.hpp"

namespace ladder {

/// Weight operators on sections over the unit ball (p = 1 throughout).
/// Components are indexed by eta with |eta| = n and arranged lex
/// increasing, (0,...,0,n) first through (n,0,...,0) last.

/// Set zeta_j = 0 (1-based j): drop every monomial with a positive
/// zeta_j exponent.
DiskSection q_op(const DiskSection& s, int j);

/// Componentwise highest-weight isolation: the component at eta is hit by
/// Q_1 ... Q_{s(eta)}, where s(eta) is the slot at which eta first
/// disagrees with its immediate lex successor (identity when s(eta) = 0,
/// i.e. at the lex-maximal eta).
DiskSection p_op(const DiskSection& s);

/// Integral-weight shift in slot j (1-based): each monomial with
/// zeta_j-exponent k is multiplied by k! / (k+m)!.
DiskSection i_op(const DiskSection& s, int m, int j);

/// F_rho = product over slots j of the shift by rho_j: a monomial
/// zeta^gamma picks up gamma! / (gamma+rho)!. Requires |rho| = n.
DiskSection f_op(const DiskSection& s, const MultiIndex& rho);

/// Normalized highest-weight part. Componentwise, the stored coefficient
/// polynomial maps as
///
///   psi^(eta)  ->  eta! * F_eta(P_eta psi^(eta)),
///
/// so the output's absolute vbar^eta coefficient is F_eta(P_eta psi^(eta))
/// with no 1/eta!. On the image of the ball monomial for nu this gives
/// (|nu|-n)! zeta^{nu-eta_max} vbar^{eta_max}.
DiskSection l_op(const DiskSection& s);

/// Lex-greatest eta <= nu with |eta| = n, by the greedy rule
/// eta_1 = min(nu_1, n), eta_2 = min(nu_2, n - eta_1), ...
/// Requires |nu| >= n.
MultiIndex eta_max(const MultiIndex& nu, int n);

}  // namespace ladder
