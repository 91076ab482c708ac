#ifndef QEO_CATALYTIC_HPP
#define QEO_CATALYTIC_HPP

#include "qeo/exactalg.hpp"

#include <string>
#include <vector>

namespace qeo {
namespace catalytic {

// Solution of the P/D system, solved by induction on the total degree in
// (y, t): after solve(N), p[j][n] is known for j+n <= N-1 and d[j][n] for
// j+n <= N. d[j][n] is a power series in x truncated with a staircase cap.
struct PDState {
    int stages = 0;   // N of the induction
    int x_degree = 0; // requested exact x-degree for the d's
    std::vector<std::vector<BivarPoly>> p;
    std::vector<std::vector<LaurentX>> d;

    const BivarPoly& p_at(int j, int n) const;
    const LaurentX& d_at(int j, int n) const;
    // stored d[j][n] entries are exact up to trusted(j+n)
    int trusted(int stage) const { return x_degree + 2 * (stages - stage); }

    // Q(t, omega, v) = [y^1] P(y) - v, to order stages - 1
    VSeries Q() const;
};

// omega and v may be the symbols or numeric specialisations.
PDState solve_pd_system(int N, int x_degree = 0, const BivarPoly& omega = BivarPoly::omega(),
                        const BivarPoly& v = BivarPoly::v());

// E(x,y) after the change of variables, as a t-series of Laurent(y) over
// Laurent(x); also reports whether E(x,y) = E(y,x) to the truncation order.
struct ESeries {
    TSeries<Laurent<LaurentX>> e;
    bool symmetric = false;
};
ESeries compute_E(const PDState& st, const BivarPoly& v = BivarPoly::v());

// residual of the one-variable patch equation (P(y) against itself through
// D); zero through the truncation order when the state is consistent
struct Verdict {
    bool ok = true;
    std::string detail;
};
Verdict check_P_equation(const PDState& st, const BivarPoly& omega = BivarPoly::omega(),
                         const BivarPoly& v = BivarPoly::v());

// at omega=0, v=1: [y^1] D(x,y) = (1/(1-x)) P(t/(1-x))
Verdict check_D1_identity_omega0_v1(const PDState& st);

} // namespace catalytic
} // namespace qeo

#endif
