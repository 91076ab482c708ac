#ifndef QEO_CLOSEDFORM_HPP
#define QEO_CLOSEDFORM_HPP

#include "qeo/exactalg.hpp"

namespace qeo {
namespace closedform {

enum class Which { omega0, omega1 };

// The implicit series R (constant term 0, linear coefficient 1) defined by
// t = sum_{n,k>=0} 1/(n+1) C(2n,n) C(2n+k,k) W(n,k) t^k (v-1)^k R^{n+1},
// with W = C(2n+k,n) for omega=0 and W = C(3n+2k,n+k) for omega=1.
VSeries solve_R(Which which, int order);

// Defect t - Omega(R, t(v-1)); zero to truncation order for a solved R.
VSeries omega_defect(Which which, const VSeries& R);

// G of the omega=0 closed form; Q0 = 2*G. Verifies the alternative identity
// 2t^2(2G+v) = t - R0 + sum(...) internally (throws on mismatch).
VSeries compute_G(const VSeries& R0);

// Q1 of the omega=1 closed form. Verifies 3t^2(Q1+v) = t - R1 + sum(...).
VSeries compute_Q1(const VSeries& R1);

// Explicit Laurent expansion of M(y) in terms of R:
//   omega0: (tv-t)/y + sum 1/(n+1) C(2n,n) C(2n+k,k) C(n+j,n)   t^k (v-1)^k R^{n+1} y^{j-n-k-1}
//   omega1: (tv-t)/y + sum 1/(n+1) C(2n,n) C(2n+k,k) C(2n+k+j,j) t^k (v-1)^k R^{n+1} y^{j-n-k-1}
XSeries explicit_M(Which which, const VSeries& R, int order, int x_max);

// Order-by-order solution U(x) of the tree equations:
//   binary (omega0):       U = (x+1/x)(t+U-U0)(tx+tv/x+(x+1/x)(U-U0))
//   unary/binary (omega1): U = x(t+U-U0)(tv+U-U0) + (1/x)(t+U-U0)
// Charge is the exponent of x. Returns U; U0 = [x^0]U equals t - R.
XSeries solve_tree_U(Which which, int order, int x_window);

} // namespace closedform
} // namespace qeo

#endif
