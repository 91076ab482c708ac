#ifndef QEO_SIXVERTEX_HPP
#define QEO_SIXVERTEX_HPP

#include "qeo/exactalg.hpp"
#include "qeo/onecat.hpp"

namespace qeo {
namespace sixvertex {

// Ratios of theta derivatives as q-series with polynomial-in-omega
// coefficients, built on the Chebyshev-type sequences
//   s_{n+1} = -omega s_n - s_{n-1}  (s_{-1} = -1, s_0 = 1)
//   c_{n+1} = -omega c_n - c_{n-1}  (c_{-1} = c_0 = 1)
// giving sin((2n+1)a)/sin(a) and cos((2n+1)a)/cos(a) at omega = -2cos(2a):
//   A  = theta'(a)/cos(a),  B = theta(a)/sin(a),
//   C  = theta''(a)/sin(a), D = theta'''(a)/cos(a),
//   A0 = theta'(0),         D0 = theta'''(0).
struct ThetaRatios {
    int order = 0;
    QSeries A, B, C, D, A0, D0;
};

ThetaRatios theta_ratios(int order);

// t(q) = (C/A - B D / A^2) / (16 (omega + 2)); polynomial coefficients in
// omega (the division by omega+2 is exact and checked).
QSeries t_of_q(const ThetaRatios& th);

// compositional inverse q(t) of t(q)
QSeries q_of_t(const QSeries& tq);

// Rtilde as a series in q: (B/A)^2 (D0/A0 - D/A) / (24 (omega + 2))
QSeries Rtilde_q(const ThetaRatios& th);

// Rtilde and Qtilde as series in t: Rtilde(q(t)) and (t - Rtilde)/((omega+2) t^2) - 1
struct SixVertexSeries {
    QSeries q_of_t;  // q as a series in t
    QSeries Rtilde;  // in t
    QSeries Qtilde;  // in t
};
SixVertexSeries solve(int order);

// The omega = -1, v = 1 algebraicity suite: closed-form F'(0), closed-form
// F(x), the invariant identity, and the hypergeometric ODE for t(S).
onecat::Verdict verify_omega_minus1(int order);

} // namespace sixvertex
} // namespace qeo

#endif
