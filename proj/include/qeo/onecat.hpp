#ifndef QEO_ONECAT_HPP
#define QEO_ONECAT_HPP

#include "qeo/exactalg.hpp"

#include <string>

namespace qeo {
namespace onecat {

// omega and v enter as BivarPoly constants: the symbols for a fully symbolic
// run, rationals for a specialised one.
struct MOptions {
    int order = 12;
    int x_max = 0; // defaults to order + 4 when 0
    BivarPoly omega = BivarPoly::omega();
    BivarPoly v = BivarPoly::v();

    int effective_x_max() const { return x_max > 0 ? x_max : order + 4; }
};

struct Verdict {
    bool ok = true;
    std::string detail;
};

// M(x) by the one-catalytic recursion; coefficient of t^n is exact on the
// window [-n, x_max]. Internally computed with a staircase cap so stored
// entries are exact; re-run with a wider x_max to validate.
XSeries compute_M(const MOptions& opt);

// F(x) = (x M - t(v-1)) (1 - omega x - M); throws if a negative x-exponent
// survives. Coefficient of t^m is exact on [0, x_max - m].
XSeries compute_F(const XSeries& M, const MOptions& opt);

// Q = (1/t^2) [x^{-2}] M - v, cross-checked against
// (omega+2) t^2 (Q+v) = t - F(0) + t(v-1) [x^0] M  (throws on mismatch).
VSeries extract_Q(const XSeries& M, const XSeries& F, const MOptions& opt);

// Z(x,y) has no negative x/y exponents through the truncation order; the
// t^0 and t^1 coefficients match their closed forms.
Verdict check_Z_nonneg(const XSeries& M, const XSeries& F, const MOptions& opt);

// M(M(x)) = x in the bigraded (x, t/x) ring, and the kernel identity
// F(M(x)) = (x M - t(v-1)) (1 - x - omega M).
Verdict check_involution(const XSeries& M, const XSeries& F, const MOptions& opt, int x_cap = 0);

} // namespace onecat
} // namespace qeo

#endif
