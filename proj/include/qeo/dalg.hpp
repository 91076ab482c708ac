#ifndef QEO_DALG_HPP
#define QEO_DALG_HPP

#include "qeo/closedform.hpp"

#include <string>

namespace qeo {
namespace dalg {

struct OdeResidual {
    std::string which;
    int order_checked = 0;
    bool ok = false;
    std::string detail; // first offending monomial when not ok
};

// Second-order ODE in t satisfied by R (omega = 0 or 1), with u = t(v-1)
// kept symbolic in v. Also covers the v=1 reduction R(16R-1)R'' = 4t(R')^3
// for omega = 0.
OdeResidual verify_R_ode(closedform::Which which, int order);

// Log-derivative identity for Lbar at an exact rational v != 1.
OdeResidual verify_logderiv(closedform::Which which, int order, const Rat& v);

// v = 1 limit of the omega=0 pair: 2t^2(2G+1) = t - R0 and its t-derivative.
OdeResidual verify_v1_reduction(int order);

} // namespace dalg
} // namespace qeo

#endif
