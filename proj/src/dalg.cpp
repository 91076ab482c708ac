#include "qeo/dalg.hpp"

#include <sstream>

namespace qeo {
namespace dalg {

namespace {

std::string first_nonzero(const VSeries& r)
{
    for (int n = 0; n <= r.order(); ++n)
        if (!r.coeff(n).is_zero()) {
            std::ostringstream os;
            os << "t^" << n << " : " << r.coeff(n).to_string();
            return os.str();
        }
    return "";
}

VSeries tmul(const VSeries& f, int k) { return f.shifted_t(k); }

VSeries scale(VSeries f, long c)
{
    f.scale(BivarPoly(c));
    return f;
}

} // namespace

OdeResidual verify_R_ode(closedform::Which which, int order)
{
    OdeResidual out;
    out.which = which == closedform::Which::omega0 ? "R0 ode" : "R1 ode";
    out.order_checked = order;

    const int N = order + 2;
    VSeries R = closedform::solve_R(which, N);
    VSeries R1 = R.derivative();
    VSeries R2 = R1.derivative();
    VSeries u = VSeries::t_power(N, 1, BivarPoly::v() - BivarPoly::one());
    VSeries one = VSeries::constant(N, BivarPoly::one());

    VSeries res;
    if (which == closedform::Which::omega0) {
        // t^2 R (16R^2 + (8u^2+20u-1)R + u(u-1)^3) R''
        //  - t^3 (4R - 3u(u-1)) (R')^3 - 3 t^2 u (8u+1) R (R')^2
        //  + 3 u^2 R (12 t R - t (u-1)^2) R' - 16 u^2 R^3 + u^2 (4u-1)(u-1) R^2
        VSeries um1 = u - one;
        VSeries term1 = tmul(R * (scale(R * R, 16) + (scale(u * u, 8) + scale(u, 20) - one) * R + u * um1 * um1 * um1) * R2, 2);
        VSeries term2 = tmul((scale(R, 4) - scale(u * um1, 3)) * R1 * R1 * R1, 3);
        VSeries term3 = tmul(scale(u * (scale(u, 8) + one) * R * R1 * R1, 3), 2);
        VSeries term4 = scale(u * u * R * (tmul(scale(R, 12), 1) - tmul(um1 * um1, 1)) * R1, 3);
        VSeries term5 = scale(u * u * R * R * R, 16);
        VSeries term6 = u * u * (scale(u, 4) - one) * um1 * R * R;
        res = term1 - term2 - term3 + term4 - term5 + term6;
    } else {
        // t^2 R (27R^2 + (36u-1)R - u(4u-1)^2) R''
        //  - 2 t^3 (3R - 2u(4u-1)) (R')^3 - 6 t^2 u (12u+1) R (R')^2
        //  + 6 t u^2 R (18R + (4u-1)) R' - 54 u^2 R^3 - 2 u^2 (12u-1) R^2
        VSeries f4 = scale(u, 4) - one;
        VSeries term1 = tmul(R * (scale(R * R, 27) + (scale(u, 36) - one) * R - u * f4 * f4) * R2, 2);
        VSeries term2 = tmul(scale((scale(R, 3) - scale(u * f4, 2)) * R1 * R1 * R1, 2), 3);
        VSeries term3 = tmul(scale(u * (scale(u, 12) + one) * R * R1 * R1, 6), 2);
        VSeries term4 = tmul(scale(u * u * R * (scale(R, 18) + f4) * R1, 6), 1);
        VSeries term5 = scale(u * u * R * R * R, 54);
        VSeries term6 = scale(u * u * (scale(u, 12) - one) * R * R, 2);
        res = term1 - term2 - term3 + term4 - term5 - term6;
    }
    res = res.truncated(order);
    out.ok = res.is_zero();
    if (!out.ok) out.detail = first_nonzero(res);

    // v=1 reduction for omega=0: R(16R-1)R'' = 4t(R')^3
    if (out.ok && which == closedform::Which::omega0) {
        TSeries<Rat> Rv = specialize(R, Rat(0), Rat(1));
        TSeries<Rat> Rv1 = Rv.derivative();
        TSeries<Rat> Rv2 = Rv1.derivative();
        TSeries<Rat> lhs = Rv * (Rv * Rat(16) - TSeries<Rat>::constant(Rv.order(), Rat(1))).truncated(Rv2.order()) * Rv2;
        TSeries<Rat> rhs = (Rv1 * Rv1 * Rv1).shifted_t(1) * Rat(4);
        if (!(lhs.truncated(order) == rhs.truncated(order))) {
            out.ok = false;
            out.detail = "v=1 reduction fails";
        }
    }
    return out;
}

OdeResidual verify_logderiv(closedform::Which which, int order, const Rat& v)
{
    OdeResidual out;
    out.order_checked = order;
    {
        std::ostringstream os;
        os << (which == closedform::Which::omega0 ? "logderiv0" : "logderiv1") << " at v=" << v.get_str();
        out.which = os.str();
    }
    if (v == 1) throw std::domain_error("verify_logderiv: v must differ from 1");

    const int N = order + 2;
    using RS = TSeries<Rat>;
    VSeries Rfull = closedform::solve_R(which, N);
    RS R = specialize(Rfull, Rat(0), v);
    RS R1 = R.derivative();
    RS u = RS::t_power(N, 1, v - 1);
    RS one = RS::constant(N, Rat(1));

    RS Lbar, num, den;
    if (which == closedform::Which::omega0) {
        VSeries G = closedform::compute_G(Rfull);
        RS Q0 = specialize(G, Rat(0), v);
        Q0 += Q0; // Q0 = 2G
        // Lbar = t^2 (Q0 + v) + 2 v R / (3(v-1))
        Lbar = (Q0 + RS::constant(Q0.order(), v)).shifted_t(2);
        RS extra = R;
        extra.scale(2 * v / (3 * (v - 1)));
        Lbar += extra.truncated(Lbar.order());
        // num = t^2 (R')^2 + t u (1-u) R' + 3 u^2 R ; factor 4
        num = (R1 * R1).shifted_t(2) + ((u * (one - u)).truncated(R1.order()) * R1).shifted_t(1) + (u * u * R) * Rat(3);
        num.scale(Rat(4));
        // den = 4 t R R' + 3 t u (1-u) R' + u (1+8u) R
        den = (R.truncated(R1.order()) * R1).shifted_t(1) * Rat(4) +
              ((u * (one - u)).truncated(R1.order()) * R1).shifted_t(1) * Rat(3) + (u * (one + u * Rat(8)) * R);
    } else {
        VSeries Q1full = closedform::compute_Q1(Rfull);
        RS Q1 = specialize(Q1full, Rat(0), v);
        // Lbar = t^2 (Q1 + v) + v R / (2(v-1))
        Lbar = (Q1 + RS::constant(Q1.order(), v)).shifted_t(2);
        RS extra = R;
        extra.scale(v / (2 * (v - 1)));
        Lbar += extra.truncated(Lbar.order());
        // num = t^2 (R')^2 + t u (1-4u) R' + 6 u^2 R ; factor 3
        num = (R1 * R1).shifted_t(2) + ((u * (one - u * Rat(4))).truncated(R1.order()) * R1).shifted_t(1) +
              (u * u * R) * Rat(6);
        num.scale(Rat(3));
        // den = 3 t R R' + 2 t u (1-4u) R' + u (1+12u) R
        den = (R.truncated(R1.order()) * R1).shifted_t(1) * Rat(3) +
              ((u * (one - u * Rat(4))).truncated(R1.order()) * R1).shifted_t(1) * Rat(2) +
              (u * (one + u * Rat(12)) * R);
    }
    // cross-multiplied: Lbar' * t * den - Lbar * num = 0
    RS res = (Lbar.derivative() * den.truncated(Lbar.order() - 1)).shifted_t(1) - Lbar * num;
    res = res.truncated(order);
    out.ok = res.is_zero();
    if (!out.ok) {
        for (int n = 0; n <= res.order(); ++n)
            if (!is_zero(res.coeff(n))) {
                std::ostringstream os;
                os << "t^" << n << " : " << res.coeff(n).get_str();
                out.detail = os.str();
                break;
            }
    }
    return out;
}

OdeResidual verify_v1_reduction(int order)
{
    OdeResidual out;
    out.which = "omega0 v=1 reduction";
    out.order_checked = order;
    VSeries Rfull = closedform::solve_R(closedform::Which::omega0, order + 2);
    VSeries G = closedform::compute_G(Rfull);
    TSeries<Rat> Gv = specialize(G, Rat(0), Rat(1));
    TSeries<Rat> lhs = (Gv + Gv + TSeries<Rat>::constant(Gv.order(), Rat(1))).shifted_t(2);
    lhs.scale(Rat(2));
    TSeries<Rat> rhs = TSeries<Rat>::t_power(lhs.order(), 1, Rat(1)) -
                       specialize(Rfull, Rat(0), Rat(1)).truncated(lhs.order());
    bool ok = lhs.truncated(order) == rhs.truncated(order);
    // and the identity survives differentiation
    ok = ok && (lhs.derivative().truncated(order - 1) == rhs.derivative().truncated(order - 1));
    out.ok = ok;
    if (!ok) out.detail = "2t^2(2G+1) = t - R0 fails";
    return out;
}

} // namespace dalg
} // namespace qeo
