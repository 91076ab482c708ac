#include "qeo/closedform.hpp"

#include <stdexcept>

namespace qeo {
namespace closedform {

namespace {

Rat series_coef(Which which, long n, long k)
{
    Int w = which == Which::omega0 ? binomial(2 * n + k, n) : binomial(3 * n + 2 * k, n + k);
    Rat c(binomial(2 * n, n) * binomial(2 * n + k, k) * w, Int(n + 1));
    c.canonicalize();
    return c;
}

VSeries u_series(int order) { return VSeries::t_power(order, 1, BivarPoly::v() - BivarPoly::one()); }

// sum over n,k of coef(n,k) * u^k * R^{n+1}, with per-term binomial weight
// W(n,k) selected by `kind`; only terms with n+1+k <= order contribute.
VSeries double_sum(const VSeries& R, int order,
                   const std::function<Rat(long, long)>& coef, bool skip_nk0)
{
    VSeries acc = VSeries::zero(order);
    const VSeries u = u_series(order);
    VSeries rpow = R.truncated(order); // R^{n+1} starting at n=0
    for (long n = 0; n + 1 <= order; ++n) {
        if (n > 0) rpow = rpow * R;
        VSeries term = rpow;
        for (long k = 0; n + 1 + k <= order; ++k) {
            if (k > 0) term = term * u;
            if (skip_nk0 && n == 0 && k == 0) continue;
            VSeries t2 = term;
            t2.scale(BivarPoly(coef(n, k)));
            acc += t2;
        }
    }
    return acc;
}

} // namespace

VSeries omega_defect(Which which, const VSeries& R)
{
    const int N = R.order();
    VSeries omega = double_sum(R, N, [&](long n, long k) { return series_coef(which, n, k); }, false);
    return VSeries::t_power(N, 1, BivarPoly::one()) - omega;
}

VSeries solve_R(Which which, int order)
{
    if (order < 1) throw std::domain_error("solve_R: order must be >= 1");
    VSeries R = VSeries::t_power(order, 1, BivarPoly::one());
    for (int pass = 2; pass <= order; ++pass) R += omega_defect(which, R);
    if (!omega_defect(which, R).is_zero()) throw std::logic_error("solve_R: fixed point did not converge");
    return R;
}

VSeries compute_G(const VSeries& R0)
{
    const int N = R0.order();
    VSeries sum = double_sum(
        R0, N, [&](long n, long k) {
            Rat c(binomial(2 * n, n) * binomial(2 * n + k, k) * binomial(2 * n + k - 1, n), Int(n + 1));
            c.canonicalize();
            return c;
        },
        true);
    VSeries G = sum.shifted_t(-2);
    G.scale(BivarPoly(rat(1, 2)));
    G -= VSeries::constant(G.order(), BivarPoly(rat(1, 2)) * BivarPoly::v());

    // alternative identity 2t^2(2G+v) = t - R0 + sum(...) with shifted weights
    VSeries lhs = G + G + VSeries::constant(G.order(), BivarPoly::v());
    lhs = lhs.shifted_t(2);
    lhs.scale(BivarPoly(2)); // 2 t^2 (2G+v)
    VSeries alt = double_sum(
        R0, N, [&](long n, long k) {
            Rat c(binomial(2 * n, n) * binomial(2 * n + k, k) * binomial(2 * n + k + 1, n), Int(n + 1));
            c.canonicalize();
            return c;
        },
        false);
    alt = (alt * u_series(N)).truncated(lhs.order());
    VSeries rhs = VSeries::t_power(N, 1, BivarPoly::one()).truncated(lhs.order()) - R0.truncated(lhs.order()) + alt;
    if (lhs != rhs) throw std::logic_error("compute_G: alternative identity failed");
    return G;
}

VSeries compute_Q1(const VSeries& R1)
{
    const int N = R1.order();
    VSeries sum = double_sum(
        R1, N, [&](long n, long k) {
            if (n + k == 0) return Rat(0);
            Rat c(binomial(2 * n, n) * binomial(2 * n + k, k) * binomial(3 * n + 2 * k - 1, n + k - 1), Int(n + 1));
            c.canonicalize();
            return c;
        },
        true);
    VSeries Q1 = sum.shifted_t(-2);
    Q1 -= VSeries::constant(Q1.order(), BivarPoly::v());

    // 3 t^2 (Q1 + v) = t - R1 + sum(...)
    VSeries lhs = Q1 + VSeries::constant(Q1.order(), BivarPoly::v());
    lhs = lhs.shifted_t(2);
    lhs.scale(BivarPoly(3));
    VSeries alt = double_sum(
        R1, N, [&](long n, long k) {
            Rat c(binomial(2 * n, n) * binomial(2 * n + k, k) * binomial(3 * n + 2 * k + 1, n + k + 1), Int(n + 1));
            c.canonicalize();
            return c;
        },
        false);
    alt = (alt * u_series(N)).truncated(lhs.order());
    VSeries rhs = VSeries::t_power(N, 1, BivarPoly::one()).truncated(lhs.order()) - R1.truncated(lhs.order()) + alt;
    if (lhs != rhs) throw std::logic_error("compute_Q1: alternative identity failed");
    return Q1;
}

XSeries explicit_M(Which which, const VSeries& R, int order, int x_max)
{
    XSeries M(order);
    M.add_coeff(1, LaurentX::monomial(-1, BivarPoly::v() - BivarPoly::one()));
    const VSeries u = u_series(order);
    VSeries rpow = R.truncated(order);
    for (long n = 0; n + 1 <= order; ++n) {
        if (n > 0) rpow = rpow * R;
        VSeries base = rpow;
        for (long k = 0; n + 1 + k <= order; ++k) {
            if (k > 0) base = base * u;
            Rat c0(binomial(2 * n, n) * binomial(2 * n + k, k), Int(n + 1));
            c0.canonicalize();
            for (long j = 0; j - n - k - 1 <= x_max; ++j) {
                Int w = which == Which::omega0 ? binomial(n + j, n) : binomial(2 * n + k + j, j);
                Rat c = c0 * Rat(w);
                if (qeo::is_zero(c)) continue;
                const int e = static_cast<int>(j - n - k - 1);
                for (int m = 0; m <= order; ++m) {
                    BivarPoly coeff = base.coeff(m) * c;
                    if (!coeff.is_zero()) M.add_coeff(m, LaurentX::monomial(e, coeff));
                }
            }
        }
    }
    return M;
}

XSeries solve_tree_U(Which which, int order, int x_window)
{
    // contributions to exponent c at order n involve factor exponents down to
    // roughly c - order, so the internal window is padded and the result is
    // cut back to the requested one
    const int W = x_window + order + 2;
    auto trunc = [&](const XSeries& f) {
        return f.map([&](const LaurentX& c) { return c.part(-W, W); });
    };
    auto final_cut = [&](const XSeries& f) {
        return f.map([&](const LaurentX& c) { return c.part(-x_window, x_window); });
    };
    XSeries U = XSeries::zero(order);
    const LaurentX x_mono = LaurentX::monomial(1, BivarPoly::one());
    const LaurentX xinv = LaurentX::monomial(-1, BivarPoly::one());
    const LaurentX x_plus_xinv = x_mono + xinv;

    if (which == Which::omega0) {
        for (int pass = 1; pass <= order; ++pass) {
            XSeries U0 = U.map([](const LaurentX& c) { return LaurentX(c.coeff(0)); });
            XSeries A = U - U0;
            A.add_coeff(1, LaurentX(BivarPoly::one())); // t + U - U0
            XSeries B = U - U0;
            B = B.map([&](const LaurentX& c) { return c * x_plus_xinv; });
            B.add_coeff(1, x_mono + xinv * BivarPoly::v()); // tx + tv/x + (x+1/x)(U-U0)
            XSeries rhs = A * B;
            rhs = rhs.map([&](const LaurentX& c) { return c * x_plus_xinv; });
            U = trunc(rhs);
        }
        return final_cut(U);
    }

    // unary/binary: the term (1/x)(t+U-U0) references the current t-order, so
    // each order is finished by a downward substitution over x-exponents.
    for (int n = 1; n <= order; ++n) {
        XSeries U0 = U.map([](const LaurentX& c) { return LaurentX(c.coeff(0)); });
        XSeries A = U - U0;
        A.add_coeff(1, LaurentX(BivarPoly::one())); // t + U - U0
        XSeries B = U - U0;
        B.add_coeff(1, LaurentX(BivarPoly::v())); // tv + U - U0
        XSeries prod = A * B;
        LaurentX K = prod.coeff(n) * x_mono; // binary-root contribution at order n
        if (n == 1) K.add_coeff(-1, BivarPoly::one()); // unary root over a bare leaf

        // solve L = K + (1/x)(L - L0) downward from the top exponent
        LaurentX L;
        BivarPoly L0; // [x^0]L, known once the recursion passes exponent 0
        for (int c = W; c >= -W; --c) {
            BivarPoly val = K.coeff(c) + L.coeff(c + 1);
            if (c + 1 == 0) val = val - L0;
            if (c == 0) L0 = val;
            L.set_coeff(c, val);
        }
        U.set_coeff(n, L);
    }
    return final_cut(U);
}

} // namespace closedform
} // namespace qeo
