#include "qeo/sixvertex.hpp"

#include <sstream>
#include <stdexcept>

namespace qeo {
namespace sixvertex {

ThetaRatios theta_ratios(int order)
{
    ThetaRatios th;
    th.order = order;
    th.A = QSeries::zero(order);
    th.B = QSeries::zero(order);
    th.C = QSeries::zero(order);
    th.D = QSeries::zero(order);
    th.A0 = QSeries::zero(order);
    th.D0 = QSeries::zero(order);

    OmegaPoly s_prev(-1), s(1);  // s_{-1}, s_0
    OmegaPoly c_prev(1), c(1);   // c_{-1}, c_0
    const OmegaPoly mw = OmegaPoly(0) - OmegaPoly::omega();
    for (long n = 0;; ++n) {
        long expo = n * (n + 1) / 2;
        if (expo > order) break;
        const long sign = (n % 2 == 0) ? 1 : -1;
        const long m = 2 * n + 1;
        th.A.add_coeff(expo, c * OmegaPoly(sign * m));
        th.B.add_coeff(expo, s * OmegaPoly(sign));
        th.C.add_coeff(expo, s * OmegaPoly(-sign * m * m));
        th.D.add_coeff(expo, c * OmegaPoly(-sign * m * m * m));
        th.A0.add_coeff(expo, OmegaPoly(sign * m));
        th.D0.add_coeff(expo, OmegaPoly(-sign * m * m * m));
        OmegaPoly s_next = mw * s - s_prev;
        OmegaPoly c_next = mw * c - c_prev;
        s_prev = s;
        s = s_next;
        c_prev = c;
        c = c_next;
    }
    return th;
}

namespace {

QSeries div_omega_plus_2(const QSeries& f)
{
    return f.map([](const OmegaPoly& p) { return p.divexact_omega_plus(Rat(2)); });
}

} // namespace

QSeries t_of_q(const ThetaRatios& th)
{
    QSeries Ainv = ts_inverse(th.A, OmegaPoly::one());
    QSeries t = th.C * Ainv - th.B * th.D * Ainv * Ainv;
    t = div_omega_plus_2(t);
    t.scale(OmegaPoly(rat(1, 16)));
    if (!t.coeff(0).is_zero() || t.coeff(1) != OmegaPoly::one())
        throw std::logic_error("t_of_q: expected t = q + O(q^2)");
    return t;
}

QSeries q_of_t(const QSeries& tq) { return ts_reversion(tq); }

QSeries Rtilde_q(const ThetaRatios& th)
{
    QSeries Ainv = ts_inverse(th.A, OmegaPoly::one());
    QSeries A0inv = ts_inverse(th.A0, OmegaPoly::one());
    QSeries BA = th.B * Ainv;
    QSeries r = BA * BA * (th.D0 * A0inv - th.D * Ainv);
    r = div_omega_plus_2(r);
    r.scale(OmegaPoly(rat(1, 24)));
    return r;
}

SixVertexSeries solve(int order)
{
    ThetaRatios th = theta_ratios(order + 1);
    SixVertexSeries out;
    QSeries tq = t_of_q(th).truncated(order);
    out.q_of_t = q_of_t(tq);
    out.Rtilde = ts_compose(Rtilde_q(th).truncated(order), out.q_of_t);
    // Qtilde = (t - Rtilde)/((omega+2) t^2) - 1
    QSeries num = QSeries::t_power(order, 1, OmegaPoly::one()) - out.Rtilde;
    num = div_omega_plus_2(num).shifted_t(-2);
    num -= QSeries::constant(num.order(), OmegaPoly::one());
    out.Qtilde = num;
    return out;
}

onecat::Verdict verify_omega_minus1(int order)
{
    onecat::Verdict verdict;
    auto fail = [&](const std::string& msg) {
        verdict.ok = false;
        if (!verdict.detail.empty()) verdict.detail += "; ";
        verdict.detail += msg;
    };

    const int N = order;
    onecat::MOptions opt;
    opt.order = N;
    opt.x_max = 2 * N + 6;
    opt.omega = BivarPoly(-1);
    opt.v = BivarPoly(1);
    XSeries M = onecat::compute_M(opt);
    XSeries F = onecat::compute_F(M, opt);

    using RS = TSeries<Rat>;
    auto to_rat = [](const VSeries& f) {
        return f.map([](const BivarPoly& p) {
            if (!p.is_constant()) throw std::logic_error("expected a numeric series");
            return p.constant_term();
        });
    };
    RS R = to_rat(x_coefficient(F, 0));
    RS F1 = to_rat(x_coefficient(F, 1));

    // (i) F'(0) = ((1+8R)^{3/2} - 1 - 12R + 8R^2) / (16R)
    {
        RS u = R;
        u.scale(Rat(8));
        u.add_coeff(0, Rat(1)); // 1 + 8R
        RS root = ts_sqrt(u, Rat(1), rat(1, 2));
        RS pow32 = root * u;
        RS num = pow32;
        num.add_coeff(0, Rat(-1));
        RS r12 = R;
        r12.scale(Rat(12));
        num -= r12;
        RS r8 = R * R;
        r8.scale(Rat(8));
        num += r8;
        // divide by 16R: valuation shift by 1
        RS den = R;
        den.scale(Rat(16));
        if (num.valuation() < 1) fail("F'(0) closed form: numerator not a multiple of t");
        RS quot = num.shifted_t(-1) * ts_inverse(den.shifted_t(-1), Rat(1 / den.coeff(1)));
        if (!(quot == F1.truncated(quot.order()))) fail("F'(0) closed form mismatch");
    }

    // S with R = S(1+2S): S = (sqrt(1+8R)-1)/4
    RS S;
    {
        RS u = R;
        u.scale(Rat(8));
        u.add_coeff(0, Rat(1));
        RS root = ts_sqrt(u, Rat(1), rat(1, 2));
        root.add_coeff(0, Rat(-1));
        root.scale(rat(1, 4));
        S = root;
        RS back = S * (S + S + RS::constant(S.order(), Rat(1))); // S(1+2S)
        if (!(back == R.truncated(back.order()))) fail("R = S(1+2S) inversion failed");
    }

    // (ii) closed form F(x) = x^2 - x + (R + (S+2x-x^2) sqrt((1-x)^2+4S+4S^2))/(2-x)
    {
        const int xw = opt.x_max - N - 2; // trusted x-window for the comparison
        XSeries arg(N);
        LaurentX sq = LaurentX(BivarPoly::one()) - LaurentX::monomial(1, BivarPoly(2)) +
                      LaurentX::monomial(2, BivarPoly::one()); // (1-x)^2
        arg.set_coeff(0, sq);
        for (int n = 1; n <= N; ++n) {
            Rat c = 4 * (S.coeff(n) + (S * S).coeff(n));
            arg.add_coeff(n, LaurentX(BivarPoly(c)));
        }
        // sqrt with constant term (1-x)
        LaurentX s0 = LaurentX(BivarPoly::one()) - LaurentX::monomial(1, BivarPoly::one());
        LaurentX inv_two_s0 = laurent_inverse(s0 + s0, BivarPoly(rat(1, 2)), opt.x_max);
        XSeries W = ts_sqrt(arg, s0, inv_two_s0);
        W = W.map([&](const LaurentX& c) { return c.truncate_above(opt.x_max); });
        // (S + 2x - x^2)
        XSeries pre(N);
        pre.set_coeff(0, LaurentX::monomial(1, BivarPoly(2)) - LaurentX::monomial(2, BivarPoly::one()));
        for (int n = 1; n <= N; ++n) pre.add_coeff(n, LaurentX(BivarPoly(S.coeff(n))));
        XSeries num = pre * W;
        for (int n = 0; n <= N; ++n) num.add_coeff(n, LaurentX(BivarPoly(R.coeff(n))));
        // divide by (2-x)
        LaurentX two_minus_x = LaurentX(BivarPoly(2)) - LaurentX::monomial(1, BivarPoly::one());
        LaurentX inv2mx = laurent_inverse(two_minus_x, BivarPoly(rat(1, 2)), opt.x_max);
        XSeries closed = num.map([&](const LaurentX& c) { return (c * inv2mx).truncate_above(opt.x_max); });
        closed.add_coeff(0, LaurentX::monomial(2, BivarPoly::one()) - LaurentX::monomial(1, BivarPoly::one()));
        bool ok = true;
        for (int n = 0; n <= N && ok; ++n) {
            int cap = std::min(xw, opt.x_max - n) - 2;
            ok = closed.coeff(n).part(0, cap) == F.coeff(n).part(0, cap);
        }
        if (!ok) fail("closed-form F(x) mismatch");
    }

    // (iii) invariant identity B(x) = 54 R A(x) + 27 R (R - 2F'(0) - 4)
    {
        // A(x) = x^2 - x - F(x)/x, B(x) = 27 (x-2) F(x) (F(x)/x + 2 - 2x)
        XSeries Fox = F.map([](const LaurentX& c) { return c.shifted(-1); });
        XSeries Aser = -Fox;
        Aser.add_coeff(0, LaurentX::monomial(2, BivarPoly::one()) - LaurentX::monomial(1, BivarPoly::one()));
        XSeries inner = Fox;
        inner.add_coeff(0, LaurentX(BivarPoly(2)) - LaurentX::monomial(1, BivarPoly(2)));
        XSeries Bser = F * inner;
        LaurentX xm2 = LaurentX::monomial(1, BivarPoly(27)) - LaurentX(BivarPoly(54)); // 27(x-2)
        Bser = Bser.map([&](const LaurentX& c) { return (c * xm2).truncate_above(opt.x_max); });

        XSeries RA(N); // 54 R A(x)
        for (int n = 0; n <= N; ++n) {
            LaurentX acc;
            for (int m = 0; m <= n; ++m) acc += Aser.coeff(m) * BivarPoly(Rat(54) * R.coeff(n - m));
            RA.set_coeff(n, acc);
        }
        RS scal = R * (R - (F1 + F1) - RS::constant(R.order(), Rat(4)));
        scal.scale(Rat(27));
        XSeries rhs2 = RA;
        for (int n = 0; n <= N; ++n) rhs2.add_coeff(n, LaurentX(BivarPoly(scal.coeff(n))));
        bool ok = true;
        for (int n = 0; n <= N && ok; ++n) {
            int cap = opt.x_max - N - 4;
            ok = Bser.coeff(n).part(-2, cap) == rhs2.coeff(n).part(-2, cap);
        }
        if (!ok) fail("invariant identity B = 54 R A + 27 R (R - 2F'(0) - 4) fails");
    }

    // (iv) hypergeometric ODE for t(S):
    // S(S+1)(8S-1)(4S+1) t'' - 4 S(S+1)(8S-1) t' + 2 (4S+1)^2 t = 0
    {
        RS tS = ts_reversion(S);
        RS t1 = tS.derivative();
        RS t2 = t1.derivative();
        auto polyS = [&](std::initializer_list<long> coeffs) {
            RS p(N);
            int k = 0;
            for (long c : coeffs) p.set_coeff(k++, Rat(c));
            return p;
        };
        // S(S+1)(8S-1)(4S+1) = 32S^4 + 36S^3 + 3S^2 - S
        RS c2 = polyS({0, -1, 3, 36, 32});
        // 4 S(S+1)(8S-1) = 32S^3 + 28S^2 - 4S
        RS c1 = polyS({0, -4, 28, 32});
        // 2 (4S+1)^2 = 32S^2 + 16S + 2
        RS c0 = polyS({2, 16, 32});
        RS res = c2 * t2 - c1 * t1 + c0 * tS;
        if (!res.truncated(N - 2).is_zero()) fail("hypergeometric ODE for t(S) fails");
    }

    return verdict;
}

} // namespace sixvertex
} // namespace qeo
