#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeo/sixvertex.hpp"

#include <cmath>

using namespace qeo;

namespace {

OmegaPoly wpoly(std::initializer_list<long> coeffs)
{
    std::vector<Rat> v;
    for (long c : coeffs) v.push_back(Rat(c));
    return OmegaPoly(std::move(v));
}

} // namespace

TEST_CASE("Chebyshev-type sequences match the trigonometric identities numerically")
{
    // s_n = sin((2n+1)a)/sin(a), c_n = cos((2n+1)a)/cos(a) at omega = -2cos(2a)
    const double a = M_PI / 5.0;
    const double w = -2.0 * std::cos(2 * a);
    OmegaPoly s_prev(-1), s(1), c_prev(1), c(1);
    const OmegaPoly mw = OmegaPoly(0) - OmegaPoly::omega();
    for (int n = 0; n <= 6; ++n) {
        double s_expect = std::sin((2 * n + 1) * a) / std::sin(a);
        double c_expect = std::cos((2 * n + 1) * a) / std::cos(a);
        CHECK(std::abs(s.eval_double(w) - s_expect) < 1e-12);
        CHECK(std::abs(c.eval_double(w) - c_expect) < 1e-12);
        OmegaPoly sn = mw * s - s_prev, cn = mw * c - c_prev;
        s_prev = s;
        s = sn;
        c_prev = c;
        c = cn;
    }
    // s_1 = 1 - omega, c_1 = -1 - omega
    CHECK(wpoly({1, -1}) == (mw * OmegaPoly(1) - OmegaPoly(-1)));
    CHECK(wpoly({-1, -1}) == (mw * OmegaPoly(1) - OmegaPoly(1)));
}

TEST_CASE("theta'(0) series")
{
    auto th = sixvertex::theta_ratios(8);
    // A0 = 1 - 3q + 5q^3 - 7q^6 + ...
    CHECK(th.A0.coeff(0) == OmegaPoly(1));
    CHECK(th.A0.coeff(1) == OmegaPoly(-3));
    CHECK(th.A0.coeff(2).is_zero());
    CHECK(th.A0.coeff(3) == OmegaPoly(5));
    CHECK(th.A0.coeff(6) == OmegaPoly(-7));
    // A lies in 1 + q Z[omega][[q]]
    CHECK(th.A.coeff(0) == OmegaPoly(1));
    for (int n = 1; n <= 8; ++n) CHECK(th.A.coeff(n).integer_coeffs());
}

TEST_CASE("q(t) reversion reproduces the printed expansion")
{
    auto sv = sixvertex::solve(6);
    CHECK(sv.q_of_t.coeff(1) == OmegaPoly(1));
    CHECK(sv.q_of_t.coeff(2) == wpoly({6, 6}));
    CHECK(sv.q_of_t.coeff(3) == wpoly({48, 84, 45}));
    CHECK(sv.q_of_t.coeff(4) == wpoly({436, 1076, 998, 378}));
    // omega-degree of [q^n] t(q) is at most n-1, and q(t) has integer coefficients
    auto th = sixvertex::theta_ratios(8);
    QSeries tq = sixvertex::t_of_q(th);
    for (int n = 1; n <= 8; ++n) CHECK(tq.coeff(n).degree() <= n - 1);
    for (int n = 1; n <= 6; ++n) CHECK(sv.q_of_t.coeff(n).integer_coeffs());
}

TEST_CASE("Rtilde and Qtilde printed expansions")
{
    auto sv = sixvertex::solve(6);
    // Rtilde = t - (w+2)t^2 - 2(w+2)(1+w)t^3 - (w+2)(9w^2+16w+10)t^4 + ...
    CHECK(sv.Rtilde.coeff(1) == OmegaPoly(1));
    CHECK(sv.Rtilde.coeff(2) == wpoly({-2, -1}));
    CHECK(sv.Rtilde.coeff(3) == wpoly({-4, -6, -2}));
    CHECK(sv.Rtilde.coeff(4) == wpoly({-20, -42, -34, -9}));
    // Qtilde = (2+2w)t + (9w^2+16w+10)t^2 + (54w^3+132w^2+150w+66)t^3 + ...
    CHECK(sv.Qtilde.coeff(1) == wpoly({2, 2}));
    CHECK(sv.Qtilde.coeff(2) == wpoly({10, 16, 9}));
    CHECK(sv.Qtilde.coeff(3) == wpoly({66, 150, 132, 54}));
}

TEST_CASE("Qtilde equals onecat's Q at v=1, coefficientwise in omega")
{
    const int N = 8;
    auto sv = sixvertex::solve(N);
    onecat::MOptions opt;
    opt.order = N + 2;
    opt.v = BivarPoly(1);
    XSeries M = onecat::compute_M(opt);
    XSeries F = onecat::compute_F(M, opt);
    VSeries Q = onecat::extract_Q(M, F, opt);
    VSeries Qtilde = omega_series_to_bivar(sv.Qtilde);
    CHECK(Qtilde == Q.truncated(Qtilde.order()));
}

TEST_CASE("Qtilde specialisations: omega=1 gives Q1(t,1), omega=0 gives 2G(t,1)")
{
    auto sv = sixvertex::solve(7);
    // known v=1 sequence: Q1(t,1) = 4t + 35t^2 + 402t^3 + ...
    CHECK(sv.Qtilde.coeff(1).eval(Rat(1)) == Rat(4));
    CHECK(sv.Qtilde.coeff(2).eval(Rat(1)) == Rat(35));
    CHECK(sv.Qtilde.coeff(3).eval(Rat(1)) == Rat(402));
    // at omega=0: 2G(t,1) = 2t + 10t^2 + 66t^3
    CHECK(sv.Qtilde.coeff(1).eval(Rat(0)) == Rat(2));
    CHECK(sv.Qtilde.coeff(2).eval(Rat(0)) == Rat(10));
    CHECK(sv.Qtilde.coeff(3).eval(Rat(0)) == Rat(66));
}

TEST_CASE("omega = -1 algebraicity suite")
{
    auto verdict = sixvertex::verify_omega_minus1(8);
    CHECK_MESSAGE(verdict.ok, verdict.detail);
}
