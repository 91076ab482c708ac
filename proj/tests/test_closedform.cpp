#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeo/closedform.hpp"

using namespace qeo;
using closedform::Which;

namespace {

// coefficient of t^n as polynomial built from (deg_omega, deg_v, num, den) rows
BivarPoly poly(std::initializer_list<std::array<long, 4>> rows)
{
    BivarPoly p;
    for (auto& r : rows) p += BivarPoly::monomial(static_cast<int>(r[0]), static_cast<int>(r[1]), rat(r[2], r[3]));
    return p;
}

} // namespace

TEST_CASE("R0 printed expansion")
{
    VSeries R0 = closedform::solve_R(Which::omega0, 5);
    CHECK(R0.coeff(0).is_zero());
    CHECK(R0.coeff(1) == BivarPoly::one());
    CHECK(R0.coeff(2) == poly({{0, 0, -1, 1}, {0, 1, -1, 1}}));
    CHECK(R0.coeff(3) == poly({{0, 0, -1, 1}, {0, 1, -3, 1}}));
    CHECK(R0.coeff(4) == poly({{0, 0, -3, 1}, {0, 1, -14, 1}, {0, 2, -3, 1}}));
    CHECK(closedform::omega_defect(Which::omega0, R0).is_zero());
}

TEST_CASE("R1 printed expansion")
{
    VSeries R1 = closedform::solve_R(Which::omega1, 5);
    CHECK(R1.coeff(1) == BivarPoly::one());
    CHECK(R1.coeff(2) == poly({{0, 0, -1, 1}, {0, 1, -2, 1}}));
    CHECK(R1.coeff(3) == poly({{0, 0, -2, 1}, {0, 1, -8, 1}, {0, 2, -2, 1}}));
    CHECK(R1.coeff(4) == poly({{0, 0, -9, 1}, {0, 1, -56, 1}, {0, 2, -36, 1}, {0, 3, -4, 1}}));
    CHECK(closedform::omega_defect(Which::omega1, R1).is_zero());
}

TEST_CASE("G printed expansion and v=1 reduction")
{
    VSeries R0 = closedform::solve_R(Which::omega0, 8);
    VSeries G = closedform::compute_G(R0);
    // G = tv + v(v+4)t^2 + v(v+10)(v+2)t^3 + v(v^3+24v^2+115v+112)t^4 + ...
    CHECK(G.coeff(1) == BivarPoly::v());
    CHECK(G.coeff(2) == poly({{0, 2, 1, 1}, {0, 1, 4, 1}}));
    CHECK(G.coeff(3) == poly({{0, 3, 1, 1}, {0, 2, 12, 1}, {0, 1, 20, 1}}));
    CHECK(G.coeff(4) == poly({{0, 4, 1, 1}, {0, 3, 24, 1}, {0, 2, 115, 1}, {0, 1, 112, 1}}));

    // [t^1]G at v=1 is 1: one rooted Eulerian orientation with one edge
    CHECK(G.coeff(1).eval(Rat(0), Rat(1)) == Rat(1));

    // at v=1:  2t^2(2G+1) = t - R0
    TSeries<Rat> G1 = specialize(G, Rat(0), Rat(1));
    TSeries<Rat> lhs = (G1 + G1 + TSeries<Rat>::constant(G1.order(), Rat(1))).shifted_t(2);
    lhs.scale(Rat(2));
    TSeries<Rat> R01 = specialize(R0, Rat(0), Rat(1)).truncated(lhs.order());
    CHECK(lhs == TSeries<Rat>::t_power(lhs.order(), 1, Rat(1)) - R01);
}

TEST_CASE("Q1 printed expansion and v=1 reduction")
{
    VSeries R1 = closedform::solve_R(Which::omega1, 8);
    VSeries Q1 = closedform::compute_Q1(R1);
    // Q1 = v(v+3)t + v(v+6)(2v+3)t^2 + v(v+1)(5v^2+61v+135)t^3 + ...
    CHECK(Q1.coeff(1) == poly({{0, 2, 1, 1}, {0, 1, 3, 1}}));
    CHECK(Q1.coeff(2) == poly({{0, 3, 2, 1}, {0, 2, 15, 1}, {0, 1, 18, 1}}));
    CHECK(Q1.coeff(3) == poly({{0, 4, 5, 1}, {0, 3, 66, 1}, {0, 2, 196, 1}, {0, 1, 135, 1}}));

    // [t^1]Q1 at v=1 -> 4 one-vertex quartic orientations
    CHECK(Q1.coeff(1).eval(Rat(0), Rat(1)) == Rat(4));

    // at v=1: 3t^2(Q1+1) = t - R1
    TSeries<Rat> q1 = specialize(Q1, Rat(0), Rat(1));
    TSeries<Rat> lhs = (q1 + TSeries<Rat>::constant(q1.order(), Rat(1))).shifted_t(2);
    lhs.scale(Rat(3));
    TSeries<Rat> r11 = specialize(R1, Rat(0), Rat(1)).truncated(lhs.order());
    CHECK(lhs == TSeries<Rat>::t_power(lhs.order(), 1, Rat(1)) - r11);
}

TEST_CASE("v=1 collapses the R0 sum to k=0 terms")
{
    // at v=1 only k=0 survives: t = sum 1/(n+1) C(2n,n)^2 R^{n+1}
    VSeries R0 = closedform::solve_R(Which::omega0, 7);
    TSeries<Rat> R = specialize(R0, Rat(0), Rat(1));
    TSeries<Rat> acc = TSeries<Rat>::zero(7);
    TSeries<Rat> rpow = TSeries<Rat>::constant(7, Rat(1));
    for (long n = 0; n + 1 <= 7; ++n) {
        rpow = rpow * R;
        TSeries<Rat> term = rpow;
        Rat c(binomial(2 * n, n) * binomial(2 * n, n), Int(n + 1));
        c.canonicalize();
        term.scale(c);
        acc += term;
    }
    CHECK(acc == TSeries<Rat>::t_power(7, 1, Rat(1)));
}

TEST_CASE("explicit M(y): [y^{-1}] is tv and leading term matches")
{
    VSeries R0 = closedform::solve_R(Which::omega0, 6);
    XSeries M = closedform::explicit_M(Which::omega0, R0, 6, 8);
    // [y^{-1}] M = tv exactly
    TSeries<BivarPoly> ym1 = x_coefficient(M, -1);
    CHECK(ym1 == VSeries::t_power(6, 1, BivarPoly::v()));

    VSeries R1 = closedform::solve_R(Which::omega1, 6);
    XSeries M1 = closedform::explicit_M(Which::omega1, R1, 6, 8);
    CHECK(x_coefficient(M1, -1) == VSeries::t_power(6, 1, BivarPoly::v()));
}

TEST_CASE("tree equation solutions: U0 = t - R and printed small coefficients")
{
    const int N = 8;
    XSeries Ub = closedform::solve_tree_U(Which::omega0, N, N + 4);
    VSeries U0 = x_coefficient(Ub, 0);
    VSeries R0 = closedform::solve_R(Which::omega0, N);
    CHECK(U0 == VSeries::t_power(N, 1, BivarPoly::one()) - R0);
    // [t^2] -> 1+v, [t^3] -> 1+3v (Fig. 8 counts)
    CHECK(U0.coeff(2) == poly({{0, 0, 1, 1}, {0, 1, 1, 1}}));
    CHECK(U0.coeff(3) == poly({{0, 0, 1, 1}, {0, 1, 3, 1}}));

    XSeries Uu = closedform::solve_tree_U(Which::omega1, N, N + 4);
    VSeries U0u = x_coefficient(Uu, 0);
    VSeries R1 = closedform::solve_R(Which::omega1, N);
    CHECK(U0u == VSeries::t_power(N, 1, BivarPoly::one()) - R1);
    // [t^3] -> 2(1+4v+v^2) (Fig. 9)
    CHECK(U0u.coeff(3) == poly({{0, 0, 2, 1}, {0, 1, 8, 1}, {0, 2, 2, 1}}));

    // binary: x^2/(1+x^2) U(x) at [x^0] equals t^2(v+2G)
    // i.e. U_tilde = (x^2 U)/(1+x^2): solve by geometric expansion in x^2 within the window
    // charge-1 unary/binary: [x^1]U = t^2(v+Q1)
    VSeries charge1 = x_coefficient(Uu, 1);
    VSeries Q1 = closedform::compute_Q1(closedform::solve_R(Which::omega1, N + 2));
    VSeries expect = (Q1 + VSeries::constant(Q1.order(), BivarPoly::v())).shifted_t(2).truncated(N);
    CHECK(charge1 == expect);
}

TEST_CASE("binary half-sum relation [x^0](x^2/(1+x^2) U) = t^2(v+2G)")
{
    const int N = 8, W = N + 6;
    XSeries U = closedform::solve_tree_U(Which::omega0, N, W);
    // 1/(1+x^2) within the window: alternating geometric series in x^2
    LaurentX inv1px2;
    for (int k = 0; 2 * k <= 2 * W; ++k) inv1px2.add_coeff(2 * k, BivarPoly(Rat(k % 2 == 0 ? 1 : -1)));
    XSeries Ut = U.map([&](const LaurentX& c) { return (c.shifted(2) * inv1px2).part(-W, W); });
    VSeries lhs = x_coefficient(Ut, 0);

    VSeries R0 = closedform::solve_R(Which::omega0, N + 2);
    VSeries G = closedform::compute_G(R0);
    VSeries rhs = (G + G + VSeries::constant(G.order(), BivarPoly::v())).shifted_t(2).truncated(N);
    CHECK(lhs == rhs);
}

TEST_CASE("window widening leaves tree solutions unchanged")
{
    const int N = 6;
    XSeries a = closedform::solve_tree_U(Which::omega1, N, N + 4);
    XSeries b = closedform::solve_tree_U(Which::omega1, N, N + 8);
    for (int n = 0; n <= N; ++n) CHECK(a.coeff(n).part(-(N + 4), N + 4) == b.coeff(n).part(-(N + 4), N + 4));
}
