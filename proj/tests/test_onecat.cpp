#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeo/closedform.hpp"
#include "qeo/onecat.hpp"
#include "qeo/oracles.hpp"

using namespace qeo;

namespace {

BivarPoly poly(std::initializer_list<std::array<long, 4>> rows)
{
    BivarPoly p;
    for (auto& r : rows) p += BivarPoly::monomial(static_cast<int>(r[0]), static_cast<int>(r[1]), rat(r[2], r[3]));
    return p;
}

// exact fit of a window of a Laurent coefficient against the basis
// {x^{-j}} ∪ {(1-x)^{-j}}: returns true when the whole window is matched
bool fits_poly_basis(const LaurentX& c, int n, int x_max)
{
    LaurentX rest = c;
    for (int j = 1; j <= n; ++j) {
        BivarPoly a = rest.coeff(-j);
        if (!a.is_zero()) rest -= LaurentX::monomial(-j, a);
    }
    if (!rest.empty() && rest.min_exp() < 0) return false;
    // solve sum_j b_j / (1-x)^j = rest on x^0..x^{jmax-1} (dense little
    // Gaussian elimination with rational matrix, polynomial right-hand side);
    // the power of 1/(1-x) in [t^n]M reaches 2n-1
    const int jmax = 2 * n;
    std::vector<std::vector<Rat>> A(jmax, std::vector<Rat>(jmax));
    std::vector<BivarPoly> rhs(jmax);
    for (int k = 0; k < jmax; ++k) {
        for (int j = 1; j <= jmax; ++j) A[k][j - 1] = Rat(binomial(j - 1 + k, k));
        rhs[k] = rest.coeff(k);
    }
    for (int col = 0; col < jmax; ++col) {
        int piv = -1;
        for (int r = col; r < jmax; ++r)
            if (!is_zero(A[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(A[col], A[piv]);
        std::swap(rhs[col], rhs[piv]);
        Rat inv = 1 / A[col][col];
        for (int c2 = col; c2 < jmax; ++c2) A[col][c2] *= inv;
        rhs[col].scale(inv);
        for (int r = 0; r < jmax; ++r) {
            if (r == col || is_zero(A[r][col])) continue;
            Rat f = A[r][col];
            for (int c2 = col; c2 < jmax; ++c2) A[r][c2] -= f * A[col][c2];
            rhs[r] -= rhs[col] * f;
        }
    }
    LaurentX rebuilt;
    for (int j = 1; j <= jmax; ++j) {
        if (rhs[j - 1].is_zero()) continue;
        rebuilt += expand_inv_one_minus_x(j, x_max) * rhs[j - 1];
    }
    return rebuilt == rest;
}

} // namespace

TEST_CASE("printed M expansion at t^1 and t^2")
{
    onecat::MOptions opt;
    opt.order = 4;
    XSeries M = onecat::compute_M(opt);
    const int xm = opt.effective_x_max();

    LaurentX t1 = LaurentX::monomial(-1, BivarPoly::v()) + expand_inv_one_minus_x(1, xm);
    CHECK(M.coeff(1) == t1);

    LaurentX t2 = LaurentX::monomial(-2, BivarPoly::v()) +
                  expand_inv_one_minus_x(2, xm) * (BivarPoly::omega() * BivarPoly::v() + BivarPoly::one()) +
                  expand_inv_one_minus_x(3, xm) * BivarPoly::omega();
    CHECK(M.coeff(2) == t2);
}

TEST_CASE("[x^{-1}] M = tv exactly")
{
    onecat::MOptions opt;
    opt.order = 8;
    XSeries M = onecat::compute_M(opt);
    CHECK(x_coefficient(M, -1) == VSeries::t_power(8, 1, BivarPoly::v()));
    // and [x^{-2}] at t^1 is zero
    CHECK(x_coefficient(M, -2).coeff(1).is_zero());
}

TEST_CASE("F(0) printed series and F has no negative part")
{
    onecat::MOptions opt;
    opt.order = 6;
    XSeries M = onecat::compute_M(opt);
    XSeries F = onecat::compute_F(M, opt); // throws on a negative exponent
    VSeries F0 = x_coefficient(F, 0);
    CHECK(F0.coeff(1) == BivarPoly::one());
    CHECK(F0.coeff(2) == poly({{1, 1, -1, 1}, {0, 1, -1, 1}, {0, 0, -1, 1}}));
    // -(w+1)(w v^2 + w v + 3v + 1)
    BivarPoly c3 = -((BivarPoly::omega() + BivarPoly::one()) *
                     poly({{1, 2, 1, 1}, {1, 1, 1, 1}, {0, 1, 3, 1}, {0, 0, 1, 1}}));
    CHECK(F0.coeff(3) == c3);

    // t - F(0) has non-negative coefficients
    VSeries tf = VSeries::t_power(6, 1, BivarPoly::one()) - F0;
    for (int n = 0; n <= 6; ++n)
        for (auto& [k, c] : tf.coeff(n).terms()) CHECK(sgn(c) > 0);
}

TEST_CASE("Q from onecat matches the oracle and the printed expansion")
{
    onecat::MOptions opt;
    opt.order = 7;
    XSeries M = onecat::compute_M(opt);
    XSeries F = onecat::compute_F(M, opt);
    VSeries Q = onecat::extract_Q(M, F, opt);

    CHECK(Q.coeff(1) == poly({{1, 2, 1, 1}, {1, 1, 1, 1}, {0, 1, 2, 1}}));
    CHECK(Q.coeff(2) == poly({{2, 3, 2, 1}, {2, 2, 5, 1}, {2, 1, 2, 1}, {1, 2, 8, 1}, {1, 1, 8, 1}, {0, 2, 2, 1}, {0, 1, 8, 1}}));

    VSeries oracle = oracles::count_partial_orientations(4);
    for (int e = 1; e <= 4; ++e) CHECK(Q.coeff(e) == oracle.coeff(e));
}

TEST_CASE("omega specialisations agree with the closed forms")
{
    const int N = 8;
    onecat::MOptions opt0;
    opt0.order = N;
    opt0.omega = BivarPoly(0);
    XSeries M0 = onecat::compute_M(opt0);
    XSeries F0 = onecat::compute_F(M0, opt0);
    VSeries Q0 = onecat::extract_Q(M0, F0, opt0);
    VSeries R0 = closedform::solve_R(closedform::Which::omega0, N + 2);
    VSeries G = closedform::compute_G(R0);
    VSeries Q0_closed = (G + G).truncated(Q0.order());
    CHECK(Q0 == Q0_closed);

    // at omega=0, F(x) (1-x) is x-independent and equals R0
    for (int m = 1; m <= N; ++m) {
        LaurentX prod = F0.coeff(m) * (LaurentX(BivarPoly::one()) - LaurentX::monomial(1, BivarPoly::one()));
        prod = prod.truncate_above(opt0.effective_x_max() - m - 1);
        CHECK(prod == LaurentX(R0.coeff(m)));
    }

    onecat::MOptions opt1;
    opt1.order = N;
    opt1.omega = BivarPoly(1);
    XSeries M1 = onecat::compute_M(opt1);
    XSeries F1 = onecat::compute_F(M1, opt1);
    VSeries Q1 = onecat::extract_Q(M1, F1, opt1);
    VSeries R1 = closedform::solve_R(closedform::Which::omega1, N + 2);
    VSeries Q1_closed = closedform::compute_Q1(R1).truncated(Q1.order());
    CHECK(Q1 == Q1_closed);

    // at omega=1, F(x) is x-independent (= R1)
    for (int m = 1; m <= N; ++m) CHECK(F1.coeff(m) == LaurentX(R1.coeff(m)));
}

TEST_CASE("explicit M equals recursion M for omega in {0,1}")
{
    const int N = 6;
    for (int om = 0; om <= 1; ++om) {
        onecat::MOptions opt;
        opt.order = N;
        opt.omega = BivarPoly(om);
        XSeries M = onecat::compute_M(opt);
        auto which = om == 0 ? closedform::Which::omega0 : closedform::Which::omega1;
        VSeries R = closedform::solve_R(which, N);
        XSeries Me = closedform::explicit_M(which, R, N, opt.effective_x_max());
        for (int m = 1; m <= N; ++m) CHECK(M.coeff(m) == Me.coeff(m).truncate_above(opt.effective_x_max()));
    }
}

TEST_CASE("coefficients of M fit in the {x^{-j}, (1-x)^{-j}} basis")
{
    onecat::MOptions opt;
    opt.order = 6;
    opt.x_max = 2 * opt.order + 2; // the fit needs a window past the basis dimension
    XSeries M = onecat::compute_M(opt);
    for (int n = 1; n <= 6; ++n) CHECK(fits_poly_basis(M.coeff(n), n, opt.x_max));
}

TEST_CASE("results invariant under widening the x window")
{
    onecat::MOptions a, b;
    a.order = b.order = 6;
    a.x_max = 10;
    b.x_max = 14;
    XSeries Ma = onecat::compute_M(a);
    XSeries Mb = onecat::compute_M(b);
    for (int n = 0; n <= 6; ++n) CHECK(Ma.coeff(n) == Mb.coeff(n).truncate_above(10));
}

TEST_CASE("Z(x,y) characterisation checks")
{
    onecat::MOptions opt;
    opt.order = 5;
    opt.x_max = 2 * opt.order + 4;
    XSeries M = onecat::compute_M(opt);
    XSeries F = onecat::compute_F(M, opt);
    auto verdict = onecat::check_Z_nonneg(M, F, opt);
    CHECK_MESSAGE(verdict.ok, verdict.detail);

    // an undersized window is rejected
    onecat::MOptions small = opt;
    small.x_max = opt.order + 4;
    CHECK_THROWS(onecat::check_Z_nonneg(onecat::compute_M(small), F, small));

    // [t^1] Z vanishes identically at omega = 0 and omega = 1
    for (int om = 0; om <= 1; ++om) {
        onecat::MOptions o2;
        o2.order = 5;
        o2.x_max = 2 * o2.order + 4;
        o2.omega = BivarPoly(om);
        XSeries M2 = onecat::compute_M(o2);
        XSeries F2 = onecat::compute_F(M2, o2);
        auto v2 = onecat::check_Z_nonneg(M2, F2, o2);
        CHECK_MESSAGE(v2.ok, v2.detail);
    }
}

TEST_CASE("M(M(x)) = x and the kernel identity")
{
    // the checker verifies through order M.order()-1, so compute one deeper
    onecat::MOptions opt;
    opt.order = 7;
    XSeries M = onecat::compute_M(opt);
    XSeries F = onecat::compute_F(M, opt);
    auto verdict = onecat::check_involution(M, F, opt);
    CHECK_MESSAGE(verdict.ok, verdict.detail);

    // widening the composition cap does not change the verdict
    auto verdict2 = onecat::check_involution(M, F, opt, opt.order + 4);
    CHECK_MESSAGE(verdict2.ok, verdict2.detail);
}
