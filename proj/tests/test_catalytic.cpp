#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qeo/catalytic.hpp"
#include "qeo/onecat.hpp"
#include "qeo/oracles.hpp"

using namespace qeo;

TEST_CASE("initial conditions of the PD system")
{
    auto st = catalytic::solve_pd_system(5);
    // [y^0] D = v: d[0][0] = v, d[0][n] = 0 for n >= 1
    CHECK(st.d_at(0, 0) == LaurentX(BivarPoly::v()));
    for (int n = 1; n <= 4; ++n) CHECK(st.d_at(0, n).empty());
    CHECK(st.p_at(0, 0) == BivarPoly::v());
}

TEST_CASE("Q from the PD system matches the oracle")
{
    auto st = catalytic::solve_pd_system(6);
    VSeries Q = st.Q();
    VSeries oracle = oracles::count_partial_orientations(4);
    CHECK(Q.coeff(0).is_zero());
    for (int e = 1; e <= 4; ++e) CHECK(Q.coeff(e) == oracle.coeff(e));
}

TEST_CASE("Q from the PD system equals onecat's Q at N=7")
{
    auto st = catalytic::solve_pd_system(9);
    VSeries Qc = st.Q();

    onecat::MOptions opt;
    opt.order = 9;
    XSeries M = onecat::compute_M(opt);
    XSeries F = onecat::compute_F(M, opt);
    VSeries Qo = onecat::extract_Q(M, F, opt);
    CHECK(Qc == Qo.truncated(Qc.order()));
}

TEST_CASE("E(x,y) is symmetric and E(0,y) is the patch series")
{
    auto st = catalytic::solve_pd_system(6);
    auto E = catalytic::compute_E(st);
    CHECK(E.symmetric);

    // E(0,y): x-degree-0 part equals P(y) = sum p[j][n] y^j t^{j+n+1}
    for (int n = 0; n <= st.stages; ++n) {
        Laurent<LaurentX> c = E.e.coeff(n);
        for (auto& [ky, inner] : c.coeffs()) {
            BivarPoly e0 = inner.coeff(0);
            BivarPoly expect = (n >= ky + 1) ? st.p_at(ky, n - ky - 1) : BivarPoly();
            CHECK(e0 == expect);
        }
    }

    // constant term in t vanishes
    CHECK(E.e.coeff(0).coeffs().empty());
}

TEST_CASE("P functional equation holds")
{
    auto st = catalytic::solve_pd_system(6);
    auto verdict = catalytic::check_P_equation(st);
    CHECK_MESSAGE(verdict.ok, verdict.detail);
}

TEST_CASE("omega=0, v=1 D1 identity")
{
    auto st = catalytic::solve_pd_system(6, 0, BivarPoly(0), BivarPoly(1));
    auto verdict = catalytic::check_D1_identity_omega0_v1(st);
    CHECK_MESSAGE(verdict.ok, verdict.detail);

    auto vq = catalytic::check_P_equation(st, BivarPoly(0), BivarPoly(1));
    CHECK_MESSAGE(vq.ok, vq.detail);
}

TEST_CASE("d coefficients lie in the 1/(1-x) basis")
{
    auto st = catalytic::solve_pd_system(5, 2 * 5 + 6);
    for (int j = 0; j + 1 <= st.stages; ++j)
        for (int n = 0; j + n <= st.stages - 1; ++n) {
            const LaurentX& c = st.d_at(j, n);
            if (c.empty()) continue;
            const int win = st.trusted(j + n);
            const int dim = 2 * (j + n) + 2;
            REQUIRE(win > dim + 2);
            // Gaussian fit of sum_i b_i/(1-x)^i (i = 0..dim) on x^0..x^dim,
            // then verify on the rest of the window
            std::vector<std::vector<Rat>> A(dim + 1, std::vector<Rat>(dim + 1));
            std::vector<BivarPoly> rhs(dim + 1);
            for (int k = 0; k <= dim; ++k) {
                for (int i = 0; i <= dim; ++i) A[k][i] = i == 0 ? Rat(k == 0 ? 1 : 0) : Rat(binomial(i - 1 + k, k));
                rhs[k] = c.coeff(k);
            }
            for (int col = 0; col <= dim; ++col) {
                int piv = -1;
                for (int r = col; r <= dim; ++r)
                    if (!is_zero(A[r][col])) {
                        piv = r;
                        break;
                    }
                REQUIRE(piv >= 0);
                std::swap(A[col], A[piv]);
                std::swap(rhs[col], rhs[piv]);
                Rat inv = 1 / A[col][col];
                for (int c2 = col; c2 <= dim; ++c2) A[col][c2] *= inv;
                rhs[col].scale(inv);
                for (int r = 0; r <= dim; ++r) {
                    if (r == col || is_zero(A[r][col])) continue;
                    Rat f = A[r][col];
                    for (int c2 = col; c2 <= dim; ++c2) A[r][c2] -= f * A[col][c2];
                    rhs[r] -= rhs[col] * f;
                }
            }
            LaurentX rebuilt(rhs[0]);
            for (int i = 1; i <= dim; ++i) rebuilt += expand_inv_one_minus_x(i, win) * rhs[i];
            CHECK(rebuilt == c.truncate_above(win));
        }
}

TEST_CASE("result independent of the x_degree guard")
{
    auto a = catalytic::solve_pd_system(5, 9);
    auto b = catalytic::solve_pd_system(5, 13);
    CHECK(a.Q() == b.Q());
    for (int j = 0; j <= 5; ++j)
        for (int n = 0; j + n <= 5; ++n)
            CHECK(a.d_at(j, n).truncate_above(a.trusted(j + n)) ==
                  b.d_at(j, n).truncate_above(a.trusted(j + n)));
}
