#include "qeo/onecat.hpp"

#include <sstream>
#include <stdexcept>

namespace qeo {
namespace onecat {

namespace {

using BivarLaurent = Laurent<LaurentX>; // outer exponent y, inner x

// Staircase caps: the t^m coefficient of every intermediate is kept exact on
// [-m, x_max + (order - m)]; a product of coefficients with t-orders summing
// to m then stays exact on the cap of m.
struct Work {
    int order;
    int x_max;
    BivarPoly omega, v;
    std::vector<LaurentX> inv1mx_pow; // 1/(1-x)^p on [0, cap(0)]
    std::vector<BivarPoly> omega_pow;

    int cap(int m) const { return x_max + (order - m); }

    explicit Work(const MOptions& opt)
        : order(opt.order), x_max(opt.effective_x_max()), omega(opt.omega), v(opt.v)
    {
        const int top = cap(0);
        inv1mx_pow.resize(2 * order + 4);
        for (size_t p = 0; p < inv1mx_pow.size(); ++p) inv1mx_pow[p] = expand_inv_one_minus_x(static_cast<int>(p), top);
        omega_pow.resize(2 * order + 4);
        omega_pow[0] = BivarPoly::one();
        for (size_t i = 1; i < omega_pow.size(); ++i) omega_pow[i] = omega_pow[i - 1] * omega;
    }

    // extend the power list pows (pows[i] = base^{i+2}) with the coefficient
    // of t^m, using base known through t^{m-1}
    void extend_powers(std::vector<XSeries>& pows, const XSeries& base, int m) const
    {
        for (size_t i = 0; i < pows.size(); ++i) {
            const XSeries& prev = i == 0 ? base : pows[i - 1];
            LaurentX acc;
            for (int a = 1; a < m; ++a) {
                const LaurentX& f = prev.coeff(a);
                const LaurentX& g = base.coeff(m - a);
                if (f.empty() || g.empty()) continue;
                acc += (f * g).truncate_above(cap(m));
            }
            pows[i].set_coeff(m, acc);
        }
    }
};

} // namespace

XSeries compute_M(const MOptions& opt)
{
    if (opt.order < 1) throw std::domain_error("compute_M: order must be >= 1");
    Work w(opt);
    const int N = w.order;

    XSeries M(N);
    // M~ = t(1-v)/y + M, the base of the second power family
    XSeries Mt(N);
    Mt.set_coeff(1, LaurentX::monomial(-1, BivarPoly::one() - w.v));

    // pows[i] = M^{i+2}, tpows[i] = (t(1-v)/y + M)^{i+2}
    std::vector<XSeries> pows(std::max(0, N - 1), XSeries::zero(N));
    std::vector<XSeries> tpows(std::max(0, N - 1), XSeries::zero(N));

    // [t^1]: the explicit leading term t (x + v(1-x)) / (x(1-x))
    {
        LaurentX lead = (LaurentX::monomial(1, BivarPoly::one()) +
                         LaurentX(w.v) - LaurentX::monomial(1, w.v)) *
                        w.inv1mx_pow[1];
        lead = lead.shifted(-1).truncate_above(w.cap(1));
        M.set_coeff(1, lead);
        Mt.add_coeff(1, lead);
    }

    for (int m = 2; m <= N; ++m) {
        w.extend_powers(pows, M, m);
        w.extend_powers(tpows, Mt, m);

        LaurentX rhs;
        // local sum: x omega^{n-1} M^n / (n (1-x))
        {
            LaurentX acc;
            for (int n = 2; n <= m; ++n) {
                const LaurentX& p = pows[n - 2].coeff(m);
                if (p.empty()) continue;
                BivarPoly s = w.omega_pow[n - 1] * rat(1, n);
                acc += p * s;
            }
            if (!acc.empty()) rhs += (acc.shifted(1) * w.inv1mx_pow[1]).truncate_above(w.cap(m));
        }
        // first y-sum: [y^{-1}] (1-x-omega y) M(y)^n / (n x^n (1-x) (1-omega y))
        // = ( [y^{-1}]M^n - x * sum_j omega^j [y^{-1-j}]M^n ) / (n x^n (1-x))
        for (int n = 2; n <= m; ++n) {
            const LaurentX& p = pows[n - 2].coeff(m);
            if (p.empty()) continue;
            BivarPoly head = p.coeff(-1);
            BivarPoly tail;
            for (int j = 0; -1 - j >= p.min_exp(); ++j) tail += w.omega_pow[j] * p.coeff(-1 - j);
            LaurentX num = LaurentX(head) - LaurentX::monomial(1, tail);
            if (num.empty()) continue;
            num.scale(BivarPoly(rat(1, n)));
            rhs += (num * w.inv1mx_pow[1]).shifted(-n).truncate_above(w.cap(m));
        }
        // second y-sum: [y^{-1}] (t(1-v)/y + M(y))^n / (n (1-x)(1-omega y)(1-x-omega y)^{n-1})
        // = sum_i C(n-2+i, i) (1/(1-x))^{n+i} * sum_{j>=i} omega^j [y^{-1-j}]
        for (int n = 2; n <= m; ++n) {
            const LaurentX& p = tpows[n - 2].coeff(m);
            if (p.empty()) continue;
            // suffix sums S_i = sum_{j>=i} omega^j b_j with b_j = [y^{-1-j}]p
            const int jmax = std::max(0, -p.min_exp() - 1);
            std::vector<BivarPoly> suffix(jmax + 2);
            for (int j = jmax; j >= 0; --j) suffix[j] = suffix[j + 1] + w.omega_pow[j] * p.coeff(-1 - j);
            LaurentX acc;
            for (int i = 0; i <= jmax; ++i) {
                if (suffix[i].is_zero()) continue;
                BivarPoly s = suffix[i] * Rat(binomial(n - 2 + i, i)) * rat(1, n);
                acc += w.inv1mx_pow[n + i] * s;
            }
            rhs += acc.truncate_above(w.cap(m));
        }
        M.set_coeff(m, rhs);
        Mt.set_coeff(m, rhs);
    }

    // hand back the declared window
    return M.map([&](const LaurentX& c) { return c.truncate_above(w.x_max); });
}

XSeries compute_F(const XSeries& M, const MOptions& opt)
{
    const int N = M.order();
    const int x_max = opt.effective_x_max();
    XSeries A = M.map([](const LaurentX& c) { return c.shifted(1); }); // x M
    A.add_coeff(1, LaurentX(BivarPoly::one() - opt.v));                 // - t(v-1)
    XSeries B = -M;
    B.add_coeff(0, LaurentX(BivarPoly::one()) - LaurentX::monomial(1, opt.omega));
    XSeries F = A * B;
    for (int m = 0; m <= N; ++m) {
        const LaurentX& c = F.coeff(m);
        if (!c.empty() && c.min_exp() < 0) {
            std::ostringstream os;
            os << "compute_F: negative x-exponent " << c.min_exp() << " at t^" << m;
            throw std::logic_error(os.str());
        }
    }
    // the t^m coefficient is exact only up to x_max - m; cut the rest away
    for (int m = 0; m <= N; ++m) F.set_coeff(m, F.coeff(m).part(0, x_max - m));
    return F;
}

VSeries extract_Q(const XSeries& M, const XSeries& F, const MOptions& opt)
{
    const int N = M.order();
    VSeries xm2 = x_coefficient(M, -2);
    VSeries Q = xm2.shifted_t(-2);
    Q -= VSeries::constant(Q.order(), opt.v);

    // (omega+2) t^2 (Q+v) = t - F(0) + t(v-1) [x^0] M
    VSeries lhs = xm2; // t^2 (Q+v)
    lhs.scale(opt.omega + BivarPoly(2));
    VSeries rhs = VSeries::t_power(N, 1, BivarPoly::one()) - x_coefficient(F, 0);
    VSeries x0m = x_coefficient(M, 0).shifted_t(1);
    x0m.scale(opt.v - BivarPoly::one());
    rhs += x0m.truncated(N);
    if (lhs != rhs.truncated(lhs.order())) throw std::logic_error("extract_Q: Q-M and Q-alt expressions disagree");
    return Q;
}

namespace {

// bivariate helpers for the Z check: outer Laurent in y, inner in x
BivarLaurent bl_truncate(const BivarLaurent& f, int lo, int hi)
{
    BivarLaurent r;
    for (auto& [ky, c] : f.coeffs()) {
        if (ky < lo || ky > hi) continue;
        LaurentX cc = c.part(lo, hi);
        if (!cc.empty()) r.set_coeff(ky, cc);
    }
    return r;
}

// 1/(1 - y - omega x) expanded on the given window
BivarLaurent expand_inv_kernel(const BivarPoly& omega, int hi)
{
    BivarLaurent acc(LaurentX(BivarPoly::one()));
    BivarLaurent base; // y + omega x
    base.set_coeff(1, LaurentX(BivarPoly::one()));
    base.set_coeff(0, LaurentX::monomial(1, omega));
    BivarLaurent pw(LaurentX(BivarPoly::one()));
    for (int k = 1; k <= 2 * hi + 2; ++k) {
        pw = bl_truncate(pw * base, 0, hi);
        if (pw.coeffs().empty()) break;
        acc += pw;
    }
    return acc;
}

} // namespace

Verdict check_Z_nonneg(const XSeries& M, const XSeries& F, const MOptions& opt)
{
    const int N = M.order();
    // the exact region of [t^n]Z is kx <= x_max - n - 2 (limited by the F
    // window); covering the full reported window at every order needs this:
    if (opt.effective_x_max() < 2 * N + 4)
        throw std::domain_error("check_Z_nonneg: needs M and F computed with x_max >= 2*order+4");
    const int lo = -(N + 2);
    const int hi_report = N + 2;
    const int hi = hi_report + N + 2; // internal pad

    // A(x,y) = (y - t(v-1)/x)(1-x-omega y) - F(y)/(xy)   [numerator of Z]
    // B(x,y) = A with x and y swapped                    [denominator]
    auto build = [&](bool swapped) {
        TSeries<BivarLaurent> out(N);
        auto put = [&](int n, int ey, int ex, const BivarPoly& c) {
            if (c.is_zero()) return;
            int a = swapped ? ex : ey, b = swapped ? ey : ex;
            BivarLaurent cur = out.coeff(n);
            LaurentX inner = cur.coeff(a);
            inner.add_coeff(b, c);
            cur.set_coeff(a, inner);
            out.set_coeff(n, cur);
        };
        // (xy - t(v-1))(1-x-omega y)/(xy)
        put(0, 0, 0, BivarPoly::one());
        put(0, 0, 1, -BivarPoly::one());
        put(0, 1, 0, -opt.omega);
        const BivarPoly vm1 = opt.v - BivarPoly::one();
        put(1, -1, -1, -vm1);
        put(1, -1, 0, vm1);
        put(1, 0, -1, vm1 * opt.omega);
        // - F(y)/(xy)
        for (int n = 0; n <= N; ++n)
            for (auto& [k, c] : F.coeff(n).coeffs()) put(n, k - 1, -1, -c);
        return out;
    };
    TSeries<BivarLaurent> A = build(false);
    TSeries<BivarLaurent> B = build(true);

    auto trunc_all = [&](TSeries<BivarLaurent> f) {
        return f.map([&](const BivarLaurent& c) { return bl_truncate(c, lo, hi); });
    };
    A = trunc_all(A);
    B = trunc_all(B);

    BivarLaurent inv0 = expand_inv_kernel(opt.omega, hi);
    TSeries<BivarLaurent> Binv(N);
    Binv.set_coeff(0, inv0);
    for (int n = 1; n <= N; ++n) {
        BivarLaurent acc;
        for (int k = 1; k <= n; ++k) acc += B.coeff(k) * Binv.coeff(n - k);
        acc = bl_truncate(acc, lo, hi);
        BivarLaurent prod = acc * inv0;
        BivarLaurent res;
        for (auto& [ky, c] : prod.coeffs()) res.add_coeff(ky, LaurentX() - c);
        Binv.set_coeff(n, bl_truncate(res, lo, hi));
    }
    TSeries<BivarLaurent> Z(N);
    for (int n = 0; n <= N; ++n) {
        BivarLaurent acc;
        for (int k = 0; k <= n; ++k) acc += A.coeff(k) * Binv.coeff(n - k);
        Z.set_coeff(n, bl_truncate(acc, lo, hi_report));
    }

    Verdict verdict;
    auto fail = [&](const std::string& msg) {
        verdict.ok = false;
        if (!verdict.detail.empty()) verdict.detail += "; ";
        verdict.detail += msg;
    };

    // no negative exponents in either variable. The exactness region of
    // [t^n]Z is bounded by the F window: entries with the other variable's
    // exponent above x_max - n - 2 are contaminated by the staircase cut and
    // carry no information, so the assertion stays inside it.
    const int x_max = opt.effective_x_max();
    for (int n = 0; n <= N; ++n) {
        const int other_cap = std::min(hi_report, x_max - n - 2);
        for (auto& [ky, c] : Z.coeff(n).coeffs()) {
            if (c.empty()) continue;
            if (ky < 0 && !c.truncate_above(other_cap).empty()) {
                std::ostringstream os;
                os << "negative y-exponent " << ky << " at t^" << n;
                fail(os.str());
                break;
            }
            if (ky >= 0 && ky <= other_cap && c.min_exp() < 0) {
                std::ostringstream os;
                os << "negative x-exponent " << c.min_exp() << " at t^" << n << " y^" << ky;
                fail(os.str());
                break;
            }
        }
    }

    const int hi_cmp = std::min(hi_report, x_max - 2);
    // [t^0] Z = (1-x-omega y)/(1-y-omega x)
    {
        BivarLaurent top;
        top.set_coeff(0, LaurentX(BivarPoly::one()) - LaurentX::monomial(1, BivarPoly::one()));
        top.add_coeff(1, LaurentX(-opt.omega));
        BivarLaurent expect = bl_truncate(top * inv0, 0, hi_cmp);
        if (!(expect == bl_truncate(Z.coeff(0), 0, hi_cmp))) fail("[t^0] Z mismatch");
    }
    // [t^1] Z = omega (omega-1) (x-y) / ((1-y-omega x)^2 (1-x)(1-y))
    {
        BivarLaurent xy; // x - y
        xy.set_coeff(0, LaurentX::monomial(1, BivarPoly::one()));
        xy.add_coeff(1, LaurentX(-BivarPoly::one()));
        BivarPoly c = opt.omega * (opt.omega - BivarPoly::one());
        // multiply the pieces, truncating as we go
        BivarLaurent invk2 = bl_truncate(inv0 * inv0, 0, hi);
        LaurentX inv1mx = expand_inv_one_minus_x(1, hi);
        BivarLaurent inv1my;
        for (int k = 0; k <= hi; ++k) inv1my.set_coeff(k, LaurentX(BivarPoly::one()));
        BivarLaurent prod = bl_truncate(xy * invk2, 0, hi);
        prod = bl_truncate(prod * inv1my, 0, hi);
        BivarLaurent scaled;
        for (auto& [ky, cc] : prod.coeffs()) scaled.set_coeff(ky, (cc * inv1mx).truncate_above(hi) * c);
        scaled = bl_truncate(scaled, 0, hi_cmp);
        if (!(scaled == bl_truncate(Z.coeff(1), 0, hi_cmp))) fail("[t^1] Z mismatch");
        // the (x - y) factor vanishes on the diagonal x = y
        LaurentX diag;
        const BivarLaurent z1cut = bl_truncate(Z.coeff(1), 0, hi_cmp);
        for (auto& [ky, cc] : z1cut.coeffs())
            for (auto& [kx, p] : cc.coeffs()) diag.add_coeff(ky + kx, p);
        diag = diag.truncate_above(hi_cmp);
        if (!diag.empty()) fail("[t^1] Z does not vanish at x=y");
    }

    return verdict;
}

namespace {

// bigraded series in (tau = t/x, x): TSeries index is the tau-order, inner
// Laurent holds non-negative x-exponents up to a cap
XSeries big_mul(const XSeries& a, const XSeries& b, int x_cap)
{
    XSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).empty()) continue;
        for (int j = 0; i + j <= r.order() && j <= b.order(); ++j) {
            if (b.coeff(j).empty()) continue;
            r.add_coeff(i + j, (a.coeff(i) * b.coeff(j)).truncate_above(x_cap));
        }
    }
    return r;
}

XSeries to_bigraded(const XSeries& M, int tau_cap, int x_cap)
{
    XSeries G(tau_cap);
    for (int n = 1; n <= M.order() && n <= tau_cap; ++n)
        for (auto& [k, c] : M.coeff(n).coeffs()) {
            int j = n + k;
            if (j < 0) throw std::logic_error("to_bigraded: negative x-exponent");
            if (j <= x_cap) G.add_coeff(n, LaurentX::monomial(j, c));
        }
    return G;
}

} // namespace

Verdict check_involution(const XSeries& M, const XSeries& F, const MOptions& opt, int x_cap_arg)
{
    Verdict verdict;
    auto fail = [&](const std::string& msg) {
        verdict.ok = false;
        if (!verdict.detail.empty()) verdict.detail += "; ";
        verdict.detail += msg;
    };
    // The tau^j coefficient of M(M(x)) involves 1/M expanded to tau-order j,
    // which needs [t^{j+1}]M: with M known to order N the identity is
    // verifiable through tau-order N-1. Callers wanting "= x to order N" pass
    // an M computed one order deeper.
    const int N = M.order() - 1;
    const int x_cap = x_cap_arg > 0 ? x_cap_arg : N + 2;

    XSeries Mb = to_bigraded(M, N + 1, x_cap);
    // W = t/M = x / (M / tau); [tau^0] of M/tau is v + O(x), invertible over Q[v,1/v]
    XSeries A(N); // M / tau
    for (int i = 1; i <= N + 1; ++i) A.set_coeff(i - 1, Mb.coeff(i));
    const LaurentX a0 = A.coeff(0);
    if (a0.empty() || a0.min_exp() != 0) {
        fail("leading bigraded coefficient of M is not a unit");
        return verdict;
    }
    BivarPoly lead = a0.coeff(0);
    if (lead.terms().size() != 1) {
        fail("leading coefficient of M is not a monomial; cannot invert");
        return verdict;
    }
    auto [ldeg, lc] = *lead.terms().begin();
    if (ldeg.first != 0) {
        fail("leading coefficient involves omega");
        return verdict;
    }
    BivarPoly inv_lead = BivarPoly::monomial(0, -ldeg.second, 1 / lc);
    LaurentX inv_a0 = laurent_inverse(a0, inv_lead, x_cap);
    XSeries Ainv(N);
    Ainv.set_coeff(0, inv_a0);
    for (int n = 1; n <= N; ++n) {
        LaurentX acc;
        for (int k = 1; k <= n; ++k) acc += (A.coeff(k) * Ainv.coeff(n - k)).truncate_above(x_cap);
        Ainv.set_coeff(n, (LaurentX() - (acc * inv_a0)).truncate_above(x_cap));
    }
    XSeries W = Ainv.map([&](const LaurentX& c) { return c.shifted(1).truncate_above(x_cap); });

    // powers of Mb (tau-valuation k) and of W (x-valuation k)
    const int pmax = M.order();
    std::vector<XSeries> mpow(pmax + 1, XSeries::zero(N)), wpow(pmax + 1, XSeries::zero(N));
    mpow[0] = XSeries::constant(N, LaurentX(BivarPoly::one()));
    wpow[0] = mpow[0];
    for (int k = 1; k <= pmax; ++k) {
        mpow[k] = big_mul(mpow[k - 1], Mb.truncated(N), x_cap);
        wpow[k] = big_mul(wpow[k - 1], W, x_cap);
    }

    // M(M(x)): substitute y = M into [t^n]M(y) = sum_k a_{n,k} y^k,
    // using t^n y^k = tau^n x^n Mb^k for k >= 0 and t^n y^{-e} = tau^{n-e} x^{n-e} W^e
    XSeries MM = XSeries::zero(N);
    for (int n = 1; n <= M.order(); ++n) {
        for (auto& [k, c] : M.coeff(n).coeffs()) {
            if (k >= 0) {
                if (n + k > N) continue;
                const XSeries& p = mpow[k];
                for (int i = 0; i + n <= N; ++i) {
                    if (p.coeff(i).empty()) continue;
                    MM.add_coeff(i + n, (p.coeff(i).shifted(n) * c).truncate_above(x_cap));
                }
            } else {
                const int e = -k;
                if (e > n) throw std::logic_error("check_involution: x-valuation below -n");
                const XSeries& p = wpow[e];
                for (int i = 0; i + n - e <= N; ++i) {
                    if (p.coeff(i).empty()) continue;
                    LaurentX shifted = p.coeff(i).shifted(n - e).truncate_above(x_cap);
                    MM.add_coeff(i + n - e, (shifted * c).truncate_above(x_cap));
                }
            }
        }
    }

    // compare against x on the bi-truncation. Data of [t^n]M only reaches the
    // region tau + x >= n of the composition, so with M known to order N+1
    // the identity is verifiable on tau <= N, tau + x <= N+1.
    XSeries X_expect = XSeries::constant(N, LaurentX::monomial(1, BivarPoly::one()));
    for (int i = 0; i <= N; ++i) {
        const int xr = std::min(x_cap, M.order() - i);
        if (!(MM.coeff(i).truncate_above(xr) == X_expect.coeff(i).truncate_above(xr))) {
            std::ostringstream os;
            os << "M(M(x)) != x at tau^" << i;
            fail(os.str());
            break;
        }
    }

    // kernel identity F(M(x)) = (x M - t(v-1))(1 - x - omega M)
    {
        XSeries FM = XSeries::zero(N);
        for (int n = 1; n <= F.order(); ++n) {
            for (auto& [k, c] : F.coeff(n).coeffs()) {
                if (n + k > N) continue; // tau-valuation beyond cap
                const XSeries& p = mpow[k];
                for (int i = 0; i + n <= N; ++i) {
                    if (p.coeff(i).empty()) continue;
                    FM.add_coeff(i + n, (p.coeff(i).shifted(n) * c).truncate_above(x_cap));
                }
            }
        }
        // RHS in bigraded form: x M - t(v-1) = x Mb - tau x (v-1)
        XSeries lhs1 = Mb.map([&](const LaurentX& c) { return c.shifted(1).truncate_above(x_cap); });
        XSeries rhs1 = lhs1;
        rhs1.add_coeff(1, LaurentX::monomial(1, BivarPoly::one() - opt.v));
        XSeries rhs2 = -Mb;
        rhs2.scale(LaurentX(opt.omega));
        rhs2.add_coeff(0, LaurentX(BivarPoly::one()) - LaurentX::monomial(1, BivarPoly::one()));
        XSeries rhs = big_mul(rhs1, rhs2, x_cap);
        for (int i = 0; i <= N; ++i) {
            if (!(FM.coeff(i) == rhs.coeff(i))) {
                std::ostringstream os;
                os << "F(M(x)) kernel identity fails at tau^" << i;
                fail(os.str());
                break;
            }
        }
    }
    return verdict;
}

} // namespace onecat
} // namespace qeo
