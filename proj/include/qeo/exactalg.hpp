#ifndef QEO_EXACTALG_HPP
#define QEO_EXACTALG_HPP

#include "qeo/bivar_poly.hpp"
#include "qeo/laurent.hpp"
#include "qeo/numeric.hpp"
#include "qeo/omega_poly.hpp"
#include "qeo/tseries.hpp"

#include <sstream>
#include <string>

namespace qeo {

using LaurentX = Laurent<BivarPoly>;
using XSeries = TSeries<LaurentX>;   // series in t, coefficients Laurent in x
using VSeries = TSeries<BivarPoly>;  // series in t, polynomial coefficients
using QSeries = TSeries<OmegaPoly>;  // series in q, polynomial-in-omega coefficients

// 1/(1-x)^power expanded to x-degree x_max.
inline LaurentX expand_inv_one_minus_x(int power, int x_max)
{
    LaurentX r;
    for (int k = 0; k <= x_max; ++k) r.set_coeff(k, BivarPoly(Rat(binomial(power - 1 + k, k))));
    return r;
}

// substitute x -> t/x in a series over LaurentX: t^n x^k -> t^{n+k} x^{-k}.
// Terms whose t-order exceeds the requested order are dropped (they are
// unknowable at this truncation anyway); terms with n + k < 0 cannot occur
// for inputs with x-valuation >= -n.
inline XSeries subst_x_to_t_over_x(const XSeries& f, int order)
{
    XSeries r(order);
    for (int n = 0; n <= f.order(); ++n) {
        for (auto& [k, c] : f.coeff(n).coeffs()) {
            const int m = n + k;
            if (m < 0) throw std::domain_error("subst_x_to_t_over_x: negative t-order");
            if (m > order) continue;
            LaurentX add = LaurentX::monomial(-k, c);
            r.add_coeff(m, add);
        }
    }
    return r;
}

template <class C>
TSeries<Laurent<C>> laurent_part(const TSeries<Laurent<C>>& f, int lo, int hi)
{
    return f.map([&](const Laurent<C>& c) { return c.part(lo, hi); });
}

template <class C>
TSeries<Laurent<C>> nonneg_part(const TSeries<Laurent<C>>& f)
{
    return f.map([&](const Laurent<C>& c) { return c.nonneg_part(); });
}

// [x^k] of a series over LaurentX, as a series over the coefficient ring
template <class C>
TSeries<C> x_coefficient(const TSeries<Laurent<C>>& f, int k)
{
    return f.map([&](const Laurent<C>& c) { return c.coeff(k); });
}

inline XSeries specialize_omega(const XSeries& f, const Rat& w)
{
    return f.map([&](const LaurentX& c) {
        LaurentX r;
        for (auto& [k, p] : c.coeffs()) r.add_coeff(k, p.eval_omega(w));
        return r;
    });
}
inline XSeries specialize_v(const XSeries& f, const Rat& val)
{
    return f.map([&](const LaurentX& c) {
        LaurentX r;
        for (auto& [k, p] : c.coeffs()) r.add_coeff(k, p.eval_v(val));
        return r;
    });
}
inline VSeries specialize_omega(const VSeries& f, const Rat& w)
{
    return f.map([&](const BivarPoly& p) { return p.eval_omega(w); });
}
inline VSeries specialize_v(const VSeries& f, const Rat& val)
{
    return f.map([&](const BivarPoly& p) { return p.eval_v(val); });
}
inline TSeries<Rat> specialize(const VSeries& f, const Rat& w, const Rat& val)
{
    return f.map([&](const BivarPoly& p) { return p.eval(w, val); });
}

inline VSeries omega_series_to_bivar(const QSeries& f)
{
    return f.map([&](const OmegaPoly& p) {
        BivarPoly r;
        for (int k = 0; k <= p.degree(); ++k) r += BivarPoly::monomial(k, 0, p.coeff(k));
        return r;
    });
}

inline std::string to_string(const VSeries& f, const std::string& var = "t")
{
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= f.order(); ++n) {
        if (f.coeff(n).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << f.coeff(n).to_string() << ")";
        if (n > 0) os << "*" << var;
        if (n > 1) os << "^" << n;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << f.order() + 1 << ")";
    return os.str();
}

} // namespace qeo

#endif
