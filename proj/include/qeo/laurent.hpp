#ifndef QEO_LAURENT_HPP
#define QEO_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <utility>

namespace qeo {

// Finite-support Laurent polynomial in one catalytic variable, coefficients in
// an arbitrary exact ring C. Canonical form: no stored zero coefficients.
//
// Truncation policy: the object itself is exact. Computations that expand
// rational functions (1/(1-x) and friends) choose an explicit exponent window
// and are re-validated by widening (see the call sites); this type only
// provides the mechanics (truncate_above / part).
template <class C>
class Laurent {
public:
    using coeff_type = C;
    using Coeffs = std::map<int, C>;

    Laurent() = default;
    explicit Laurent(const C& constant)
    {
        if (!is_zero(constant)) c_[0] = constant;
    }
    static Laurent zero() { return Laurent(); }
    static Laurent monomial(int k, const C& coeff)
    {
        Laurent l;
        if (!is_zero(coeff)) l.c_[k] = coeff;
        return l;
    }

    const Coeffs& coeffs() const { return c_; }
    bool empty() const { return c_.empty(); }

    int min_exp() const
    {
        if (c_.empty()) throw std::logic_error("Laurent::min_exp on zero");
        return c_.begin()->first;
    }
    int max_exp() const
    {
        if (c_.empty()) throw std::logic_error("Laurent::max_exp on zero");
        return c_.rbegin()->first;
    }

    C coeff(int k) const
    {
        auto it = c_.find(k);
        return it == c_.end() ? C{} : it->second;
    }

    void set_coeff(int k, const C& v)
    {
        if (is_zero(v)) c_.erase(k);
        else c_[k] = v;
    }

    void add_coeff(int k, const C& v)
    {
        if (is_zero(v)) return;
        auto [it, inserted] = c_.emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (is_zero(it->second)) c_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o)
    {
        for (auto& [k, v] : o.c_) add_coeff(k, v);
        return *this;
    }
    Laurent& operator-=(const Laurent& o)
    {
        for (auto& [k, v] : o.c_) add_coeff(k, negate(v));
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a)
    {
        Laurent r;
        for (auto& [k, v] : a.c_) r.c_[k] = negate(v);
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b)
    {
        Laurent r;
        for (auto& [ka, va] : a.c_)
            for (auto& [kb, vb] : b.c_) r.add_coeff(ka + kb, va * vb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent& scale(const C& v)
    {
        Laurent r;
        for (auto& [k, c] : c_) r.add_coeff(k, c * v);
        return *this = std::move(r);
    }
    friend Laurent operator*(Laurent a, const C& v) { return a.scale(v); }
    friend Laurent operator*(const C& v, Laurent a) { return a.scale(v); }

    // multiply by x^s
    Laurent shifted(int s) const
    {
        Laurent r;
        for (auto& [k, v] : c_) r.c_[k + s] = v;
        return r;
    }

    // substitute x -> 1/x
    Laurent inverted_var() const
    {
        Laurent r;
        for (auto& [k, v] : c_) r.c_[-k] = v;
        return r;
    }

    // retain exponents in [lo, hi]
    Laurent part(int lo, int hi) const
    {
        Laurent r;
        for (auto& [k, v] : c_)
            if (k >= lo && k <= hi) r.c_[k] = v;
        return r;
    }
    Laurent nonneg_part() const
    {
        Laurent r;
        for (auto& [k, v] : c_)
            if (k >= 0) r.c_[k] = v;
        return r;
    }
    Laurent truncate_above(int hi) const
    {
        Laurent r;
        for (auto& [k, v] : c_) {
            if (k > hi) break;
            r.c_[k] = v;
        }
        return r;
    }

    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

private:
    static C negate(const C& v) { return C{} - v; }

    Coeffs c_;
};

template <class C>
inline bool is_zero(const Laurent<C>& l)
{
    return l.empty();
}

// 1 / L truncated to exponents <= hi. The caller supplies inv_lowest, the
// exact ring inverse of the lowest coefficient of L; the expansion is the
// geometric series in the higher terms.
template <class C>
Laurent<C> laurent_inverse(const Laurent<C>& l, const C& inv_lowest, int hi)
{
    if (l.empty()) throw std::domain_error("laurent_inverse: zero");
    const int m = l.min_exp();
    const C one = l.coeff(m) * inv_lowest;
    // l = c x^m (1 + h) with h of positive valuation
    Laurent<C> h = l.shifted(-m);
    h.scale(inv_lowest);
    h.add_coeff(0, C{} - one);
    const int cap = hi + m;
    Laurent<C> acc(one);
    Laurent<C> pw(one);
    for (int j = 1; j <= cap; ++j) {
        pw = (pw * h).truncate_above(cap);
        if (pw.empty()) break;
        if (j % 2 == 1) acc -= pw;
        else acc += pw;
    }
    acc.scale(inv_lowest);
    return acc.shifted(-m).truncate_above(hi);
}

} // namespace qeo

#endif
