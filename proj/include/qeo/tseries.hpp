#ifndef QEO_TSERIES_HPP
#define QEO_TSERIES_HPP

#include "qeo/laurent.hpp"

#include <functional>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace qeo {

template <class C>
struct is_laurent : std::false_type {
};
template <class C>
struct is_laurent<Laurent<C>> : std::true_type {
};

template <class C>
C ring_one()
{
    if constexpr (std::is_same_v<C, class BivarPoly>) return C::one();
    else if constexpr (is_laurent<C>::value) return C(ring_one<typename C::coeff_type>());
    else return C(1);
}

// Series in t truncated at a fixed order N: coefficients of t^0..t^N are
// meaningful, everything above is unknown. Arithmetic propagates the
// truncation order as the min of the operands.
template <class C>
class TSeries {
public:
    TSeries() : order_(-1) {}
    explicit TSeries(int order) : order_(order), c_(order + 1) {}

    static TSeries zero(int order) { return TSeries(order); }
    static TSeries constant(int order, const C& c0)
    {
        TSeries s(order);
        if (order >= 0) s.c_[0] = c0;
        return s;
    }
    static TSeries t_power(int order, int k, const C& c)
    {
        TSeries s(order);
        if (k <= order) s.c_[k] = c;
        return s;
    }

    int order() const { return order_; }
    bool valid() const { return order_ >= 0; }

    const C& coeff(int n) const
    {
        static const C zero_{};
        if (n < 0) return zero_;
        if (n > order_) throw std::out_of_range("TSeries::coeff beyond truncation order");
        return c_[n];
    }
    void set_coeff(int n, const C& v)
    {
        if (n < 0 || n > order_) throw std::out_of_range("TSeries::set_coeff");
        c_[n] = v;
    }
    void add_coeff(int n, const C& v)
    {
        if (n < 0 || n > order_) throw std::out_of_range("TSeries::add_coeff");
        c_[n] += v;
    }

    bool is_zero() const
    {
        for (auto& c : c_)
            if (!qeo::is_zero(c)) return false;
        return true;
    }

    int valuation() const
    {
        for (int n = 0; n <= order_; ++n)
            if (!qeo::is_zero(c_[n])) return n;
        return order_ + 1; // zero to truncation order
    }

    TSeries truncated(int new_order) const
    {
        TSeries r(std::min(new_order, order_));
        for (int n = 0; n <= r.order_; ++n) r.c_[n] = c_[n];
        return r;
    }

    // multiply by t^k (k may be negative; dropping nonzero low-order terms is an error)
    TSeries shifted_t(int k) const
    {
        TSeries r(order_ + k);
        if (r.order_ < -1) throw std::domain_error("TSeries::shifted_t: order underflow");
        for (int n = 0; n <= order_; ++n) {
            int m = n + k;
            if (m < 0) {
                if (!qeo::is_zero(c_[n])) throw std::domain_error("TSeries::shifted_t: nonzero low-order term dropped");
                continue;
            }
            if (m <= r.order_) r.c_[m] = c_[n];
        }
        return r;
    }

    TSeries& operator+=(const TSeries& o)
    {
        resize_to(std::min(order_, o.order_));
        for (int n = 0; n <= order_; ++n) c_[n] += o.c_[n];
        return *this;
    }
    TSeries& operator-=(const TSeries& o)
    {
        resize_to(std::min(order_, o.order_));
        for (int n = 0; n <= order_; ++n) c_[n] = c_[n] - o.c_[n];
        return *this;
    }
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator-(const TSeries& a)
    {
        TSeries r(a.order_);
        for (int n = 0; n <= a.order_; ++n) r.c_[n] = C{} - a.c_[n];
        return r;
    }

    friend TSeries operator*(const TSeries& a, const TSeries& b)
    {
        TSeries r(std::min(a.order_, b.order_));
        for (int i = 0; i <= a.order_ && i <= r.order_; ++i) {
            if (qeo::is_zero(a.c_[i])) continue;
            for (int j = 0; j + i <= r.order_ && j <= b.order_; ++j) {
                if (qeo::is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

    TSeries& scale(const C& v)
    {
        for (auto& c : c_) c = c * v;
        return *this;
    }
    friend TSeries operator*(TSeries a, const C& v) { return a.scale(v); }
    friend TSeries operator*(const C& v, TSeries a) { return a.scale(v); }

    TSeries derivative() const
    {
        if (order_ < 1) return TSeries(std::max(order_ - 1, -1));
        TSeries r(order_ - 1);
        for (int n = 1; n <= order_; ++n) {
            C acc{};
            for (int i = 0; i < n; ++i) acc += c_[n]; // n * c_n without a generic int*C
            r.c_[n - 1] = acc;
        }
        return r;
    }

    bool operator==(const TSeries& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const TSeries& o) const { return !(*this == o); }

    template <class F>
    auto map(F&& f) const -> TSeries<std::decay_t<decltype(f(std::declval<const C&>()))>>
    {
        TSeries<std::decay_t<decltype(f(std::declval<const C&>()))>> r(order_);
        for (int n = 0; n <= order_; ++n) r.set_coeff(n, f(c_[n]));
        return r;
    }

private:
    void resize_to(int new_order)
    {
        if (new_order < order_) {
            order_ = new_order;
            c_.resize(order_ + 1);
        }
    }

    int order_;
    std::vector<C> c_;
};

template <class C>
inline bool is_zero(const TSeries<C>& s)
{
    return s.is_zero();
}

// g(t) with f substituted for t; f must have zero constant term.
template <class C>
TSeries<C> ts_compose(const TSeries<C>& g, const TSeries<C>& f)
{
    if (!qeo::is_zero(f.coeff(0))) throw std::domain_error("ts_compose: inner series has constant term");
    const int N = std::min(g.order(), f.order());
    TSeries<C> result = TSeries<C>::constant(N, g.coeff(0));
    TSeries<C> pw = TSeries<C>::constant(N, ring_one<C>());
    for (int k = 1; k <= std::min(g.order(), N); ++k) {
        pw = pw * f;
        TSeries<C> term = pw;
        term.scale(g.coeff(k));
        result += term;
    }
    return result;
}

// 1 / f where inv_c0 is the exact reciprocal of the constant coefficient
// (supplied by the caller because coefficient rings may need window choices).
template <class C>
TSeries<C> ts_inverse(const TSeries<C>& f, const C& inv_c0)
{
    const int N = f.order();
    TSeries<C> g(N);
    g.set_coeff(0, inv_c0);
    for (int n = 1; n <= N; ++n) {
        C acc{};
        for (int k = 1; k <= n; ++k) acc += f.coeff(k) * g.coeff(n - k);
        g.set_coeff(n, C{} - (acc * inv_c0));
    }
    return g;
}

// Square root with prescribed constant term s0 (s0^2 must equal [t^0]f) and
// inv_two_s0 the exact reciprocal of 2*s0.
template <class C>
TSeries<C> ts_sqrt(const TSeries<C>& f, const C& s0, const C& inv_two_s0)
{
    const int N = f.order();
    TSeries<C> s(N);
    s.set_coeff(0, s0);
    for (int n = 1; n <= N; ++n) {
        C acc = f.coeff(n);
        for (int k = 1; k < n; ++k) acc += C{} - (s.coeff(k) * s.coeff(n - k));
        s.set_coeff(n, acc * inv_two_s0);
    }
    return s;
}

// Compositional inverse of f = t + O(t^2): returns g with f(g(t)) = t up to
// the truncation order. The linear coefficient must be the ring unit.
template <class C>
TSeries<C> ts_reversion(const TSeries<C>& f)
{
    if (f.order() < 1) throw std::domain_error("ts_reversion: order too small");
    if (!qeo::is_zero(f.coeff(0))) throw std::domain_error("ts_reversion: nonzero constant term");
    if (!(f.coeff(1) == ring_one<C>())) throw std::domain_error("ts_reversion: linear coefficient is not one");
    const int N = f.order();
    TSeries<C> g = TSeries<C>::t_power(N, 1, ring_one<C>());
    // fixed point g <- g - (f(g) - t): gains at least one order per pass
    for (int pass = 2; pass <= N; ++pass) {
        TSeries<C> err = ts_compose(f, g);
        err -= TSeries<C>::t_power(N, 1, ring_one<C>());
        g -= err;
    }
    return g;
}

} // namespace qeo

#endif
