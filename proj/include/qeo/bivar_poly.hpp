#ifndef QEO_BIVAR_POLY_HPP
#define QEO_BIVAR_POLY_HPP

#include "qeo/numeric.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qeo {

// Polynomial in the two weight variables (omega, v) with exact rational
// coefficients. Canonical form: no stored zero terms, ordered term map, so
// operator== is structural equality.
//
// deg_v may be negative (the ring is Q[omega, v, 1/v]): inverse powers of v
// arise when composing M into itself. Generating-function outputs stay in
// Q[omega, v]; tests assert that where it matters.
class BivarPoly {
public:
    using Key = std::pair<int, int>; // (deg_omega, deg_v)
    using Terms = std::map<Key, Rat>;

    BivarPoly() = default;
    explicit BivarPoly(const Rat& c)
    {
        if (!qeo::is_zero(c)) terms_[{0, 0}] = c;
    }
    explicit BivarPoly(long c) : BivarPoly(Rat(c)) {}

    static BivarPoly zero() { return BivarPoly(); }
    static BivarPoly one() { return BivarPoly(Rat(1)); }
    static BivarPoly monomial(int deg_omega, int deg_v, const Rat& c = Rat(1))
    {
        BivarPoly p;
        if (deg_omega < 0) throw std::domain_error("BivarPoly: negative omega degree");
        if (!qeo::is_zero(c)) p.terms_[{deg_omega, deg_v}] = c;
        return p;
    }
    static BivarPoly omega() { return monomial(1, 0); }
    static BivarPoly v() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }

    Rat constant_term() const
    {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    int degree_omega() const
    {
        int d = 0;
        for (auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    int degree_v() const
    {
        int d = 0;
        for (auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }

    Rat coeff(int deg_omega, int deg_v) const
    {
        auto it = terms_.find({deg_omega, deg_v});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    BivarPoly& operator+=(const BivarPoly& o)
    {
        for (auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    BivarPoly& operator-=(const BivarPoly& o)
    {
        for (auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator-(const BivarPoly& a)
    {
        BivarPoly r;
        for (auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }

    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b)
    {
        BivarPoly r;
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }

    BivarPoly& scale(const Rat& c)
    {
        if (qeo::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, coef] : terms_) coef *= c;
        return *this;
    }
    friend BivarPoly operator*(BivarPoly a, const Rat& c) { return a.scale(c); }
    friend BivarPoly operator*(const Rat& c, BivarPoly a) { return a.scale(c); }

    BivarPoly pow(long e) const
    {
        if (e < 0) throw std::domain_error("BivarPoly::pow: negative exponent");
        BivarPoly acc = one();
        BivarPoly b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    // Specialisation of one or both variables; results stay in canonical form.
    BivarPoly eval_omega(const Rat& w) const
    {
        BivarPoly r;
        for (auto& [k, c] : terms_) r.add_term({0, k.second}, c * rat_pow(w, k.first));
        return r;
    }
    BivarPoly eval_v(const Rat& val) const
    {
        BivarPoly r;
        for (auto& [k, c] : terms_) r.add_term({k.first, 0}, c * rat_pow(val, k.second));
        return r;
    }
    Rat eval(const Rat& w, const Rat& val) const
    {
        Rat r(0);
        for (auto& [k, c] : terms_) r += c * rat_pow(w, k.first) * rat_pow(val, k.second);
        return r;
    }
    double eval_double(double w, double val) const
    {
        double r = 0;
        for (auto& [k, c] : terms_) {
            double m = c.get_d();
            for (int i = 0; i < k.first; ++i) m *= w;
            for (int i = 0; i < k.second; ++i) m *= val;
            for (int i = 0; i > k.second; --i) m /= val;
            r += m;
        }
        return r;
    }

    bool has_negative_v_degree() const
    {
        for (auto& [k, c] : terms_)
            if (k.second < 0) return true;
        return false;
    }

    // Exact division by a rational-coefficient polynomial in omega of the form
    // (omega + a); throws if the remainder is nonzero.
    BivarPoly divexact_omega_plus(const Rat& a) const
    {
        // Treat as polynomial in omega with coefficients polynomial in v.
        std::map<int, BivarPoly> by_omega;
        for (auto& [k, c] : terms_) by_omega[k.first] += monomial(0, k.second, c);
        int dmax = terms_.empty() ? 0 : degree_omega();
        BivarPoly q;
        // synthetic division from the top degree down
        BivarPoly cur;
        for (int d = dmax; d >= 1; --d) {
            auto it = by_omega.find(d);
            cur += (it == by_omega.end() ? BivarPoly() : it->second);
            // cur is the quotient coefficient at omega^{d-1}
            for (auto& [k, c] : cur.terms_) q.add_term({k.first + d - 1, k.second}, c);
            cur.scale(-a);
        }
        auto it0 = by_omega.find(0);
        BivarPoly r0 = (it0 == by_omega.end() ? BivarPoly() : it0->second);
        r0 += cur; // cur holds -a * (lowest quotient coefficient)

        if (!r0.is_zero()) throw std::domain_error("divexact_omega_plus: nonzero remainder");
        return q;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            Rat ac = abs(c);
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            first = false;
            bool has_var = k.first > 0 || k.second > 0;
            if (!has_var || ac != 1) {
                os << ac.get_str();
                if (has_var) os << "*";
            }
            if (k.first > 0) {
                os << "w";
                if (k.first > 1) os << "^" << k.first;
                if (k.second > 0) os << "*";
            }
            if (k.second > 0) {
                os << "v";
                if (k.second > 1) os << "^" << k.second;
            }
        }
        return os.str();
    }

private:
    void add_term(const Key& k, const Rat& c)
    {
        if (qeo::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (qeo::is_zero(it->second)) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline bool is_zero(const BivarPoly& p) { return p.is_zero(); }

} // namespace qeo

#endif
