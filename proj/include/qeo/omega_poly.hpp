#ifndef QEO_OMEGA_POLY_HPP
#define QEO_OMEGA_POLY_HPP

#include "qeo/numeric.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeo {

// Dense univariate polynomial in omega over the rationals; the coefficient
// ring of the six-vertex q-series.
class OmegaPoly {
public:
    OmegaPoly() = default;
    OmegaPoly(long c)
    {
        if (c != 0) c_ = {Rat(c)};
    }
    explicit OmegaPoly(const Rat& c)
    {
        if (!qeo::is_zero(c)) c_ = {c};
    }
    explicit OmegaPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static OmegaPoly one() { return OmegaPoly(1); }
    static OmegaPoly omega()
    {
        OmegaPoly p;
        p.c_ = {Rat(0), Rat(1)};
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0); }

    OmegaPoly& operator+=(const OmegaPoly& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    friend OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b) { return a += b; }
    friend OmegaPoly operator-(OmegaPoly a, const OmegaPoly& b)
    {
        if (b.c_.size() > a.c_.size()) a.c_.resize(b.c_.size());
        for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] -= b.c_[i];
        a.trim();
        return a;
    }
    friend OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return OmegaPoly();
        OmegaPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (qeo::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    OmegaPoly& operator*=(const OmegaPoly& o) { return *this = *this * o; }

    OmegaPoly& scale(const Rat& s)
    {
        if (qeo::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    bool operator==(const OmegaPoly& o) const { return c_ == o.c_; }
    bool operator!=(const OmegaPoly& o) const { return !(*this == o); }

    // exact division by (omega + a); throws on nonzero remainder
    OmegaPoly divexact_omega_plus(const Rat& a) const
    {
        if (is_zero()) return OmegaPoly();
        const int d = degree();
        if (d == 0) throw std::domain_error("OmegaPoly::divexact_omega_plus: nonzero remainder");
        std::vector<Rat> q(d);
        Rat carry = c_[d];
        for (int k = d - 1; k >= 0; --k) {
            q[k] = carry;
            carry = c_[k] - a * carry;
        }
        if (!qeo::is_zero(carry)) throw std::domain_error("OmegaPoly::divexact_omega_plus: nonzero remainder");
        return OmegaPoly(std::move(q));
    }

    Rat eval(const Rat& w) const
    {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * w + *it;
        return r;
    }
    double eval_double(double w) const
    {
        double r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * w + it->get_d();
        return r;
    }

    bool integer_coeffs() const
    {
        for (auto& c : c_)
            if (c.get_den() != 1) return false;
        return true;
    }

    std::string to_string() const
    {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Rat& c = c_[k];
            if (qeo::is_zero(c)) continue;
            Rat ac = abs(c);
            if (!first) os << (sgn(c) < 0 ? " - " : " + ");
            else if (sgn(c) < 0) os << "-";
            first = false;
            if (k == 0 || ac != 1) {
                os << ac.get_str();
                if (k > 0) os << "*";
            }
            if (k > 0) {
                os << "w";
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && qeo::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline bool is_zero(const OmegaPoly& p) { return p.is_zero(); }

} // namespace qeo

#endif
