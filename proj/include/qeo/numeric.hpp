#ifndef QEO_NUMERIC_HPP
#define QEO_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qeo {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den)
{
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Exact binomial coefficients, memoised row by row.
class BinomialTable {
public:
    const Int& at(long n, long k)
    {
        static const Int zero_{0};
        if (k < 0 || n < 0 || k > n) return zero_;
        while (static_cast<long>(rows_.size()) <= n) {
            const long m = static_cast<long>(rows_.size());
            std::vector<Int> row(m + 1);
            row[0] = 1;
            row[m] = 1;
            for (long j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

private:
    std::vector<std::vector<Int>> rows_;
};

inline Int binomial(long n, long k)
{
    static thread_local BinomialTable table;
    return table.at(n, k);
}

inline Rat rat_pow(const Rat& base, long e)
{
    if (e < 0) {
        if (is_zero(base)) throw std::domain_error("rat_pow: negative power of zero");
        return 1 / rat_pow(base, -e);
    }
    Rat acc(1);
    Rat b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline double to_double(const Rat& r) { return r.get_d(); }

} // namespace qeo

#endif
