#ifndef QEO_JSON_IO_HPP
#define QEO_JSON_IO_HPP

#include "qeo/exactalg.hpp"

#include <json.hpp>

namespace qeo {

// Canonical JSON form: a list of [deg_t, deg_omega, deg_v, numerator,
// denominator] rows with decimal-string integers, ordered by (deg_t,
// deg_omega, deg_v). A bare polynomial serialises with deg_t = 0.
inline nlohmann::json to_json(const BivarPoly& p, int deg_t = 0)
{
    nlohmann::json rows = nlohmann::json::array();
    for (auto& [k, c] : p.terms()) {
        rows.push_back({deg_t, k.first, k.second, c.get_num().get_str(), c.get_den().get_str()});
    }
    return rows;
}

inline nlohmann::json to_json(const VSeries& f)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= f.order(); ++n)
        for (auto& row : to_json(f.coeff(n), n)) rows.push_back(row);
    return rows;
}

inline BivarPoly bivar_from_json(const nlohmann::json& rows)
{
    BivarPoly p;
    for (auto& row : rows) {
        if (row.at(0).get<int>() != 0) throw std::invalid_argument("bivar_from_json: nonzero deg_t");
        p += BivarPoly::monomial(row.at(1).get<int>(), row.at(2).get<int>(),
                                 rat_from_strings(row.at(3).get<std::string>(), row.at(4).get<std::string>()));
    }
    return p;
}

inline VSeries vseries_from_json(const nlohmann::json& rows)
{
    int order = 0;
    for (auto& row : rows) order = std::max(order, row.at(0).get<int>());
    VSeries f(order);
    for (auto& row : rows) {
        f.add_coeff(row.at(0).get<int>(),
                    BivarPoly::monomial(row.at(1).get<int>(), row.at(2).get<int>(),
                                        rat_from_strings(row.at(3).get<std::string>(), row.at(4).get<std::string>())));
    }
    return f;
}

} // namespace qeo

#endif
