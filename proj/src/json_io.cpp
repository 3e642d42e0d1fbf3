#include "hqm/json_io.hpp"

#include <stdexcept>

namespace hqm {

Json qseries_to_json(const QSeries& s)
{
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json::array({e, c.str()}));
    return Json{{"denom_exp", QSeries::kDenomExp}, {"trunc", s.trunc24()}, {"terms", terms}};
}

QSeries qseries_from_json(const Json& j)
{
    if (!j.is_object() || j.value("denom_exp", 0) != QSeries::kDenomExp)
        throw std::invalid_argument("series JSON: expected denom_exp 24");
    std::map<long, Rational> terms;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw std::invalid_argument("series JSON: malformed term");
        if (!terms.emplace(t[0].get<long>(), Rational::parse(t[1].get<std::string>())).second)
            throw std::invalid_argument("series JSON: duplicate exponent");
    }
    return QSeries(terms, j.at("trunc").get<long>());
}

Json ypoly_to_json(const YPoly& p)
{
    Json mons = Json::array();
    for (const auto& [e, c] : p.ordered_monomials())
        mons.push_back(Json::array({e, c.str()}));
    return Json{{"m", p.m()}, {"monomials", mons}};
}

Json qmpoly_to_json(const QMPoly& p)
{
    Json wb = Json::object();
    for (const auto& [w, n] : p.weight_breakdown())
        wb[std::to_string(w)] = n;
    Json mons = Json::array();
    for (const auto& [k, c] : p.terms())
        mons.push_back(Json::array({Json::array({k[0], k[1], k[2]}), c.str()}));
    return Json{{"weight_breakdown", wb}, {"homogeneous", p.homogeneous()}, {"monomials", mons}};
}

Json fit_to_json(const FitResult& r)
{
    Json j = qmpoly_to_json(r.poly);
    j["wmax"] = r.wmax;
    j["unknowns"] = r.unknowns;
    j["equations"] = r.equations;
    j["surplus_verified"] = r.surplus_verified;
    return j;
}

Json count_series_to_json(const CountSeries& c)
{
    Json coeffs = Json::array();
    for (long d = 0; d < c.series.known_q_orders(); ++d)
        coeffs.push_back(c.series.coeff_q(d).str());
    return Json{{"m", c.m},
                {"g", c.g},
                {"b", c.b ? Json(*c.b) : Json(nullptr)},
                {"connected", c.connected},
                {"coefficients", coeffs},
                {"series", qseries_to_json(c.series)}};
}

Json partition_to_json(const Partition& p)
{
    Json a = Json::array();
    for (int v : p.parts())
        a.push_back(v);
    return a;
}

} // namespace hqm
