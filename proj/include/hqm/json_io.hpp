#pragma once

#include "hqm/covercount.hpp"
#include "hqm/partitions.hpp"
#include "hqm/phipoly.hpp"
#include "hqm/qseries.hpp"
#include "hqm/quasimod.hpp"

#include <json.hpp>

namespace hqm {

using Json = nlohmann::ordered_json;

/// {"denom_exp": 24, "trunc": T, "terms": [[e, "n/d"], ...]}, terms by e ascending.
Json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// {"m": m, "monomials": [[[e_1..e_m], "n/d"], ...]}
Json ypoly_to_json(const YPoly& p);
/// {"weight_breakdown": {"w": count}, "homogeneous": bool, "monomials": [[[a,b,c], "n/d"], ...]}
Json qmpoly_to_json(const QMPoly& p);
Json fit_to_json(const FitResult& r);
/// Series plus the coefficients of q^0..q^dmax as strings.
Json count_series_to_json(const CountSeries& c);
Json partition_to_json(const Partition& p);

} // namespace hqm
