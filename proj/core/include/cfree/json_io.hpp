#pragma once

#include <variant>

#include <nlohmann/json.hpp>

#include <cfree/measures.hpp>
#include <cfree/partitions.hpp>
#include <cfree/series.hpp>

namespace cfree {

using json = nlohmann::json;

/// A series whose scalar mode is only known at run time (JSON / CLI boundary).
using AnySeries = std::variant<Series<ComplexRational>, Series<ComplexDouble>>;

/// Accepts "p/q", "p", or a JSON integer. Throws std::invalid_argument.
mpq_class rational_from_json(const json &j);

json to_json(const SetPartition &p);
json to_json(const NCLinkedPartition &g);
NCPartition nc_partition_from_json(const json &j);
NCLinkedPartition ncl_partition_from_json(const json &j);

/// {"order": N, "mode": "exact"|"approx", "coeffs": [[re, im], ...]}; exact
/// coefficients are "p/q" strings.
json to_json(const Series<ComplexRational> &s);
json to_json(const Series<ComplexDouble> &s);
json to_json(const AnySeries &s);
AnySeries series_from_json(const json &j);
Series<ComplexDouble> approx_series_from_json(const json &j);

json to_json(const CircleMeasure &m);
CircleMeasure measure_from_json(const json &j);

/// {"mu": measure, "nu": measure}
json to_json(const MeasurePair &p);
MeasurePair pair_from_json(const json &j);

/// {"gamma": "p/q" turns or [re, im], "sigma": [{"turns", "weight"}, ...]}
IdGenerator generator_from_json(const json &j);
json to_json(const IdGenerator &g);

} // namespace cfree
