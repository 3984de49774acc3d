#ifndef SESQUI_EXACT_SERIES_JSON_HPP
#define SESQUI_EXACT_SERIES_JSON_HPP

#include "json.hpp"

#include "sesqui/exact/series.hpp"

namespace sesqui {

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings; both forms are accepted on input.
nlohmann::ordered_json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json rational_to_json(const Rational& r); // "p/q" string
Rational rational_from_json(const nlohmann::ordered_json& j);

// [{"a":..,"b":..,"k":..,"num":..,"den":..}, ...] in canonical term order.
nlohmann::ordered_json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::ordered_json& terms, int order);

} // namespace sesqui

#endif
