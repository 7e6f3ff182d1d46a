#pragma once

#include <nlohmann/json.hpp>

#include "skein/hecke.hpp"
#include "skein/system.hpp"
#include "skein/trace.hpp"

namespace skein {

// Scalar: {"num": "...", "den": "...", "has_w": bool}, strings in q, z, w.
nlohmann::json to_json(const Scalar& x);
Scalar scalar_from_json(const nlohmann::json& j);

// SMonomial: [[k, mult], ...]
nlohmann::json to_json(const SMonomial& m);
SMonomial smonomial_from_json(const nlohmann::json& j);

// TraceValue: [{"monomial": [[k, mult], ...], "coeff": Scalar}, ...]
nlohmann::json to_json(const TraceValue& v);
TraceValue trace_value_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AlgebraElement& x);
nlohmann::json to_json(const LevelSystem& sys);
nlohmann::json to_json(const SolvedSystem& sol);

// Parses an expanded polynomial in q, z, w such as "q^2*z - 3/2*w + 1".
Scalar parse_scalar_polynomial(std::string_view text);

}  // namespace skein
