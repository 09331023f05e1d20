#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms for the exchange types.
 *
 *   polynomial   ["1", "-2", "1/2"]            coefficient strings, lowest first
 *   vector       {"coeffs": {"0": "3", "5": "1/2"}}
 *   series       {"order": N, "coeffs": [poly, poly, ...]}   N+1 entries
 *   normal word  {"x": a, "y": b}
 *   tensor       {"arity": k, "coeffs": [{"index": [n1..nk], "value": "r"}]}
 *   sheffer pair {"mu": [..], "sigma": [..], "order": N}
 *   sequence     [poly, poly, ...]
 */

#include "opcalc/normal_series.hpp"
#include "opcalc/polynomial.hpp"
#include "opcalc/power_series.hpp"
#include "opcalc/recursion.hpp"
#include "opcalc/ring.hpp"
#include "opcalc/series_matrix.hpp"
#include "opcalc/sheffer.hpp"
#include "opcalc/vector.hpp"
#include "opcalc/word.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace opcalc {

using json = nlohmann::json;

inline json poly_to_json(const Polynomial& p) {
    json out = json::array();
    for (std::size_t k = 0; k < p.size(); ++k) out.push_back(p.coeff(k).to_string());
    return out;
}

inline Polynomial poly_from_json(const Ring& ring, const json& j) {
    if (!j.is_array()) throw ParseError(0, "array", "polynomial JSON must be an array of strings");
    std::vector<RingValue> coeffs;
    for (const auto& c : j) coeffs.push_back(ring.parse(c.get<std::string>()));
    return Polynomial(ring, std::move(coeffs));
}

inline json vector_to_json(const Vector& v) {
    json coeffs = json::object();
    for (const auto& [n, c] : v.support()) coeffs[std::to_string(n)] = c.to_string();
    return json{{"coeffs", std::move(coeffs)}};
}

inline Vector vector_from_json(const Ring& ring, const json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw ParseError(0, "object with \"coeffs\"", "vector JSON must be {\"coeffs\": {...}}");
    Vector out(ring);
    for (const auto& [key, val] : j.at("coeffs").items())
        out.add_term(std::stoull(key), ring.parse(val.get<std::string>()));
    return out;
}

inline json series_to_json(const NormalSeries& s, Index order) {
    json coeffs = json::array();
    for (Index n = 0; n <= order; ++n) coeffs.push_back(poly_to_json(s.coeff(n)));
    return json{{"order", order}, {"coeffs", std::move(coeffs)}};
}

/// Reads a series truncation; coefficients beyond the stored order are zero.
inline NormalSeries series_from_json(const Ring& ring, const json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw ParseError(0, "object with \"coeffs\"", "series JSON must be {\"order\":N,\"coeffs\":[...]}");
    std::vector<Polynomial> coeffs;
    for (const auto& p : j.at("coeffs")) coeffs.push_back(poly_from_json(ring, p));
    return NormalSeries::from_coeffs(ring, std::move(coeffs));
}

inline json normal_word_to_json(const NormalWord& w) {
    return json{{"x", w.x_exp}, {"y", w.y_exp}};
}

inline json tensor_to_json(const Tensor& t) {
    json coeffs = json::array();
    for (const auto& [idx, c] : t.support())
        coeffs.push_back(json{{"index", idx}, {"value", c.to_string()}});
    return json{{"arity", t.arity()}, {"coeffs", std::move(coeffs)}};
}

inline Tensor tensor_from_json(const Ring& ring, const json& j) {
    Tensor t(ring, j.at("arity").get<std::size_t>());
    for (const auto& term : j.at("coeffs"))
        t.add_term(term.at("index").get<IndexTuple>(), ring.parse(term.at("value").get<std::string>()));
    return t;
}

inline json power_series_to_json(const PowerSeries& s) {
    json out = json::array();
    for (std::size_t k = 0; k <= s.order(); ++k) out.push_back(s.coeff(k).to_string());
    return out;
}

inline json sheffer_pair_to_json(const ShefferPair& p) {
    return json{{"mu", power_series_to_json(p.mu)},
                {"sigma", power_series_to_json(p.sigma)},
                {"order", p.order()}};
}

inline json sheffer_sequence_to_json(const ShefferSequence& s) {
    json out = json::array();
    for (const auto& p : s.polys()) out.push_back(poly_to_json(p));
    return out;
}

/// Row-major entry list.
inline json series_matrix_to_json(const SeriesMatrix& m, Index order) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) entries.push_back(series_to_json(m.entry(i, j), order));
    return json{{"k", m.dim()}, {"entries", std::move(entries)}};
}

}  // namespace opcalc
