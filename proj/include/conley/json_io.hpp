#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "conley/conley_index.hpp"
#include "conley/degree.hpp"
#include "conley/dold.hpp"
#include "conley/error.hpp"
#include "conley/finite_map.hpp"
#include "conley/matrix.hpp"
#include "conley/radial.hpp"
#include "conley/rational.hpp"
#include "conley/realize.hpp"

namespace conley::json_io {

// JSON shapes. Rationals are written as strings "p" or "p/q"; on input an
// integer JSON number is accepted too. Counts of any kind are plain
// JSON numbers.

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { fail(ErrorCode::format, what); }

inline const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) bad(std::string("expected an object with field '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) bad(std::string("missing field '") + name + "'");
    return *it;
}

inline const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    return j;
}

} // namespace detail

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(j.get<unsigned long>()) : Rational(j.get<long>());
    detail::bad("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

inline Json to_json(const Rational& q) { return to_string(q); }

inline std::size_t nat_from_json(const Json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        if (is_integer(q) && q >= 0 && q.get_num().fits_ulong_p()) return q.get_num().get_ui();
    }
    detail::bad(std::string(what) + " must be a natural number, got " + j.dump());
}

inline std::size_t key_index(const std::string& key) {
    const Rational q = parse_rational(key);
    if (!is_integer(q) || q < 1 || !q.get_num().fits_ulong_p()) detail::bad("key '" + key + "' is not a positive integer");
    return q.get_num().get_ui();
}

// ---- matrices ------------------------------------------------------------

/// {"rows": r, "cols": c, "entries": [[...], ...]}, or a bare array of rows.
inline RationalMatrix matrix_from_json(const Json& j) {
    const Json* rows_json = &j;
    std::size_t rows = 0, cols = 0;
    bool declared = false;
    if (j.is_object()) {
        rows = nat_from_json(detail::field(j, "rows"), "rows");
        cols = nat_from_json(detail::field(j, "cols"), "cols");
        rows_json = &detail::field(j, "entries");
        declared = true;
    }
    detail::array(*rows_json, "matrix entries");
    if (!declared) {
        rows = rows_json->size();
        cols = rows == 0 ? 0 : detail::array((*rows_json)[0], "matrix row").size();
    }
    if (rows_json->size() != rows) fail(ErrorCode::dimension, "matrix has the wrong number of rows");
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = detail::array((*rows_json)[i], "matrix row");
        if (row.size() != cols) fail(ErrorCode::dimension, "matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(row[k]);
    }
    return m;
}

inline Json to_json(const RationalMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

// ---- finite maps ---------------------------------------------------------

/// {"size": n, "images": [...]}, or a bare array of images.
inline FiniteMap map_from_json(const Json& j) {
    const Json* images = &j;
    if (j.is_object()) {
        images = &detail::field(j, "images");
        const std::size_t size = nat_from_json(detail::field(j, "size"), "size");
        if (detail::array(*images, "images").size() != size) fail(ErrorCode::dimension, "map size and image count differ");
    }
    detail::array(*images, "images");
    std::vector<std::size_t> v;
    for (const Json& x : *images) v.push_back(nat_from_json(x, "image"));
    return FiniteMap(std::move(v));
}

inline Json to_json(const FiniteMap& phi) { return {{"size", phi.size()}, {"images", phi.images()}}; }

/// {"k": count} with cycle lengths as keys.
inline CycleCounts cycle_counts_from_json(const Json& j) {
    if (!j.is_object()) detail::bad("cycle counts must be an object keyed by cycle length");
    CycleCounts c;
    for (const auto& [key, value] : j.items()) c.set(key_index(key), nat_from_json(value, "cycle count"));
    return c;
}

inline Json to_json(const CycleCounts& c) {
    Json j = Json::object();
    for (const auto& [k, n] : c.entries()) j[std::to_string(k)] = n;
    return j;
}

// ---- Dold data -----------------------------------------------------------

/// {"prefix": [...], "period": p}.
inline IndexSequence sequence_from_json(const Json& j) {
    const Json& prefix = detail::array(detail::field(j, "prefix"), "prefix");
    std::vector<Rational> values;
    for (const Json& x : prefix) values.push_back(rational_from_json(x));
    return IndexSequence(std::move(values), nat_from_json(detail::field(j, "period"), "period"));
}

inline Json to_json(const IndexSequence& s) {
    Json prefix = Json::array();
    for (const Rational& q : s.prefix()) prefix.push_back(to_string(q));
    return {{"prefix", std::move(prefix)}, {"period", s.period()}};
}

/// {"k": "a_k"}; absent keys are zero.
inline DoldCoefficients coeffs_from_json(const Json& j) {
    if (!j.is_object()) detail::bad("coefficients must be an object keyed by k");
    DoldCoefficients a;
    for (const auto& [key, value] : j.items()) a.set(key_index(key), rational_from_json(value));
    return a;
}

inline Json to_json(const DoldCoefficients& a) {
    Json j = Json::object();
    for (const auto& [k, q] : a.entries()) j[std::to_string(k)] = to_string(q);
    return j;
}

// ---- index data ----------------------------------------------------------

inline Orientation orientation_from_json(const Json& j) {
    if (j.is_number_integer()) return orientation_from_sign(j.get<long>());
    if (j.is_string()) {
        const Rational q = parse_rational(j.get<std::string>());
        if (q == 1 || q == -1) return orientation_from_sign(q.get_num().get_si());
    }
    fail(ErrorCode::domain, "orientation must be 1 or -1, got " + j.dump());
}

inline std::vector<RationalMatrix> matrices_from_json(const Json& j, const char* what) {
    std::vector<RationalMatrix> out;
    for (const Json& m : detail::array(j, what)) out.push_back(matrix_from_json(m));
    return out;
}

/// {"ambient_dim": d, "orientation": -1|1, "reps": [matrix, ...]}.
inline ConleyIndexData conley_from_json(const Json& j) {
    return {nat_from_json(detail::field(j, "ambient_dim"), "ambient_dim"),
            orientation_from_json(detail::field(j, "orientation")),
            matrices_from_json(detail::field(j, "reps"), "reps")};
}

inline Json to_json(const ConleyIndexData& d) {
    Json reps = Json::array();
    for (const auto& m : d.reps()) reps.push_back(to_json(m));
    return {{"ambient_dim", d.ambient_dim()}, {"orientation", sign_of(d.orientation())}, {"reps", std::move(reps)}};
}

/// {"base_dim": d, "orientation": -1|1, "actions": [matrix, ...]}.
inline RadialModel radial_from_json(const Json& j) {
    return {nat_from_json(detail::field(j, "base_dim"), "base_dim"),
            orientation_from_json(detail::field(j, "orientation")),
            matrices_from_json(detail::field(j, "actions"), "actions")};
}

inline Json to_json(const RadialModel& m) {
    Json actions = Json::array();
    for (const auto& a : m.actions()) actions.push_back(to_json(a));
    return {{"base_dim", m.base_dim()}, {"orientation", sign_of(m.orientation())}, {"actions", std::move(actions)}};
}

inline Json to_json(const RealizationWitness& w) {
    return {{"coeffs", to_json(w.a)},         {"b", to_json(w.b)},
            {"c", to_json(w.c)},              {"phi", to_json(w.phi)},
            {"phi_prime", to_json(w.phi_prime)}, {"conley", to_json(w.data)},
            {"verified_window", w.verified_window}, {"sequence", to_json(w.sequence)}};
}

// ---- sampled maps --------------------------------------------------------

inline Vec2 vec2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) detail::bad("expected a pair [x, y], got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline Vec3 vec3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) detail::bad("expected a triple [x, y, z], got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

inline Json to_json(const Vec2& v) { return Json::array({to_string(v.x), to_string(v.y)}); }
inline Json to_json(const Vec3& v) { return Json::array({to_string(v.x), to_string(v.y), to_string(v.z)}); }

/// {"radius": "p/q", "samples": [[x, y], ...]} with samples of id - f.
inline SampledLoop loop_from_json(const Json& j) {
    std::vector<Vec2> samples;
    for (const Json& s : detail::array(detail::field(j, "samples"), "samples")) samples.push_back(vec2_from_json(s));
    return SampledLoop(std::move(samples), rational_from_json(detail::field(j, "radius")));
}

inline Json to_json(const SampledLoop& loop) {
    Json samples = Json::array();
    for (const auto& s : loop.samples()) samples.push_back(to_json(s));
    return {{"radius", to_string(loop.radius())}, {"samples", std::move(samples)}};
}

/// {"vertices": [[x,y,z], ...], "values": [[x,y,z], ...], "triangles": [[i,j,k], ...]}.
inline SampledSphereMap sphere_from_json(const Json& j) {
    std::vector<Vec3> vertices, values;
    std::vector<Triangle> triangles;
    for (const Json& v : detail::array(detail::field(j, "vertices"), "vertices")) vertices.push_back(vec3_from_json(v));
    for (const Json& v : detail::array(detail::field(j, "values"), "values")) values.push_back(vec3_from_json(v));
    for (const Json& t : detail::array(detail::field(j, "triangles"), "triangles")) {
        if (!t.is_array() || t.size() != 3) detail::bad("triangle must list three vertex indices");
        triangles.push_back({nat_from_json(t[0], "vertex index"), nat_from_json(t[1], "vertex index"),
                             nat_from_json(t[2], "vertex index")});
    }
    return SampledSphereMap(std::move(vertices), std::move(values), std::move(triangles));
}

inline Json to_json(const SampledSphereMap& s) {
    Json vertices = Json::array(), values = Json::array(), triangles = Json::array();
    for (const auto& v : s.vertices()) vertices.push_back(to_json(v));
    for (const auto& v : s.values()) values.push_back(to_json(v));
    for (const auto& t : s.triangles()) triangles.push_back(Json::array({t[0], t[1], t[2]}));
    return {{"vertices", std::move(vertices)}, {"values", std::move(values)}, {"triangles", std::move(triangles)}};
}

/// Parses text, turning syntax errors into format errors.
inline Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorCode::format, std::string("invalid JSON: ") + e.what());
    }
}

} // namespace conley::json_io
