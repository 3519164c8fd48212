#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "conley/error.hpp"
#include "conley/rational.hpp"

namespace conley {

// Fixed point index as the Brouwer degree of id - f on a small sphere around
// the fixed point, computed from exact rational samples of id - f: a winding
// number in the plane and a signed ray-crossing count in space.

struct Vec2 {
    Rational x, y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Vec3 {
    Rational x, y, z;
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Complex product, reading Vec2 as x + iy.
inline Vec2 complex_mul(const Vec2& a, const Vec2& b) { return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x}; }

inline Vec2 complex_pow(const Vec2& z, std::size_t k) {
    Vec2 r{1, 0};
    for (std::size_t i = 0; i < k; ++i) r = complex_mul(r, z);
    return r;
}

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }
inline bool is_zero(const Vec2& v) { return v.x == 0 && v.y == 0; }
inline bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

/// Values of id - f at points around a circle, in cyclic order.
class SampledLoop {
public:
    SampledLoop(std::vector<Vec2> samples, Rational radius) : samples_(std::move(samples)), radius_(std::move(radius)) {
        if (radius_ <= 0) fail(ErrorCode::domain, "loop radius must be positive");
        if (samples_.size() < 8)
            fail(ErrorCode::undersampled, "a loop needs at least 8 samples, got " + std::to_string(samples_.size()));
    }

    const std::vector<Vec2>& samples() const noexcept { return samples_; }
    const Rational& radius() const noexcept { return radius_; }

    /// No sample vanishes and consecutive samples are less than a quarter
    /// turn apart (positive dot product).
    void check() const {
        for (std::size_t i = 0; i < samples_.size(); ++i)
            if (is_zero(samples_[i]))
                fail(ErrorCode::domain, "sample " + std::to_string(i) + " is zero: a fixed point lies on the loop");
        for (std::size_t i = 0; i < samples_.size(); ++i) {
            const Vec2& a = samples_[i];
            const Vec2& b = samples_[(i + 1) % samples_.size()];
            if (dot(a, b) <= 0)
                fail(ErrorCode::undersampled, "samples " + std::to_string(i) + " and " +
                                                  std::to_string((i + 1) % samples_.size()) +
                                                  " are a quarter turn or more apart; refine the loop");
        }
    }

private:
    std::vector<Vec2> samples_;
    Rational radius_;
};

namespace detail {

/// Half-open quadrants 0..3 counterclockwise from the positive x axis.
inline int quadrant(const Vec2& v) {
    if (v.x > 0 && v.y >= 0) return 0;
    if (v.x <= 0 && v.y > 0) return 1;
    if (v.x < 0 && v.y <= 0) return 2;
    return 3;
}

} // namespace detail

/// Winding number of the sampled loop around the origin, counted as signed
/// quadrant-boundary crossings divided by four.
inline long winding_number(const SampledLoop& loop) {
    loop.check();
    const auto& s = loop.samples();
    long quarter_turns = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Vec2& a = s[i];
        const Vec2& b = s[(i + 1) % s.size()];
        const int step = (detail::quadrant(b) - detail::quadrant(a) + 4) % 4;
        if (step == 0) continue;
        const int turn = sgn(cross(a, b));
        // A step of less than a quarter turn crosses at most one axis, in the
        // direction given by the cross product.
        if ((step == 1 && turn <= 0) || (step == 3 && turn >= 0) || step == 2)
            fail(ErrorCode::inconsistency, "quadrant bookkeeping disagrees with orientation at sample " + std::to_string(i));
        quarter_turns += step == 1 ? 1 : -1;
    }
    if (quarter_turns % 4 != 0) fail(ErrorCode::inconsistency, "loop does not close up");
    return quarter_turns / 4;
}

namespace detail {

/// Exact point on the circle of the given radius near angle 2*pi*j/n: a
/// rational tangent half-angle parametrization of the first quadrant,
/// rotated by whole quarter turns.
inline Vec2 circle_point(const Rational& radius, std::size_t j, std::size_t n) {
    const std::size_t quarter = (4 * j) / n;
    const double angle = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n) -
                         static_cast<double>(quarter) * (M_PI / 2.0);
    Rational t(std::tan(angle / 2.0));
    Rational denom = 1 + t * t;
    Vec2 p{(1 - t * t) / denom, 2 * t / denom};
    for (std::size_t q = 0; q < quarter; ++q) p = Vec2{-p.y, p.x};
    return radius * p;
}

} // namespace detail

/// Samples id - f at n points of the circle of the given radius, where
/// `displacement(z)` returns z - f(z).
template <class Displacement>
SampledLoop sample_loop(Displacement&& displacement, const Rational& radius, std::size_t n) {
    std::vector<Vec2> values;
    values.reserve(n);
    for (std::size_t j = 0; j < n; ++j) values.push_back(displacement(detail::circle_point(radius, j, n)));
    return SampledLoop(std::move(values), radius);
}

using Triangle = std::array<std::size_t, 3>;

/// Triangulated sphere around the fixed point with the value of id - g at
/// every vertex. Triangles are oriented outward.
class SampledSphereMap {
public:
    SampledSphereMap(std::vector<Vec3> vertices, std::vector<Vec3> values, std::vector<Triangle> triangles)
        : vertices_(std::move(vertices)), values_(std::move(values)), triangles_(std::move(triangles)) {
        if (values_.size() != vertices_.size())
            fail(ErrorCode::format, "one value per vertex is required");
        if (triangles_.empty()) fail(ErrorCode::format, "sphere has no triangles");
        for (const auto& t : triangles_)
            for (std::size_t v : t)
                if (v >= vertices_.size()) fail(ErrorCode::format, "triangle references a missing vertex");
    }

    const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
    const std::vector<Vec3>& values() const noexcept { return values_; }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }

    /// Closed, consistently oriented surface (every directed edge used once and
    /// matched by its reverse), nonvanishing values, and for each triangle an
    /// image whose diameter is below its distance to the origin.
    void check() const;

private:
    std::vector<Vec3> vertices_;
    std::vector<Vec3> values_;
    std::vector<Triangle> triangles_;
};

namespace detail {

/// Squared distance from the origin to the closed triangle abc.
inline Rational origin_distance_sq(const Vec3& a, const Vec3& b, const Vec3& c) {
    // Voronoi-region walk for the closest point to p = 0.
    const Vec3 ab = b - a, ac = c - a;
    const Vec3 ap = Rational(-1) * a;
    const Rational d1 = dot(ab, ap), d2 = dot(ac, ap);
    if (d1 <= 0 && d2 <= 0) return dot(a, a);
    const Vec3 bp = Rational(-1) * b;
    const Rational d3 = dot(ab, bp), d4 = dot(ac, bp);
    if (d3 >= 0 && d4 <= d3) return dot(b, b);
    const Rational vc = d1 * d4 - d3 * d2;
    if (vc <= 0 && d1 >= 0 && d3 <= 0) {
        const Vec3 q = a + (d1 / (d1 - d3)) * ab;
        return dot(q, q);
    }
    const Vec3 cp = Rational(-1) * c;
    const Rational d5 = dot(ab, cp), d6 = dot(ac, cp);
    if (d6 >= 0 && d5 <= d6) return dot(c, c);
    const Rational vb = d5 * d2 - d1 * d6;
    if (vb <= 0 && d2 >= 0 && d6 <= 0) {
        const Vec3 q = a + (d2 / (d2 - d6)) * ac;
        return dot(q, q);
    }
    const Rational va = d3 * d6 - d5 * d4;
    if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
        const Vec3 q = b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b);
        return dot(q, q);
    }
    const Rational denom = va + vb + vc;
    const Vec3 q = a + (vb / denom) * ab + (vc / denom) * ac;
    return dot(q, q);
}

inline Rational diameter_sq(const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 e1 = b - a, e2 = c - b, e3 = a - c;
    Rational m = dot(e1, e1);
    if (Rational l = dot(e2, e2); l > m) m = l;
    if (Rational l = dot(e3, e3); l > m) m = l;
    return m;
}

} // namespace detail

inline void SampledSphereMap::check() const {
    std::map<std::pair<std::size_t, std::size_t>, int> directed;
    for (const auto& t : triangles_)
        for (int e = 0; e < 3; ++e) {
            const std::size_t u = t[e], v = t[(e + 1) % 3];
            if (u == v) fail(ErrorCode::format, "triangle with a repeated vertex");
            if (++directed[{u, v}] > 1) fail(ErrorCode::format, "edge used twice with the same orientation");
        }
    for (const auto& [edge, count] : directed)
        if (!directed.contains({edge.second, edge.first}))
            fail(ErrorCode::format, "surface is not closed: edge " + std::to_string(edge.first) + "-" +
                                        std::to_string(edge.second) + " has no opposite triangle");
    for (std::size_t v = 0; v < values_.size(); ++v)
        if (is_zero(values_[v]))
            fail(ErrorCode::domain, "value at vertex " + std::to_string(v) + " is zero: a fixed point lies on the sphere");
    for (std::size_t i = 0; i < triangles_.size(); ++i) {
        const auto& t = triangles_[i];
        const Vec3 &a = values_[t[0]], &b = values_[t[1]], &c = values_[t[2]];
        if (detail::diameter_sq(a, b, c) >= detail::origin_distance_sq(a, b, c))
            fail(ErrorCode::undersampled,
                 "image of triangle " + std::to_string(i) + " is too large relative to its distance from the origin");
    }
}

/// Directions tried in turn when the ray from the origin grazes an edge or
/// vertex of an image triangle.
inline const std::array<Vec3, 8>& ray_directions() {
    static const std::array<Vec3, 8> dirs = {{
        {3, 5, 7},
        {-5, 7, 11},
        {7, -11, 13},
        {11, 13, -17},
        {-13, -17, 19},
        {17, -19, -23},
        {-19, 23, -29},
        {-23, -29, -31},
    }};
    return dirs;
}

/// Degree of the sampled map, as the signed count of image triangles crossed
/// by a ray from the origin. Each crossing counts with the orientation of the
/// image triangle as seen from the origin.
inline long sphere_degree(const SampledSphereMap& s) {
    s.check();
    for (const Vec3& d : ray_directions()) {
        long total = 0;
        bool grazing = false;
        for (const auto& t : s.triangles()) {
            const Vec3 &a = s.values()[t[0]], &b = s.values()[t[1]], &c = s.values()[t[2]];
            const int orient = sgn(det3(a, b, c));
            if (orient == 0) {
                // Flat image through the origin: only a ray inside its plane can meet it.
                Vec3 n = cross(a, b);
                if (is_zero(n)) n = cross(b, c);
                if (is_zero(n)) n = cross(c, a);
                if (is_zero(n) ? is_zero(cross(d, a)) : dot(n, d) == 0) {
                    grazing = true;
                    break;
                }
                continue;
            }
            // d = alpha a + beta b + gamma c; the ray meets the triangle iff all are positive.
            const int s1 = sgn(det3(d, b, c)) * orient;
            const int s2 = sgn(det3(a, d, c)) * orient;
            const int s3 = sgn(det3(a, b, d)) * orient;
            if (s1 < 0 || s2 < 0 || s3 < 0) continue;
            if (s1 == 0 || s2 == 0 || s3 == 0) {
                grazing = true;
                break;
            }
            total += orient;
        }
        if (!grazing) return total;
    }
    fail(ErrorCode::degeneracy, "every probe direction grazes an image triangle");
}

struct SphereMesh {
    std::vector<Vec3> vertices;
    std::vector<Triangle> triangles;
};

/// Heights 0 = t_0 < ... < t_k = radius, equally spaced.
inline std::vector<Rational> uniform_levels(const Rational& radius, std::size_t k) {
    std::vector<Rational> levels(k + 1);
    for (std::size_t j = 0; j <= k; ++j) levels[j] = radius * ratio(static_cast<unsigned long>(j), static_cast<unsigned long>(k));
    return levels;
}

/// Heights 0, first, first*r, ..., radius growing geometrically, so rows
/// crowd towards the equator t = 0.
inline std::vector<Rational> graded_levels(const Rational& radius, std::size_t k, const Rational& first) {
    if (k < 2 || first <= 0 || first >= radius) fail(ErrorCode::domain, "graded_levels: need k >= 2 and 0 < first < radius");
    std::vector<Rational> levels(k + 1);
    levels[0] = 0;
    levels[1] = first;
    levels[k] = radius;
    const double step = std::pow(Rational(radius / first).get_d(), 1.0 / static_cast<double>(k - 1));
    for (std::size_t j = 2; j < k; ++j) {
        levels[j] = Rational(levels[j - 1].get_d() * step);
        if (levels[j] <= levels[j - 1] || levels[j] >= radius)
            fail(ErrorCode::domain, "graded_levels: levels are not strictly increasing");
    }
    return levels;
}

/// Boundary of the octahedron |x| + |y| + |t| = radius. Each of the eight faces
/// is cut into rows at the given heights |t| = levels[j] and each row into
/// equal segments, k^2 triangles per face with k = levels.size() - 1.
inline SphereMesh octahedral_sphere(const std::vector<Rational>& levels) {
    if (levels.size() < 2 || levels.front() != 0) fail(ErrorCode::domain, "octahedral_sphere: levels must start at 0");
    for (std::size_t j = 1; j < levels.size(); ++j)
        if (levels[j] <= levels[j - 1]) fail(ErrorCode::domain, "octahedral_sphere: levels must increase");
    const std::size_t k = levels.size() - 1;
    const Rational& radius = levels.back();

    SphereMesh mesh;
    auto less = [](const Vec3& a, const Vec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    };
    std::map<Vec3, std::size_t, decltype(less)> index(less);
    auto vertex = [&](const Vec3& p) {
        auto [it, inserted] = index.emplace(p, mesh.vertices.size());
        if (inserted) mesh.vertices.push_back(p);
        return it->second;
    };

    for (int sx : {1, -1})
        for (int sy : {1, -1})
            for (int st : {1, -1}) {
                // rows[j][i], i = 0..k-j
                std::vector<std::vector<std::size_t>> rows(k + 1);
                for (std::size_t j = 0; j <= k; ++j) {
                    const Rational width = radius - levels[j];
                    const std::size_t segments = k - j;
                    for (std::size_t i = 0; i <= segments; ++i) {
                        Vec3 p{0, 0, st * levels[j]};
                        if (segments > 0) {
                            const Rational share = ratio(static_cast<unsigned long>(i), static_cast<unsigned long>(segments));
                            p.x = sx * width * (1 - share);
                            p.y = sy * width * share;
                        }
                        rows[j].push_back(vertex(p));
                    }
                }
                auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
                    const Vec3 &pa = mesh.vertices[a], &pb = mesh.vertices[b], &pc = mesh.vertices[c];
                    if (det3(pa, pb, pc) > 0)
                        mesh.triangles.push_back({a, b, c});
                    else
                        mesh.triangles.push_back({a, c, b});
                };
                for (std::size_t j = 0; j < k; ++j) {
                    const std::size_t segments = k - j;
                    for (std::size_t i = 0; i < segments; ++i) emit(rows[j][i], rows[j][i + 1], rows[j + 1][i]);
                    for (std::size_t i = 0; i + 1 < segments; ++i)
                        emit(rows[j][i + 1], rows[j + 1][i + 1], rows[j + 1][i]);
                }
            }
    return mesh;
}

/// Samples id - g over a mesh, where `displacement(p)` returns p - g(p).
template <class Displacement>
SampledSphereMap sample_sphere_map(Displacement&& displacement, const SphereMesh& mesh) {
    std::vector<Vec3> values;
    values.reserve(mesh.vertices.size());
    for (const Vec3& p : mesh.vertices) values.push_back(displacement(p));
    return SampledSphereMap(mesh.vertices, std::move(values), mesh.triangles);
}

enum class ExampleKind { planar_poly, volume_preserving_3d };

struct ExampleSample {
    std::variant<SampledLoop, SampledSphereMap> sample;
    std::size_t resolution = 0; // samples on the loop, or triangles on the sphere
    /// For the 3D map: bound on the relative error of the rational stand-in
    /// for |f'(z)|, verified exactly at every vertex.
    std::optional<Rational> fiber_tolerance;
};

/// Samples the planar map f(z) = z + z^l on a circle, or the volume
/// preserving map g(z, t) = (f(z), -t/|f'(z)|) on a graded octahedral sphere.
/// `resolution` is the number of loop samples, or a lower bound on the
/// number of triangles.
inline ExampleSample sample_example_map(ExampleKind kind, std::size_t l, const Rational& radius, std::size_t resolution) {
    if (l == 0) fail(ErrorCode::domain, "exponent l must be at least 1");
    if (radius <= 0) fail(ErrorCode::domain, "radius must be positive");

    if (kind == ExampleKind::planar_poly) {
        auto displacement = [l](const Vec2& z) { return z - (z + complex_pow(z, l)); };
        SampledLoop loop = sample_loop(displacement, radius, resolution);
        loop.check();
        return {std::move(loop), resolution, std::nullopt};
    }

    const Rational tolerance(1, 1UL << 20);
    auto displacement = [l, &tolerance](const Vec3& p) {
        const Vec2 z{p.x, p.y};
        const Vec2 fz = z + complex_pow(z, l);
        const Vec2 dfz = Vec2{1, 0} + Rational(static_cast<unsigned long>(l)) * complex_pow(z, l - 1);
        const Rational modulus_sq = dot(dfz, dfz);
        const Rational modulus(std::sqrt(modulus_sq.get_d()));
        Rational err = modulus * modulus - modulus_sq;
        if (err < 0) err = -err;
        if (err >= tolerance * modulus_sq)
            fail(ErrorCode::inconsistency, "rational approximation of |f'(z)| is outside tolerance");
        const Rational gt = -p.z / modulus;
        return Vec3{z.x - fz.x, z.y - fz.y, p.z - gt};
    };

    std::size_t k = 8 * l;
    while (8 * k * k < resolution) ++k;
    // Near the equator the z-part of id - g is of size |z|^l while the t-part
    // grows linearly in t, so the first row sits well below (radius/sqrt 2)^l.
    const double z_scale = std::pow(radius.get_d() / std::sqrt(2.0), static_cast<double>(l));
    for (int attempt = 0;; ++attempt) {
        Rational first = radius / static_cast<unsigned long>(k);
        if (Rational equator_row(z_scale / 8.0); equator_row < first) first = equator_row;
        SphereMesh mesh = octahedral_sphere(graded_levels(radius, k, first));
        SampledSphereMap sphere = sample_sphere_map(displacement, mesh);
        try {
            sphere.check();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::undersampled || attempt == 3) throw;
            k *= 2;
            continue;
        }
        const std::size_t triangles = sphere.triangles().size();
        return {std::move(sphere), triangles, tolerance};
    }
}

} // namespace conley
