#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "conley/dold.hpp"
#include "conley/error.hpp"
#include "conley/linalg.hpp"
#include "conley/matrix.hpp"

namespace conley {

enum class Orientation : int { reversing = -1, preserving = 1 };

inline Orientation orientation_from_sign(long sign) {
    if (sign == 1) return Orientation::preserving;
    if (sign == -1) return Orientation::reversing;
    fail(ErrorCode::domain, "orientation must be +1 or -1, got " + std::to_string(sign));
}

inline int sign_of(Orientation o) { return static_cast<int>(o); }

/// Representatives of the homological Conley indices h_0..h_d of an isolated
/// invariant set, one square matrix per degree (0x0 for a trivial index),
/// together with the ambient dimension d and the orientation sign of the map.
///
/// Representatives act on reduced homology of the index pair, so the
/// Lefschetz-type sum over degrees gives the fixed point index directly.
class ConleyIndexData {
public:
    ConleyIndexData(std::size_t ambient_dim, Orientation orientation, std::vector<RationalMatrix> reps)
        : ambient_dim_(ambient_dim), orientation_(orientation), reps_(std::move(reps)) {
        if (reps_.size() != ambient_dim_ + 1)
            fail(ErrorCode::dimension, "expected " + std::to_string(ambient_dim_ + 1) +
                                           " representatives for ambient dimension " +
                                           std::to_string(ambient_dim_) + ", got " + std::to_string(reps_.size()));
        for (std::size_t r = 0; r < reps_.size(); ++r)
            if (!reps_[r].is_square())
                fail(ErrorCode::dimension, "representative in degree " + std::to_string(r) + " is not square");
    }

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    Orientation orientation() const noexcept { return orientation_; }
    const std::vector<RationalMatrix>& reps() const noexcept { return reps_; }
    const RationalMatrix& rep(std::size_t r) const { return reps_.at(r); }

    friend bool operator==(const ConleyIndexData&, const ConleyIndexData&) = default;

private:
    std::size_t ambient_dim_;
    Orientation orientation_;
    std::vector<RationalMatrix> reps_;
};

/// i(f^n, X) = sum_r (-1)^r trace(h_r^n) for n = 1..n_max, as exact values.
inline std::vector<Rational> index_values(const ConleyIndexData& data, std::size_t n_max) {
    if (n_max == 0) fail(ErrorCode::domain, "index_sequence: n_max must be at least 1");
    std::vector<Rational> values(n_max);
    for (std::size_t r = 0; r < data.reps().size(); ++r) {
        const RationalMatrix& h = data.rep(r);
        if (h.rows() == 0) continue;
        std::vector<Rational> traces = trace_power_sequence_newton(h, n_max);
        for (std::size_t n = 0; n < n_max; ++n) {
            if (r % 2 == 0)
                values[n] += traces[n];
            else
                values[n] -= traces[n];
        }
    }
    return values;
}

/// Fixed point index sequence of the iterates.
///
/// The sum of power traces obeys a linear recurrence whose order D is the
/// total size of the representatives, so a candidate period p holds for all
/// n once I_{n+p} = I_n for n = 1..D. The returned period is the smallest p
/// <= n_max certified that way and the window is padded to whole periods;
/// without such a p the window is returned as is with period n_max.
inline IndexSequence index_sequence(const ConleyIndexData& data, std::size_t n_max) {
    if (n_max == 0) fail(ErrorCode::domain, "index_sequence: n_max must be at least 1");
    std::size_t order = 0;
    for (const auto& h : data.reps()) order += h.rows();
    const std::size_t horizon = n_max + order;
    std::vector<Rational> values = index_values(data, horizon);
    for (std::size_t n = 0; n < horizon; ++n)
        if (!is_integer(values[n]))
            fail(ErrorCode::inconsistency, "index of iterate n=" + std::to_string(n + 1) + " is " +
                                               values[n].get_str() + ", not an integer");

    for (std::size_t p = 1; p <= n_max; ++p) {
        bool periodic = true;
        for (std::size_t n = 0; n + p < horizon && periodic; ++n) periodic = values[n] == values[n + p];
        if (periodic) return IndexSequence::from_periodic_values(values, p, n_max);
    }
    values.resize(n_max);
    return IndexSequence(std::move(values), n_max);
}

/// Attractor: h_0 is the identity of Q, every other index trivial.
inline ConleyIndexData canonical_attractor(std::size_t d, Orientation orientation) {
    if (d == 0) fail(ErrorCode::domain, "canonical_attractor: dimension must be at least 1");
    std::vector<RationalMatrix> reps(d + 1);
    reps[0] = RationalMatrix{{1}};
    return {d, orientation, std::move(reps)};
}

/// Repeller: only h_d is nontrivial, multiplication by the orientation sign.
inline ConleyIndexData canonical_repeller(std::size_t d, Orientation orientation) {
    if (d == 0) fail(ErrorCode::domain, "canonical_repeller: dimension must be at least 1");
    std::vector<RationalMatrix> reps(d + 1);
    reps[d] = RationalMatrix{{sign_of(orientation)}};
    return {d, orientation, std::move(reps)};
}

/// Index data for the inverse map: h_r(f^-1) = d(f) * transpose(h_{d-r}(f)).
inline ConleyIndexData szymczak_dual(const ConleyIndexData& data) {
    const std::size_t d = data.ambient_dim();
    const Rational s = sign_of(data.orientation());
    std::vector<RationalMatrix> reps(d + 1);
    for (std::size_t r = 0; r <= d; ++r) reps[r] = s * data.rep(d - r).transpose();
    return {d, data.orientation(), std::move(reps)};
}

/// True iff h_{d-r}(f) is spectrum equivalent to d(f) * transpose(h_r(f^-1))
/// in every degree.
inline bool check_duality(const ConleyIndexData& f, const ConleyIndexData& finv) {
    if (f.ambient_dim() != finv.ambient_dim())
        fail(ErrorCode::dimension, "check_duality: ambient dimensions differ");
    if (f.orientation() != finv.orientation())
        fail(ErrorCode::domain, "check_duality: a map and its inverse share the orientation sign");
    const std::size_t d = f.ambient_dim();
    const Rational s = sign_of(f.orientation());
    for (std::size_t r = 0; r <= d; ++r)
        if (!spectrum_equivalent(f.rep(d - r), s * finv.rep(r).transpose())) return false;
    return true;
}

} // namespace conley
