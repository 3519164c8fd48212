#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conley/conley_index.hpp"
#include "conley/dold.hpp"
#include "conley/error.hpp"
#include "conley/finite_map.hpp"
#include "conley/perm_endo.hpp"

namespace conley {

// Index sequences of isolated fixed points of orientation-reversing local
// homeomorphisms of R^3: the admissibility test on Dold coefficients and an
// explicit combinatorial witness (two permutations and the Conley index data
// they produce) for every admissible sequence.

struct ConditionCheck {
    bool ok = true;
    std::string reason; // first violated clause, empty when ok
};

/// Integer coefficients, a_1 <= 1, and a_k <= 0 for every odd k > 1.
/// (Finite support holds structurally for DoldCoefficients.)
inline ConditionCheck check_conditions(const DoldCoefficients& a) {
    for (const auto& [k, ak] : a.entries())
        if (!is_integer(ak))
            return {false, "a_" + std::to_string(k) + " = " + ak.get_str() + " is not an integer"};
    if (a.get(1) > 1) return {false, "a_1 = " + a.get(1).get_str() + " exceeds 1"};
    for (const auto& [k, ak] : a.entries())
        if (k > 1 && k % 2 == 1 && ak > 0)
            return {false, "a_" + std::to_string(k) + " = " + ak.get_str() + " is positive for odd k > 1"};
    return {};
}

/// 2 - #Fix(phi^n) - #Fix(phi'^n) for odd n, -#Fix(phi^n) + #Fix(phi'^n) for even n.
inline IndexSequence index_from_maps(const FiniteMap& phi, const FiniteMap& phi_prime, std::size_t n_max) {
    if (n_max == 0) fail(ErrorCode::domain, "index_from_maps: n_max must be at least 1");
    const std::size_t period =
        std::lcm(std::size_t{2},
                 std::lcm(periodic_orbit_counts(phi).lcm_of_lengths(), periodic_orbit_counts(phi_prime).lcm_of_lengths()));
    const std::vector<std::int64_t> fix = fix_sequence(phi, period);
    const std::vector<std::int64_t> fix_prime = fix_sequence(phi_prime, period);
    std::vector<Rational> values(period);
    for (std::size_t n = 1; n <= period; ++n) {
        const std::int64_t v = n % 2 == 1 ? 2 - fix[n - 1] - fix_prime[n - 1] : -fix[n - 1] + fix_prime[n - 1];
        values[n - 1] = static_cast<long>(v);
    }
    std::size_t minimal = period;
    for (std::size_t p : divisors(period)) {
        bool ok = true;
        for (std::size_t n = 0; n + p < period && ok; ++n) ok = values[n] == values[n + p];
        if (ok) {
            minimal = p;
            break;
        }
    }
    return IndexSequence::from_periodic_values(values, minimal, n_max);
}

namespace detail {
inline Rational count(const CycleCounts& c, std::size_t k) { return static_cast<unsigned long>(c.get(k)); }
} // namespace detail

/// Dold coefficients of the sequence produced by maps with b_k and c_k
/// periodic orbits of length k, cross-checked against index_from_maps.
inline DoldCoefficients coeffs_from_cycle_counts(const CycleCounts& b, const CycleCounts& c) {
    using detail::count;
    const std::size_t top = 2 * std::max({b.max_length(), c.max_length(), std::size_t{1}});
    DoldCoefficients a;
    for (std::size_t k = 1; k <= top; ++k) {
        Rational ak;
        if (k == 1)
            ak = 2 - count(b, 1) - count(c, 1);
        else if (k == 2)
            ak = -1 - count(b, 2) + count(c, 2) + count(c, 1);
        else if (k % 2 == 1)
            ak = -count(b, k) - count(c, k);
        else if ((k / 2) % 2 == 0)
            ak = -count(b, k) + count(c, k);
        else
            ak = -count(b, k) + count(c, k) + count(c, k / 2);
        a.set(k, ak);
    }

    const std::size_t window = 2 * std::lcm(std::lcm(b.lcm_of_lengths(), c.lcm_of_lengths()), std::size_t{2});
    IndexSequence direct =
        index_from_maps(permutation_from_cycle_counts(b), permutation_from_cycle_counts(c), window);
    IndexSequence rebuilt = reconstruct(a, window);
    if (direct.window(window) != rebuilt.window(window))
        fail(ErrorCode::inconsistency, "coefficients do not reproduce the orbit-count index sequence");
    return a;
}

struct CycleCountPair {
    CycleCounts b; // periodic orbits of phi
    CycleCounts c; // periodic orbits of phi'
};

/// Canonical nonnegative solution of the coefficient system with c_1 = 1,
/// b_2 >= 1 and c_k = 0 for odd k > 1.
inline CycleCountPair solve_witness(const DoldCoefficients& a) {
    ConditionCheck check = check_conditions(a);
    if (!check.ok) fail(ErrorCode::realizability, "sequence is not realizable: " + check.reason);

    auto to_count = [](const Rational& q) { return static_cast<std::size_t>(q.get_num().get_ui()); };
    CycleCountPair sol;
    sol.c.set(1, 1);
    sol.b.set(1, to_count(1 - a.get(1)));
    const Rational b2 = std::max(Rational(1), Rational(-a.get(2)));
    sol.b.set(2, to_count(b2));
    sol.c.set(2, to_count(a.get(2) + b2));
    for (std::size_t k = 3; k <= a.max_index(); ++k) {
        const Rational ak = a.get(k);
        if (k % 2 == 1) {
            sol.b.set(k, to_count(-ak));
        } else {
            sol.b.set(k, to_count(std::max(Rational(0), Rational(-ak))));
            sol.c.set(k, to_count(std::max(Rational(0), ak)));
        }
    }
    if (coeffs_from_cycle_counts(sol.b, sol.c) != a)
        fail(ErrorCode::inconsistency, "solve_witness: orbit counts do not reproduce the coefficients");
    return sol;
}

struct RealizationWitness {
    DoldCoefficients a;
    CycleCounts b;
    CycleCounts c;
    FiniteMap phi;
    FiniteMap phi_prime;
    ConleyIndexData data;
    IndexSequence sequence;
    std::size_t verified_window;
};

/// Full construction: orbit counts, permutations, index data in R^3 with
/// h_1 = reduced(phi) and h_2 = -reduced(phi'), and a check that the index
/// sequence of that data equals the requested one over the verified window.
inline RealizationWitness realize(const DoldCoefficients& a) {
    CycleCountPair counts = solve_witness(a);
    FiniteMap phi = permutation_from_cycle_counts(counts.b);
    FiniteMap phi_prime = permutation_from_cycle_counts(counts.c);

    std::vector<RationalMatrix> reps(4);
    reps[1] = reduced_perm_endo_matrix(phi);
    reps[2] = Rational(-1) * reduced_perm_endo_matrix(phi_prime);
    ConleyIndexData data(3, Orientation::reversing, std::move(reps));

    const std::size_t window =
        std::max<std::size_t>(24, 2 * std::lcm(counts.b.lcm_of_lengths(), counts.c.lcm_of_lengths()));
    IndexSequence sequence = index_sequence(data, window);
    IndexSequence expected = reconstruct(a, window);
    for (std::size_t n = 1; n <= window; ++n)
        if (sequence.value(n) != expected.value(n))
            fail(ErrorCode::inconsistency, "witness index differs from the requested sequence at n=" + std::to_string(n));

    return {a, std::move(counts.b), std::move(counts.c), std::move(phi), std::move(phi_prime),
            std::move(data), std::move(sequence), window};
}

} // namespace conley
