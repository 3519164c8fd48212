#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conley/error.hpp"
#include "conley/rational.hpp"

namespace conley {

inline int mobius(std::size_t n) {
    if (n == 0) fail(ErrorCode::domain, "mobius: argument must be at least 1");
    int result = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

/// Divisors of n in increasing order.
inline std::vector<std::size_t> divisors(std::size_t n) {
    std::vector<std::size_t> low, high;
    for (std::size_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            low.push_back(d);
            if (d * d != n) high.push_back(n / d);
        }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

/// A sequence {I_n}_{n>=1} given by a finite window together with a declared
/// period. The window length is a whole number of periods and the values
/// repeat with the declared period inside it.
class IndexSequence {
public:
    IndexSequence(std::vector<Rational> prefix, std::size_t period)
        : prefix_(std::move(prefix)), period_(period) {
        if (period_ == 0) fail(ErrorCode::format, "declared period must be at least 1");
        if (prefix_.empty() || prefix_.size() % period_ != 0)
            fail(ErrorCode::format, "prefix length " + std::to_string(prefix_.size()) +
                                        " is not a positive multiple of the period " + std::to_string(period_));
        for (std::size_t n = period_; n < prefix_.size(); ++n)
            if (prefix_[n] != prefix_[n - period_])
                fail(ErrorCode::format, "prefix is not periodic with period " + std::to_string(period_) +
                                            " (I_" + std::to_string(n + 1) + " != I_" +
                                            std::to_string(n + 1 - period_) + ")");
    }

    /// Builds a sequence from the first values of a sequence known to have
    /// the given period, padding the window up to a whole number of periods.
    static IndexSequence from_periodic_values(const std::vector<Rational>& values, std::size_t period,
                                              std::size_t min_length) {
        if (period == 0 || values.size() < period) fail(ErrorCode::format, "not enough values for the period");
        std::size_t length = std::max(min_length, period);
        length = (length + period - 1) / period * period;
        std::vector<Rational> prefix(length);
        for (std::size_t n = 0; n < length; ++n) prefix[n] = values[n % period];
        return IndexSequence(std::move(prefix), period);
    }

    const std::vector<Rational>& prefix() const noexcept { return prefix_; }
    std::size_t period() const noexcept { return period_; }

    /// I_n for any n >= 1, using the declared period beyond the window.
    const Rational& value(std::size_t n) const {
        if (n == 0) fail(ErrorCode::domain, "sequence index starts at 1");
        return prefix_[(n - 1) % period_];
    }

    std::vector<Rational> window(std::size_t n_max) const {
        std::vector<Rational> out;
        out.reserve(n_max);
        for (std::size_t n = 1; n <= n_max; ++n) out.push_back(value(n));
        return out;
    }

    bool integral() const {
        return std::all_of(prefix_.begin(), prefix_.end(), [](const Rational& q) { return is_integer(q); });
    }

    friend bool operator==(const IndexSequence&, const IndexSequence&) = default;

private:
    std::vector<Rational> prefix_;
    std::size_t period_;
};

/// Coefficients a_k of I = sum_k a_k sigma^k; zero coefficients are not stored.
class DoldCoefficients {
public:
    DoldCoefficients() = default;
    DoldCoefficients(std::initializer_list<std::pair<const std::size_t, Rational>> entries) {
        for (const auto& [k, a] : entries) set(k, a);
    }

    Rational get(std::size_t k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set(std::size_t k, const Rational& a) {
        if (k == 0) fail(ErrorCode::domain, "normalized sequences are indexed from 1");
        if (a == 0)
            coeffs_.erase(k);
        else
            coeffs_[k] = a;
    }

    const std::map<std::size_t, Rational>& entries() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }
    std::size_t max_index() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    bool integral() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& e) { return is_integer(e.second); });
    }

    /// lcm of the indices with nonzero coefficient (1 if none).
    std::size_t lcm_of_support() const {
        std::size_t l = 1;
        for (const auto& [k, a] : coeffs_) l = std::lcm(l, k);
        return l;
    }

    friend bool operator==(const DoldCoefficients&, const DoldCoefficients&) = default;

private:
    std::map<std::size_t, Rational> coeffs_;
};

/// sigma^k: value k at multiples of k, 0 elsewhere.
inline IndexSequence normalized_sequence(std::size_t k, std::size_t n_max) {
    if (k == 0) fail(ErrorCode::domain, "normalized_sequence: k must be at least 1");
    if (n_max == 0 || n_max % k != 0)
        fail(ErrorCode::domain, "normalized_sequence: n_max must be a positive multiple of k");
    std::vector<Rational> prefix(n_max);
    for (std::size_t n = k; n <= n_max; n += k) prefix[n - 1] = static_cast<unsigned long>(k);
    return IndexSequence(std::move(prefix), k);
}

/// Verification window: the prefix, and never less than two periods.
inline std::size_t verification_window(const IndexSequence& seq) {
    return std::max(seq.prefix().size(), 2 * seq.period());
}

/// sum over k | n of mu(n/k) I_k, which equals n * a_n.
inline Rational mobius_sum(const IndexSequence& seq, std::size_t n) {
    Rational s = 0;
    for (std::size_t k : divisors(n)) {
        const int mu = mobius(n / k);
        if (mu > 0)
            s += seq.value(k);
        else if (mu < 0)
            s -= seq.value(k);
    }
    return s;
}

inline DoldCoefficients dold_decompose(const IndexSequence& seq) {
    DoldCoefficients a;
    for (std::size_t k = 1; k <= seq.period(); ++k) a.set(k, mobius_sum(seq, k) / static_cast<unsigned long>(k));
    const std::size_t window = verification_window(seq);
    for (std::size_t n = 1; n <= window; ++n) {
        Rational rebuilt = 0;
        for (std::size_t k : divisors(n)) {
            auto it = a.entries().find(k);
            if (it != a.entries().end()) rebuilt += static_cast<unsigned long>(k) * it->second;
        }
        if (rebuilt != seq.value(n))
            fail(ErrorCode::inconsistency,
                 "sequence is not a finite combination of normalized sequences: reconstruction differs at n=" +
                     std::to_string(n));
    }
    return a;
}

struct DoldCheck {
    bool ok = true;
    /// First index k whose coefficient a_k is not an integer.
    std::optional<std::pair<std::size_t, Rational>> first_violation;
};

/// Dold congruences, evaluated both as integrality of the coefficients and as
/// sum_{k|n} mu(n/k) I_k = 0 mod n over the verification window.
inline DoldCheck dold_check(const IndexSequence& seq) {
    DoldCoefficients a = dold_decompose(seq);
    DoldCheck by_coefficients;
    for (const auto& [k, ak] : a.entries())
        if (!is_integer(ak)) {
            by_coefficients = {false, std::make_pair(k, ak)};
            break;
        }

    std::optional<std::size_t> first_bad_congruence;
    const std::size_t window = verification_window(seq);
    for (std::size_t n = 1; n <= window && !first_bad_congruence; ++n) {
        Rational quotient = mobius_sum(seq, n) / static_cast<unsigned long>(n);
        if (!is_integer(quotient)) first_bad_congruence = n;
    }

    const bool agree = by_coefficients.ok == !first_bad_congruence.has_value() &&
                       (by_coefficients.ok || by_coefficients.first_violation->first == *first_bad_congruence);
    if (!agree) fail(ErrorCode::inconsistency, "congruence and coefficient forms of the Dold check disagree");
    return by_coefficients;
}

/// I_n = sum_{k|n} k a_k. The window covers at least n_max terms and is
/// rounded up to a whole number of periods (period = lcm of the support).
inline IndexSequence reconstruct(const DoldCoefficients& a, std::size_t n_max) {
    if (n_max == 0) fail(ErrorCode::domain, "reconstruct: n_max must be at least 1");
    const std::size_t period = a.lcm_of_support();
    std::vector<Rational> values(period);
    for (std::size_t n = 1; n <= period; ++n)
        for (const auto& [k, ak] : a.entries())
            if (n % k == 0) values[n - 1] += static_cast<unsigned long>(k) * ak;
    return IndexSequence::from_periodic_values(values, period, n_max);
}

} // namespace conley
