#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "conley/error.hpp"

namespace conley {

/// Self-map of {0, ..., size-1}. Size 0 is the empty map.
class FiniteMap {
public:
    FiniteMap() = default;

    explicit FiniteMap(std::vector<std::size_t> images) : images_(std::move(images)) {
        for (std::size_t j = 0; j < images_.size(); ++j)
            if (images_[j] >= images_.size())
                fail(ErrorCode::domain, "image " + std::to_string(images_[j]) + " of " + std::to_string(j) +
                                            " is outside a set of size " + std::to_string(images_.size()));
    }

    FiniteMap(std::initializer_list<std::size_t> images) : FiniteMap(std::vector<std::size_t>(images)) {}

    static FiniteMap identity(std::size_t n) {
        std::vector<std::size_t> img(n);
        std::iota(img.begin(), img.end(), std::size_t{0});
        return FiniteMap(std::move(img));
    }

    static FiniteMap constant(std::size_t n, std::size_t value) { return FiniteMap(std::vector<std::size_t>(n, value)); }

    std::size_t size() const noexcept { return images_.size(); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    std::size_t operator()(std::size_t j) const { return images_[j]; }

    bool is_bijective() const {
        std::vector<bool> hit(images_.size(), false);
        for (std::size_t v : images_) {
            if (hit[v]) return false;
            hit[v] = true;
        }
        return true;
    }

    /// (this o other)(j) = this(other(j))
    FiniteMap after(const FiniteMap& other) const {
        if (other.size() != size()) fail(ErrorCode::dimension, "composition of maps on different sets");
        std::vector<std::size_t> img(size());
        for (std::size_t j = 0; j < size(); ++j) img[j] = images_[other.images_[j]];
        return FiniteMap(std::move(img));
    }

    FiniteMap power(std::size_t n) const {
        FiniteMap result = identity(size());
        for (std::size_t k = 0; k < n; ++k) result = after(result);
        return result;
    }

    friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

private:
    std::vector<std::size_t> images_;
};

/// Sparse count of cycles (or periodic orbits) by length. Zero counts are
/// never stored.
class CycleCounts {
public:
    CycleCounts() = default;
    CycleCounts(std::initializer_list<std::pair<const std::size_t, std::size_t>> entries) {
        for (const auto& [k, c] : entries) set(k, c);
    }

    std::size_t get(std::size_t k) const {
        auto it = counts_.find(k);
        return it == counts_.end() ? 0 : it->second;
    }

    void set(std::size_t k, std::size_t count) {
        if (k == 0) fail(ErrorCode::domain, "cycle length must be at least 1");
        if (count == 0)
            counts_.erase(k);
        else
            counts_[k] = count;
    }

    void add(std::size_t k, std::size_t count = 1) { set(k, get(k) + count); }

    const std::map<std::size_t, std::size_t>& entries() const noexcept { return counts_; }
    bool empty() const noexcept { return counts_.empty(); }

    /// Number of points carried by the cycles, sum of k * count.
    std::size_t total_points() const {
        std::size_t n = 0;
        for (const auto& [k, c] : counts_) n += k * c;
        return n;
    }

    /// lcm of the cycle lengths present (1 if there are none).
    std::size_t lcm_of_lengths() const {
        std::size_t l = 1;
        for (const auto& [k, c] : counts_) l = std::lcm(l, k);
        return l;
    }

    std::size_t max_length() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

    friend bool operator==(const CycleCounts&, const CycleCounts&) = default;

private:
    std::map<std::size_t, std::size_t> counts_;
};

/// Largest invariant subset, phi^size(J), sorted.
inline std::vector<std::size_t> eventual_image(const FiniteMap& phi) {
    const std::size_t n = phi.size();
    std::vector<bool> in(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t x = j;
        for (std::size_t k = 0; k < n; ++k) x = phi(x);
        in[x] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n; ++j)
        if (in[j]) out.push_back(j);
    return out;
}

struct InducedPermutation {
    std::vector<std::size_t> carrier; // sorted eventual image
    FiniteMap permutation;            // phi on the carrier, in carrier indices
};

inline InducedPermutation induced_permutation(const FiniteMap& phi) {
    std::vector<std::size_t> carrier = eventual_image(phi);
    std::vector<std::size_t> index(phi.size(), 0);
    for (std::size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = i;
    std::vector<std::size_t> img(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) img[i] = index[phi(carrier[i])];
    return {std::move(carrier), FiniteMap(std::move(img))};
}

/// #Fix(phi^n) for n = 1..n_max.
inline std::vector<std::int64_t> fix_sequence(const FiniteMap& phi, std::size_t n_max) {
    if (n_max == 0) fail(ErrorCode::domain, "fix_sequence: n_max must be at least 1");
    std::vector<std::int64_t> out;
    out.reserve(n_max);
    FiniteMap iterate = phi;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::int64_t fixed = 0;
        for (std::size_t j = 0; j < phi.size(); ++j)
            if (iterate(j) == j) ++fixed;
        out.push_back(fixed);
        if (n < n_max) iterate = phi.after(iterate);
    }
    return out;
}

inline CycleCounts cycle_type(const FiniteMap& pi) {
    if (!pi.is_bijective()) fail(ErrorCode::domain, "cycle_type: map is not a bijection");
    CycleCounts counts;
    std::vector<bool> seen(pi.size(), false);
    for (std::size_t j = 0; j < pi.size(); ++j) {
        if (seen[j]) continue;
        std::size_t length = 0;
        for (std::size_t x = j; !seen[x]; x = pi(x)) {
            seen[x] = true;
            ++length;
        }
        counts.add(length);
    }
    return counts;
}

/// Cycle type of the permutation induced on the eventual image. For n >= 1,
/// #Fix(phi^n) = sum over k | n of k * counts[k].
inline CycleCounts periodic_orbit_counts(const FiniteMap& phi) { return cycle_type(induced_permutation(phi).permutation); }

inline bool shift_equivalent_maps(const FiniteMap& phi, const FiniteMap& psi) {
    return periodic_orbit_counts(phi) == periodic_orbit_counts(psi);
}

/// Permutation with the given cycle type; cycles are laid out by increasing
/// length on consecutive indices, each as j -> j+1 -> ... -> first.
inline FiniteMap permutation_from_cycle_counts(const CycleCounts& counts) {
    std::vector<std::size_t> img;
    img.reserve(counts.total_points());
    for (const auto& [k, c] : counts.entries())
        for (std::size_t rep = 0; rep < c; ++rep) {
            const std::size_t first = img.size();
            for (std::size_t i = 0; i < k; ++i) img.push_back(i + 1 < k ? first + i + 1 : first);
        }
    return FiniteMap(std::move(img));
}

} // namespace conley
