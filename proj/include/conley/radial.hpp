#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "conley/conley_index.hpp"
#include "conley/error.hpp"
#include "conley/finite_map.hpp"
#include "conley/perm_endo.hpp"

namespace conley {

/// Combinatorial data of a homeomorphism h of S^d with an attractor/repeller
/// decomposition (l-, l+): actions[r] is the action of h on the reduced
/// degree-r homology of the attractor l-. The skew product
/// (z, r) -> (h(z), r + g(z)) on S^{d+1} then has the lower end as an isolated
/// fixed point whose index data is read off from these actions.
class RadialModel {
public:
    RadialModel(std::size_t base_dim, Orientation orientation, std::vector<RationalMatrix> actions)
        : base_dim_(base_dim), orientation_(orientation), actions_(std::move(actions)) {
        if (actions_.size() != base_dim_ + 1)
            fail(ErrorCode::dimension, "expected " + std::to_string(base_dim_ + 1) + " homology actions, got " +
                                           std::to_string(actions_.size()));
        for (std::size_t r = 0; r < actions_.size(); ++r)
            if (!actions_[r].is_square())
                fail(ErrorCode::dimension, "homology action in degree " + std::to_string(r) + " is not square");
    }

    std::size_t base_dim() const noexcept { return base_dim_; }
    Orientation orientation() const noexcept { return orientation_; }
    const std::vector<RationalMatrix>& actions() const noexcept { return actions_; }

    friend bool operator==(const RadialModel&, const RadialModel&) = default;

private:
    std::size_t base_dim_;
    Orientation orientation_;
    std::vector<RationalMatrix> actions_;
};

/// The index in degree r+1 of the lower end is conjugate to the action on
/// reduced degree-r homology of l-; degree 0 is trivial.
inline ConleyIndexData induced_conley_data(const RadialModel& m) {
    std::vector<RationalMatrix> reps(m.base_dim() + 2);
    for (std::size_t r = 0; r <= m.base_dim(); ++r) reps[r + 1] = m.actions()[r];
    return {m.base_dim() + 1, m.orientation(), std::move(reps)};
}

/// Model on S^2 from the action of h on the components of l- and of h^-1 on
/// the components of l+. H_1(l-) is reached through Alexander duality, which
/// turns the action on reduced H_0(l+) into its transpose, times the
/// orientation sign.
inline RadialModel model_from_attractor_repeller_perms(const FiniteMap& attractor_components,
                                                       const FiniteMap& repeller_components,
                                                       Orientation orientation) {
    if (attractor_components.size() == 0 || repeller_components.size() == 0)
        fail(ErrorCode::domain, "attractor and repeller need at least one component each");
    std::vector<RationalMatrix> actions(3);
    actions[0] = reduced_perm_endo_matrix(attractor_components);
    actions[1] = Rational(sign_of(orientation)) * reduced_perm_endo_matrix(repeller_components).transpose();
    return {2, orientation, std::move(actions)};
}

/// Model on S^3 whose attractor is a solid torus mapped to itself by a
/// solenoidal map of degree -m: connected, with H_1 acting by -m.
inline RadialModel solenoidal_model(std::size_t m) {
    if (m < 2) fail(ErrorCode::domain, "solenoidal_model: degree m must be at least 2");
    std::vector<RationalMatrix> actions(4);
    actions[1] = RationalMatrix{{-Rational(static_cast<unsigned long>(m))}};
    return {3, Orientation::reversing, std::move(actions)};
}

} // namespace conley
