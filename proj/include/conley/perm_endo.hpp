#pragma once

#include "conley/error.hpp"
#include "conley/finite_map.hpp"
#include "conley/matrix.hpp"

namespace conley {

/// Matrix of u(e_j) = e_{phi(j)}: column j holds a single 1 in row phi(j).
inline RationalMatrix perm_endo_matrix(const FiniteMap& phi) {
    RationalMatrix u(phi.size(), phi.size());
    for (std::size_t j = 0; j < phi.size(); ++j) u(phi(j), j) = 1;
    return u;
}

/// Restriction of the permutation endomorphism to the kernel of the
/// augmentation (sum of coordinates), in the basis f_j = e_j - e_0, j >= 1.
/// Since u(f_j) = f_{phi(j)} - f_{phi(0)} with f_0 = 0, every column has at
/// most two nonzero entries.
inline RationalMatrix reduced_perm_endo_matrix(const FiniteMap& phi) {
    if (phi.size() == 0) fail(ErrorCode::domain, "reduced permutation endomorphism needs a nonempty set");
    const std::size_t n = phi.size() - 1;
    RationalMatrix v(n, n);
    const std::size_t base_image = phi(0);
    for (std::size_t j = 1; j <= n; ++j) {
        if (phi(j) != 0) v(phi(j) - 1, j - 1) += 1;
        if (base_image != 0) v(base_image - 1, j - 1) -= 1;
    }
    return v;
}

} // namespace conley
