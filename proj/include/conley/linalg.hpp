#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "conley/error.hpp"
#include "conley/matrix.hpp"
#include "conley/polynomial.hpp"
#include "conley/rational.hpp"

namespace conley {

struct EchelonForm {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
inline EchelonForm rref(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j) != 0) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

/// Basis of the row space, as the nonzero rows of the reduced echelon form.
inline std::vector<RationalVector> row_space_basis(const RationalMatrix& m) {
    EchelonForm e = rref(m);
    std::vector<RationalVector> basis;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis.push_back(e.reduced.row(i));
    return basis;
}

/// Basis of the column space in reduced echelon form.
inline std::vector<RationalVector> image_basis(const RationalMatrix& m) { return row_space_basis(m.transpose()); }

/// Basis of the null space {v : m v = 0} in reduced echelon form.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    EchelonForm e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> raw;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return raw;
    RationalMatrix stacked(raw.size(), m.cols());
    for (std::size_t i = 0; i < raw.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) stacked(i, j) = raw[i][j];
    return row_space_basis(stacked);
}

inline Rational determinant(RationalMatrix m) {
    m.require_square("determinant");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0) continue;
            Rational factor = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
    m.require_square("inverse");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    EchelonForm e = rref(std::move(aug));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        fail(ErrorCode::domain, "matrix is singular");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// trace(M^n) for n = 1..n_max by repeated multiplication.
inline std::vector<Rational> trace_power_sequence(const RationalMatrix& m, std::size_t n_max) {
    m.require_square("trace_power_sequence");
    if (n_max == 0) fail(ErrorCode::domain, "trace_power_sequence: n_max must be at least 1");
    std::vector<Rational> out;
    out.reserve(n_max);
    RationalMatrix current = m;
    for (std::size_t n = 1; n <= n_max; ++n) {
        out.push_back(current.trace());
        if (n < n_max) current = m * current;
    }
    return out;
}

/// Characteristic polynomial det(xI - M), monic, via reduction to upper
/// Hessenberg form followed by the standard determinant recurrence.
inline Polynomial char_poly(const RationalMatrix& m) {
    m.require_square("char_poly");
    const std::size_t n = m.rows();
    RationalMatrix h = m;
    for (std::size_t col = 0; col + 2 < n; ++col) {
        const std::size_t piv = col + 1;
        std::size_t sel = piv;
        while (sel < n && h(sel, col) == 0) ++sel;
        if (sel == n) continue;
        if (sel != piv) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(sel, j), h(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, sel), h(i, piv));
        }
        const Rational t = h(piv, col);
        for (std::size_t i = piv + 1; i < n; ++i) {
            if (h(i, col) == 0) continue;
            Rational u = h(i, col) / t;
            for (std::size_t j = 0; j < n; ++j)
                if (h(piv, j) != 0) h(i, j) -= u * h(piv, j);
            for (std::size_t r = 0; r < n; ++r)
                if (h(r, i) != 0) h(r, piv) += u * h(r, i);
        }
    }
    // p[k] is the characteristic polynomial of the leading k x k block.
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial::constant(1);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = Polynomial::linear_root(h(k - 1, k - 1)) * p[k - 1];
        Rational t = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            t *= h(i, i - 1);
            if (t == 0) break;
            if (h(i - 1, k - 1) != 0) p[k] = p[k] - (t * h(i - 1, k - 1)) * p[i - 1];
        }
    }
    return p[n];
}

/// Power sums trace(M^n), n = 1..n_max, from the characteristic polynomial by
/// Newton's identities. Much cheaper than repeated multiplication for long
/// windows.
inline std::vector<Rational> trace_power_sequence_newton(const RationalMatrix& m, std::size_t n_max) {
    m.require_square("trace_power_sequence_newton");
    if (n_max == 0) fail(ErrorCode::domain, "trace_power_sequence_newton: n_max must be at least 1");
    const std::size_t n = m.rows();
    Polynomial chi = char_poly(m);
    // chi = x^n + c[n-1] x^{n-1} + ... + c[0]
    std::vector<Rational> out(n_max);
    for (std::size_t k = 1; k <= n_max; ++k) {
        Rational pk = 0;
        for (std::size_t i = 1; i <= std::min(k - 1, n); ++i) pk -= chi.coefficient(n - i) * out[k - i - 1];
        if (k <= n) pk -= Rational(static_cast<long>(k)) * chi.coefficient(n - k);
        out[k - 1] = pk;
    }
    return out;
}

struct GeneralizedSubspaces {
    std::vector<RationalVector> kernel; // spans ker(M^n), n = size
    std::vector<RationalVector> image;  // spans im(M^n)
};

inline GeneralizedSubspaces generalized_subspaces(const RationalMatrix& m) {
    m.require_square("generalized_subspaces");
    RationalMatrix stable = m.power(m.rows());
    return {kernel_basis(stable), image_basis(stable)};
}

/// Restriction of M to its generalized image, written in the echelon basis of
/// that subspace. Invertible, or 0x0 when M is nilpotent.
inline RationalMatrix leray_reduction(const RationalMatrix& m) {
    m.require_square("leray_reduction");
    std::vector<RationalVector> basis = generalized_subspaces(m).image;
    const std::size_t k = basis.size();
    // Coordinates in an echelon basis are read off at the pivot columns.
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t c = 0;
        while (basis[i][c] == 0) ++c;
        pivots[i] = c;
    }
    RationalMatrix reduced(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        RationalVector image = m * basis[j];
        for (std::size_t i = 0; i < k; ++i) reduced(i, j) = image[pivots[i]];
    }
    return reduced;
}

inline bool spectrum_equivalent(const RationalMatrix& a, const RationalMatrix& b) {
    a.require_square("spectrum_equivalent");
    b.require_square("spectrum_equivalent");
    return char_poly(a).strip_x() == char_poly(b).strip_x();
}

/// Nontrivial invariant factors of xI - M (monic, each dividing the next),
/// from a Smith-style diagonalization over Q[x].
inline std::vector<Polynomial> invariant_factors(const RationalMatrix& m) {
    m.require_square("invariant_factors");
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = (i == j ? Polynomial::x() : Polynomial{}) - Polynomial::constant(m(i, j));

    std::vector<Polynomial> diagonal;
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Pivot on a nonzero entry of minimal degree; ties go to the lowest (row, col).
            std::size_t pr = n, pc = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!a[i][j].is_zero() && (pr == n || a[i][j].degree() < a[pr][pc].degree())) {
                        pr = i;
                        pc = j;
                    }
            if (pr == n) break;
            std::swap(a[t], a[pr]);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t].is_zero()) continue;
                Polynomial q = divmod(a[i][t], a[t][t]).first;
                for (std::size_t j = t; j < n; ++j) a[i][j] = a[i][j] - q * a[t][j];
                if (!a[i][t].is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j].is_zero()) continue;
                Polynomial q = divmod(a[t][j], a[t][t]).first;
                for (std::size_t i = t; i < n; ++i) a[i][j] = a[i][j] - q * a[i][t];
                if (!a[t][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            // Row and column are clear; the pivot must divide the rest.
            bool divisible = true;
            for (std::size_t i = t + 1; i < n && divisible; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(a[t][t], a[i][j])) {
                        for (std::size_t c = t; c < n; ++c) a[t][c] = a[t][c] + a[i][c];
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (a[t][t].is_zero()) break;
        diagonal.push_back(a[t][t].monic());
    }

    std::vector<Polynomial> factors;
    for (auto& d : diagonal)
        if (d.degree() >= 1) factors.push_back(std::move(d));
    return factors;
}

/// Similarity over Q.
inline bool conjugate(const RationalMatrix& a, const RationalMatrix& b) {
    a.require_square("conjugate");
    b.require_square("conjugate");
    if (a.rows() != b.rows()) return false;
    return invariant_factors(a) == invariant_factors(b);
}

inline bool shift_equivalent_matrices(const RationalMatrix& a, const RationalMatrix& b) {
    a.require_square("shift_equivalent_matrices");
    b.require_square("shift_equivalent_matrices");
    return conjugate(leray_reduction(a), leray_reduction(b));
}

} // namespace conley
