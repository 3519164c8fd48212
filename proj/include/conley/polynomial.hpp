#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "conley/error.hpp"
#include "conley/rational.hpp"

namespace conley {

/// Univariate polynomial over Q, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial x() { return Polynomial({0, 1}); }

    /// x - c
    static Polynomial linear_root(const Rational& c) { return Polynomial({-c, 1}); }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Polynomial p = *this;
        Rational lead = leading();
        for (auto& c : p.coeffs_) c /= lead;
        return p;
    }

    /// Divides out every factor of x.
    Polynomial strip_x() const {
        std::size_t k = 0;
        while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
        return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    Rational evaluate(const Rational& at) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial p = a;
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& a) {
        if (s == 0) return {};
        Polynomial p = a;
        for (auto& c : p.coeffs_) c *= s;
        return p;
    }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) fail(ErrorCode::domain, "polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial{}, a};
        std::vector<Rational> rem = a.coeffs_;
        std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
        const std::size_t db = b.coeffs_.size() - 1;
        for (std::size_t k = rem.size(); k-- > db;) {
            if (rem[k] == 0) continue;
            Rational factor = rem[k] / b.coeffs_.back();
            quot[k - db] = factor;
            for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs_[j];
        }
        rem.resize(db);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend bool divides(const Polynomial& d, const Polynomial& a) {
        if (d.is_zero()) return a.is_zero();
        return divmod(a, d).second.is_zero();
    }

    /// Monic gcd (zero if both are zero).
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational mag = abs(c);
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            if (mag != 1 || k == 0) s += mag.get_str();
            if (k >= 1) s += (mag != 1 ? "*x" : "x");
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

} // namespace conley
