#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "qact/gaussian.hpp"

namespace qact {

// Polynomial in q over Q(i). coeffs_[k] is the coefficient of q^k; no
// trailing zeros, and the zero polynomial is the empty list.
class QPoly {
public:
    QPoly() = default;
    QPoly(Coeff c) { coeffs_.push_back(std::move(c)); trim(); }  // NOLINT
    explicit QPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly q();                      // the indeterminate
    static QPoly one() { return QPoly(Coeff(1)); }
    static QPoly monomial(Coeff c, int deg);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const Coeff& leading() const;
    Coeff coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Coeff(0);
    }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Coeff& c) const;

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    // Division with remainder; divisor must be nonzero.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    QPoly monic() const;
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    Coeff eval(const Coeff& q0) const;

    std::string str() const;

private:
    void trim();
    std::vector<Coeff> coeffs_;
};

// Monic gcd via the Euclidean algorithm (coefficients live in a field).
QPoly poly_gcd(QPoly a, QPoly b);

}  // namespace qact
