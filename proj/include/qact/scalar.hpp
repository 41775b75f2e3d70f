#pragma once

#include <string>

#include "qact/qpoly.hpp"

namespace qact {

// Element of Q(i)(q) as a reduced fraction num/den with monic denominator.
// The canonical form is unique, so operator== decides field equality.
class Scalar {
public:
    Scalar() : num_(), den_(QPoly::one()) {}
    Scalar(long v) : num_(Coeff(v)), den_(QPoly::one()) {}  // NOLINT
    Scalar(Coeff c) : num_(std::move(c)), den_(QPoly::one()) {}  // NOLINT
    Scalar(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}  // NOLINT
    Scalar(QPoly num, QPoly den);

    static Scalar q() { return Scalar(QPoly::q()); }
    static Scalar i() { return Scalar(Coeff::i()); }
    static Scalar from_frac(long num, long den) { return Scalar(Coeff::from_frac(num, den)); }
    // c * q^k with k possibly negative.
    static Scalar q_power(const Coeff& c, int k);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly::one() && den_ == QPoly::one(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(int k) const;

    // Value at q = q0; throws PoleError when the denominator vanishes there.
    Coeff eval_at(const Coeff& q0) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void normalize();
    QPoly num_, den_;
};

}  // namespace qact
