#pragma once

#include <gmpxx.h>

#include <string>

#include "qact/errors.hpp"

namespace qact {

using Rat = mpq_class;

// Element of Q(i): re + im*i with arbitrary-precision rational parts.
// mpq_class keeps each part reduced with positive denominator, so equality
// of parts is equality in the field.
class Coeff {
public:
    Coeff() : re_(0), im_(0) {}
    Coeff(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    Coeff(Rat re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
    Coeff(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static Coeff i() { return Coeff(Rat(0), Rat(1)); }
    static Coeff from_frac(long num, long den);

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Coeff operator-() const { return Coeff(-re_, -im_); }
    Coeff operator+(const Coeff& o) const { return Coeff(re_ + o.re_, im_ + o.im_); }
    Coeff operator-(const Coeff& o) const { return Coeff(re_ - o.re_, im_ - o.im_); }
    Coeff operator*(const Coeff& o) const {
        return Coeff(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Coeff operator/(const Coeff& o) const { return *this * o.inverse(); }

    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    Coeff inverse() const;

    bool operator==(const Coeff& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    std::string str() const;

private:
    Rat re_, im_;
};

std::string rat_str(const Rat& r);

}  // namespace qact
