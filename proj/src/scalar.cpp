#include "qact/scalar.hpp"

namespace qact {

Scalar::Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::one();
        return;
    }
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        QPoly quot, rem;
        QPoly::divmod(num_, g, quot, rem);
        num_ = quot;
        QPoly::divmod(den_, g, quot, rem);
        den_ = quot;
    }
    Coeff lead = den_.leading();
    if (!lead.is_one()) {
        Coeff inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::q_power(const Coeff& c, int k) {
    if (k >= 0) return Scalar(QPoly::monomial(c, k));
    return Scalar(QPoly(c), QPoly::monomial(Coeff(1), -k));
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
    if (k == 0) return Scalar(1);
    Scalar base = (k < 0) ? inverse() : *this;
    int e = (k < 0) ? -k : k;
    Scalar acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Coeff Scalar::eval_at(const Coeff& q0) const {
    Coeff d = den_.eval(q0);
    if (d.is_zero()) throw PoleError("denominator vanishes at q0 = " + q0.str());
    return num_.eval(q0) * d.inverse();
}

std::string Scalar::str() const {
    if (den_ == QPoly::one()) return num_.str();
    std::string n = num_.str();
    std::string d = den_.str();
    auto wrap = [](const std::string& s) {
        bool atomic = s.find(' ') == std::string::npos && s.find('*') == std::string::npos &&
                      s.find('/') == std::string::npos;
        return atomic ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

}  // namespace qact
