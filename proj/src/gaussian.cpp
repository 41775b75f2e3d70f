#include "qact/gaussian.hpp"

namespace qact {

Coeff Coeff::from_frac(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rat r(num, den);
    r.canonicalize();
    return Coeff(r);
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero coefficient");
    Rat n = re_ * re_ + im_ * im_;
    return Coeff(re_ / n, -im_ / n);
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

std::string Coeff::str() const {
    if (im_ == 0) return rat_str(re_);
    std::string imag = (im_ == 1) ? "i" : (im_ == -1 ? "-i" : rat_str(im_) + "*i");
    if (re_ == 0) return imag;
    if (im_ < 0) return rat_str(re_) + imag;
    return rat_str(re_) + "+" + imag;
}

}  // namespace qact
