#include "qact/qpoly.hpp"

namespace qact {

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::q() {
    return QPoly(std::vector<Coeff>{Coeff(0), Coeff(1)});
}

QPoly QPoly::monomial(Coeff c, int deg) {
    if (c.is_zero()) return QPoly();
    std::vector<Coeff> v(static_cast<std::size_t>(deg) + 1, Coeff(0));
    v[static_cast<std::size_t>(deg)] = std::move(c);
    return QPoly(std::move(v));
}

const Coeff& QPoly::leading() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

QPoly QPoly::operator-() const {
    std::vector<Coeff> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Coeff> v(std::max(coeffs_.size(), o.coeffs_.size()), Coeff(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    }
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Coeff> v(coeffs_.size() + o.coeffs_.size() - 1, Coeff(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
            v[a + b] += coeffs_[a] * o.coeffs_[b];
        }
    }
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Coeff& c) const {
    std::vector<Coeff> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(x * c);
    return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Coeff> r = a.coeffs_;
    std::vector<Coeff> qv;
    const int db = b.degree();
    const Coeff lead_inv = b.leading().inverse();
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)].is_zero()) --dr;
    if (dr >= db) qv.assign(static_cast<std::size_t>(dr - db) + 1, Coeff(0));
    while (dr >= db) {
        Coeff f = r[static_cast<std::size_t>(dr)] * lead_inv;
        qv[static_cast<std::size_t>(dr - db)] = f;
        for (int k = 0; k <= db; ++k) {
            r[static_cast<std::size_t>(dr - db + k)] -= f * b.coeff(k);
        }
        while (dr >= 0 && r[static_cast<std::size_t>(dr)].is_zero()) --dr;
    }
    quot = QPoly(std::move(qv));
    rem = QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Coeff QPoly::eval(const Coeff& q0) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Coeff& c = coeff(k);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool needs_parens = !c.is_real() || (c.re() != 0 && !c.is_real());
        if (cs.find('+') != std::string::npos ||
            (cs.find('-') != std::string::npos && cs.rfind('-') > 0)) {
            needs_parens = true;
        }
        std::string term;
        if (k == 0) {
            term = needs_parens ? "(" + cs + ")" : cs;
        } else {
            std::string qpart = (k == 1) ? "q" : "q^" + std::to_string(k);
            if (c.is_one()) {
                term = qpart;
            } else if (c == Coeff(-1)) {
                term = "-" + qpart;
            } else {
                term = (needs_parens ? "(" + cs + ")" : cs) + "*" + qpart;
            }
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly quot, rem;
        QPoly::divmod(a, b, quot, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    return a.monic();
}

}  // namespace qact
