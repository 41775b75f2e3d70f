#include "qact/basis.hpp"

#include <algorithm>

namespace qact {

VecK Basis::reduce(VecK v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[static_cast<std::size_t>(pivots_[r])];
        if (c.is_zero()) continue;
        Scalar f = c;  // pivot entries are 1
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
        }
    }
    return v;
}

bool Basis::contains(const VecK& v) const {
    VecK r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Basis::insert(VecK v) {
    if (static_cast<int>(v.size()) != ambient_) {
        throw DimensionMismatch("vector length does not match basis ambient dimension");
    }
    v = reduce(std::move(v));
    int pivot = -1;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) {
            pivot = static_cast<int>(k);
            break;
        }
    }
    if (pivot < 0) return false;
    Scalar inv = v[static_cast<std::size_t>(pivot)].inverse();
    for (auto& s : v) s *= inv;
    // clear the new pivot column in existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = rows_[r][static_cast<std::size_t>(pivot)];
        if (f.is_zero()) continue;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_zero()) rows_[r][k] -= f * v[k];
        }
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
    std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    return true;
}

std::vector<Mat> Basis::matrices() const {
    std::vector<Mat> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(Mat::from_vec(r));
    return out;
}

Basis rref(const std::vector<VecK>& rows, int ambient) {
    Basis b(ambient);
    for (const auto& r : rows) b.insert(r);
    return b;
}

Basis rref_mats(const std::vector<Mat>& mats) {
    if (mats.empty()) return Basis(0);
    int amb = mats.front().n() * mats.front().n();
    Basis b(amb);
    for (const auto& m : mats) b.insert(m.vectorize());
    return b;
}

bool subspace_equal(const Basis& a, const Basis& b) {
    if (a.ambient() != b.ambient()) {
        throw DimensionMismatch("subspace comparison across ambient dimensions");
    }
    return a == b;
}

bool subspace_leq(const Basis& a, const Basis& b) {
    if (a.ambient() != b.ambient()) {
        throw DimensionMismatch("subspace comparison across ambient dimensions");
    }
    for (const auto& r : a.rows()) {
        if (!b.contains(r)) return false;
    }
    return true;
}

}  // namespace qact
