#pragma once

#include <vector>

#include "qact/mat.hpp"

namespace qact {

// Canonical reduced row-echelon basis of a subspace of vectorized matrices.
// Rows are nonzero with strictly increasing pivot columns, pivot entries 1,
// and pivot columns cleared elsewhere, so two bases span the same subspace
// exactly when they compare equal.
class Basis {
public:
    explicit Basis(int ambient = 0) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<VecK>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduces v against the basis; returns the remainder.
    VecK reduce(VecK v) const;
    bool contains(const VecK& v) const;
    bool contains(const Mat& m) const { return contains(m.vectorize()); }

    // Inserts v if independent; returns true when the rank grew.
    bool insert(VecK v);

    bool operator==(const Basis& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }
    bool operator!=(const Basis& o) const { return !(*this == o); }

    std::vector<Mat> matrices() const;

private:
    int ambient_;
    std::vector<VecK> rows_;   // sorted by pivot column
    std::vector<int> pivots_;  // 0-based pivot positions
};

Basis rref(const std::vector<VecK>& rows, int ambient);
Basis rref_mats(const std::vector<Mat>& mats);

bool subspace_equal(const Basis& a, const Basis& b);
// True when every row of a lies in b.
bool subspace_leq(const Basis& a, const Basis& b);

}  // namespace qact
