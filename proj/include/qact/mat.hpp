#pragma once

#include <string>
#include <vector>

#include "qact/expr.hpp"
#include "qact/scalar.hpp"

namespace qact {

// Row-major vectorization of an n x n matrix (length n^2).
using VecK = std::vector<Scalar>;

class Mat {
public:
    explicit Mat(int n = 4) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static Mat identity(int n = 4);
    static Mat unit(int i, int j, int n = 4);  // 1-based e_ij
    static Mat from_vec(const VecK& v);

    int n() const { return n_; }

    Scalar& at(int i, int j) { return a_[idx(i, j)]; }               // 1-based
    const Scalar& at(int i, int j) const { return a_[idx(i, j)]; }  // 1-based

    bool is_zero() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Scalar& s) const;
    Mat operator-() const;

    bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // Exact inverse by Gauss-Jordan elimination; throws SingularMatrix.
    Mat inverse() const;
    bool is_invertible() const;

    VecK vectorize() const { return a_; }

    std::string str() const;

private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) {
            throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of 1.." + std::to_string(n_));
        }
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int n_;
    std::vector<Scalar> a_;
};

Mat commutator(const Mat& a, const Mat& b);

// Kronecker product: block (i,j) of the result equals a(i,j) * b.
Mat kron(const Mat& a, const Mat& b);

// Exact matrix from a parsed expression at a parameter assignment.
Mat eval_matrix(const MatExpr& m, const ParamEnv& env);

}  // namespace qact
