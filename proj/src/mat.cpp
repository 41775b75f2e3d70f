#include "qact/mat.hpp"

#include <cmath>

namespace qact {

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::unit(int i, int j, int n) {
    Mat m(n);
    m.at(i, j) = Scalar(1);
    return m;
}

Mat Mat::from_vec(const VecK& v) {
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v.size()))));
    if (static_cast<std::size_t>(n) * n != v.size()) {
        throw DimensionMismatch("vector length is not a perfect square");
    }
    Mat m(n);
    m.a_ = v;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& s : a_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix addition dimension mismatch");
    Mat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix subtraction dimension mismatch");
    Mat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix product dimension mismatch");
    Mat r(n_);
    for (int i = 1; i <= n_; ++i) {
        for (int k = 1; k <= n_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 1; j <= n_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Mat Mat::operator*(const Scalar& s) const {
    Mat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

Mat Mat::operator-() const {
    Mat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

Mat Mat::inverse() const {
    Mat work(*this);
    Mat inv = identity(n_);
    for (int col = 1; col <= n_; ++col) {
        int pivot = 0;
        for (int row = col; row <= n_; ++row) {
            if (!work.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot == 0) throw SingularMatrix("matrix is singular over Q(i)(q)");
        if (pivot != col) {
            for (int j = 1; j <= n_; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Scalar p = work.at(col, col).inverse();
        for (int j = 1; j <= n_; ++j) {
            work.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (int row = 1; row <= n_; ++row) {
            if (row == col) continue;
            Scalar f = work.at(row, col);
            if (f.is_zero()) continue;
            for (int j = 1; j <= n_; ++j) {
                work.at(row, j) -= f * work.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Mat::is_invertible() const {
    try {
        inverse();
        return true;
    } catch (const SingularMatrix&) {
        return false;
    }
}

std::string Mat::str() const {
    std::string out;
    for (int i = 1; i <= n_; ++i) {
        out += "[ ";
        for (int j = 1; j <= n_; ++j) {
            out += at(i, j).str();
            if (j < n_) out += ", ";
        }
        out += " ]\n";
    }
    return out;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat kron(const Mat& a, const Mat& b) {
    int n = a.n(), m = b.n();
    Mat r(n * m);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 1; k <= m; ++k) {
                for (int l = 1; l <= m; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.at((i - 1) * m + k, (j - 1) * m + l) = aij * b.at(k, l);
                }
            }
        }
    }
    return r;
}

Mat eval_matrix(const MatExpr& m, const ParamEnv& env) {
    Mat r(m.n);
    for (const auto& t : m.terms) {
        r.at(t.row, t.col) += eval_expr(t.coeff, env);
    }
    return r;
}

}  // namespace qact
