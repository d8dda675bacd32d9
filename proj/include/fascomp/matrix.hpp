#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fascomp/errors.hpp"

namespace fascomp {

/// Dense real matrix, row-major storage, runtime-sized.
///
/// The whole toolkit works on small systems (a dozen states at most), so the
/// design favors value semantics and clarity over allocation tuning. Zero-sized
/// dimensions are legal and behave as the empty operand (needed for fault
/// dimension q = 0 and for empty exogenous inputs).
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}

    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    static Mat identity(std::size_t n) {
        Mat I(n, n);
        for (std::size_t i = 0; i < n; ++i)
            I(i, i) = 1.0;
        return I;
    }

    static Mat diag(std::initializer_list<double> d) {
        Mat D(d.size(), d.size());
        std::size_t i = 0;
        for (double v : d)
            D(i, i) = v, ++i;
        return D;
    }

    static Mat from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        const std::size_t nr = rows.size();
        const std::size_t nc = nr ? rows.begin()->size() : 0;
        Mat M(nr, nc);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != nc)
                throw ShapeError("from_rows: ragged initializer");
            std::size_t j = 0;
            for (double v : row)
                M(i, j++) = v;
            ++i;
        }
        return M;
    }

    /// Column vector from values.
    static Mat col(std::initializer_list<double> v) {
        Mat M(v.size(), 1);
        std::size_t i = 0;
        for (double x : v)
            M(i++, 0) = x;
        return M;
    }

    static Mat col(const std::vector<double>& v) {
        Mat M(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            M(i, 0) = v[i];
        return M;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t size() const { return a_.size(); }
    [[nodiscard]] bool empty() const { return a_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// Flat element access; the natural index for row/column vectors.
    double& operator[](std::size_t k) { return a_[k]; }
    double operator[](std::size_t k) const { return a_[k]; }

    [[nodiscard]] const std::vector<double>& data() const { return a_; }

    [[nodiscard]] bool is_finite() const {
        for (double v : a_)
            if (!std::isfinite(v))
                return false;
        return true;
    }

    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    [[nodiscard]] Mat transpose() const {
        Mat T(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                T(j, i) = (*this)(i, j);
        return T;
    }

    [[nodiscard]] double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
            t += (*this)(i, i);
        return t;
    }

    [[nodiscard]] Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw ShapeError("block: out of range");
        Mat B(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                B(i, j) = (*this)(r0 + i, c0 + j);
        return B;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& B) {
        if (r0 + B.rows() > rows_ || c0 + B.cols() > cols_)
            throw ShapeError("set_block: out of range");
        for (std::size_t i = 0; i < B.rows(); ++i)
            for (std::size_t j = 0; j < B.cols(); ++j)
                (*this)(r0 + i, c0 + j) = B(i, j);
    }

    [[nodiscard]] Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }
    [[nodiscard]] Mat column(std::size_t j) const { return block(0, j, rows_, 1); }

    Mat& operator+=(const Mat& o) {
        check_same_shape(o, "+");
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }

    Mat& operator-=(const Mat& o) {
        check_same_shape(o, "-");
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }

    Mat& operator*=(double s) {
        for (double& v : a_)
            v *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(Mat a, double s) { return a *= s; }
    friend Mat operator*(double s, Mat a) { return a *= s; }
    friend Mat operator-(const Mat& a) { return a * -1.0; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw ShapeError("matmul: inner dimensions disagree");
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    /// Largest absolute entry.
    [[nodiscard]] double max_abs() const {
        double m = 0.0;
        for (double v : a_)
            m = std::max(m, std::abs(v));
        return m;
    }

    /// Induced infinity norm (max absolute row sum).
    [[nodiscard]] double norm_inf() const {
        double m = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < cols_; ++j)
                s += std::abs((*this)(i, j));
            m = std::max(m, s);
        }
        return m;
    }

    [[nodiscard]] double frobenius() const {
        double s = 0.0;
        for (double v : a_)
            s += v * v;
        return std::sqrt(s);
    }

private:
    void check_same_shape(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeError(std::string("elementwise ") + op + ": shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<double> a_;
};

/// sym(A) = A + Aᵀ.
[[nodiscard]] inline Mat sym(const Mat& a) {
    if (!a.is_square())
        throw ShapeError("sym: square matrix required");
    return a + a.transpose();
}

[[nodiscard]] inline Mat hstack(const std::vector<Mat>& parts) {
    if (parts.empty())
        return {};
    std::size_t rows = parts.front().rows(), cols = 0;
    for (const Mat& p : parts) {
        if (p.rows() != rows)
            throw ShapeError("hstack: row counts disagree");
        cols += p.cols();
    }
    Mat M(rows, cols);
    std::size_t c0 = 0;
    for (const Mat& p : parts) {
        M.set_block(0, c0, p);
        c0 += p.cols();
    }
    return M;
}

[[nodiscard]] inline Mat vstack(const std::vector<Mat>& parts) {
    if (parts.empty())
        return {};
    std::size_t cols = parts.front().cols(), rows = 0;
    for (const Mat& p : parts) {
        if (p.cols() != cols)
            throw ShapeError("vstack: column counts disagree");
        rows += p.rows();
    }
    Mat M(rows, cols);
    std::size_t r0 = 0;
    for (const Mat& p : parts) {
        M.set_block(r0, 0, p);
        r0 += p.rows();
    }
    return M;
}

[[nodiscard]] inline Mat block_diag(const std::vector<Mat>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const Mat& b : blocks) {
        if (!b.is_finite())
            throw InputError("block_diag: non-finite block");
        rows += b.rows();
        cols += b.cols();
    }
    Mat M(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const Mat& b : blocks) {
        M.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return M;
}

[[nodiscard]] inline double dot(const Mat& a, const Mat& b) {
    if (a.size() != b.size())
        throw ShapeError("dot: length mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += a[k] * b[k];
    return s;
}

[[nodiscard]] inline double norm2(const Mat& v) { return v.frobenius(); }

} // namespace fascomp
