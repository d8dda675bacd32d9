#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "fascomp/matrix.hpp"

namespace fascomp {

/// LU factorization with partial pivoting for square systems.
class Lu {
public:
    explicit Lu(Mat a) : lu_(std::move(a)), piv_(lu_.rows()), sign_(1.0) {
        if (!lu_.is_square())
            throw ShapeError("Lu: square matrix required");
        const std::size_t n = lu_.rows();
        std::iota(piv_.begin(), piv_.end(), std::size_t{0});
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(lu_(i, k)) > std::abs(lu_(p, k)))
                    p = i;
            if (p != k) {
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(lu_(k, j), lu_(p, j));
                std::swap(piv_[k], piv_[p]);
                sign_ = -sign_;
            }
            const double pivot = lu_(k, k);
            if (pivot == 0.0)
                continue; // singular; surfaces via solve()
            for (std::size_t i = k + 1; i < n; ++i) {
                lu_(i, k) /= pivot;
                const double lik = lu_(i, k);
                if (lik == 0.0)
                    continue;
                for (std::size_t j = k + 1; j < n; ++j)
                    lu_(i, j) -= lik * lu_(k, j);
            }
        }
    }

    [[nodiscard]] bool singular() const {
        for (std::size_t i = 0; i < lu_.rows(); ++i)
            if (lu_(i, i) == 0.0)
                return true;
        return false;
    }

    [[nodiscard]] double det() const {
        double d = sign_;
        for (std::size_t i = 0; i < lu_.rows(); ++i)
            d *= lu_(i, i);
        return d;
    }

    /// Solve A X = B (B may have several right-hand sides).
    [[nodiscard]] Mat solve(const Mat& b) const {
        const std::size_t n = lu_.rows();
        if (b.rows() != n)
            throw ShapeError("Lu::solve: rhs row count mismatch");
        if (singular())
            throw InputError("Lu::solve: matrix is singular to working precision");
        Mat x(n, b.cols());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                x(i, j) = b(piv_[i], j);
        // forward substitution (unit lower)
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < i; ++k) {
                const double lik = lu_(i, k);
                if (lik == 0.0)
                    continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    x(i, j) -= lik * x(k, j);
            }
        // back substitution
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t k = ii + 1; k < n; ++k) {
                const double uik = lu_(ii, k);
                if (uik == 0.0)
                    continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    x(ii, j) -= uik * x(k, j);
            }
            const double d = lu_(ii, ii);
            for (std::size_t j = 0; j < b.cols(); ++j)
                x(ii, j) /= d;
        }
        return x;
    }

private:
    Mat lu_;
    std::vector<std::size_t> piv_;
    double sign_;
};

[[nodiscard]] inline Mat solve(const Mat& a, const Mat& b) { return Lu(a).solve(b); }

[[nodiscard]] inline Mat inverse(const Mat& a) { return Lu(a).solve(Mat::identity(a.rows())); }

[[nodiscard]] inline double det(const Mat& a) { return Lu(a).det(); }

} // namespace fascomp
