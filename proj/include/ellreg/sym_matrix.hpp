#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "ellreg/errors.hpp"

namespace ellreg {

using Vec = std::vector<double>;

/// Dense symmetric matrix. Only the lower triangle is stored, so
/// A(i,j) == A(j,i) holds structurally.
class SymMatrix {
  public:
    explicit SymMatrix(int dim) : dim_(check_dim(dim)), a_(packed_size(dim), 0.0) {}

    static SymMatrix identity(int dim) {
        SymMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
        return m;
    }

    static SymMatrix diagonal(const Vec& d) {
        SymMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim_; ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
        return m;
    }

    /// Builds from full rows; rejects non-square, non-finite or (exactly)
    /// asymmetric input.
    static SymMatrix from_rows(const std::vector<Vec>& rows) {
        const int d = static_cast<int>(rows.size());
        SymMatrix m(d);
        for (int i = 0; i < d; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != d)
                throw DimensionError("SymMatrix::from_rows: ragged rows");
        }
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j <= i; ++j) {
                const double v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const double vt = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (!std::isfinite(v) || v != vt)
                    throw DimensionError("SymMatrix::from_rows: not symmetric/finite");
                m.set(i, j, v);
            }
        }
        return m;
    }

    int dim() const { return dim_; }

    double operator()(int i, int j) const { return a_[index(i, j)]; }

    void set(int i, int j, double v) { a_[index(i, j)] = v; }

    void add(int i, int j, double v) { a_[index(i, j)] += v; }

    SymMatrix& operator+=(const SymMatrix& o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    SymMatrix& operator-=(const SymMatrix& o) {
        require_same_dim(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }

    void scale(double c) {
        for (auto& v : a_) v *= c;
    }

    /// this += w * v v^T
    void add_outer(std::span<const double> v, double w = 1.0) {
        if (static_cast<int>(v.size()) != dim_) throw DimensionError("add_outer: size mismatch");
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j <= i; ++j)
                a_[index(i, j)] += w * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
    }

    /// x^T A x
    double quad_form(std::span<const double> x) const {
        if (static_cast<int>(x.size()) != dim_) throw DimensionError("quad_form: size mismatch");
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
            double row = 0.0;
            for (int j = 0; j < i; ++j) row += a_[index(i, j)] * x[static_cast<std::size_t>(j)];
            s += x[static_cast<std::size_t>(i)] * (2.0 * row + a_[index(i, i)] * x[static_cast<std::size_t>(i)]);
        }
        return s;
    }

    /// (x - z)^T A (x - z) without materialising the difference.
    double quad_form_diff(std::span<const double> x, std::span<const double> z) const {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(z.size()) != dim_)
            throw DimensionError("quad_form_diff: size mismatch");
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
            const double di = x[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(i)];
            double row = 0.0;
            for (int j = 0; j < i; ++j)
                row += a_[index(i, j)] * (x[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(j)]);
            s += di * (2.0 * row + a_[index(i, i)] * di);
        }
        return s;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
            for (int j = 0; j < i; ++j) {
                const double v = a_[index(i, j)];
                s += 2.0 * v * v;
            }
            const double d = a_[index(i, i)];
            s += d * d;
        }
        return std::sqrt(s);
    }

    std::vector<Vec> rows() const {
        std::vector<Vec> r(static_cast<std::size_t>(dim_), Vec(static_cast<std::size_t>(dim_)));
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
        return r;
    }

    bool operator==(const SymMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }

  private:
    static int check_dim(int dim) {
        if (dim < 1) throw DimensionError("SymMatrix: dim must be >= 1");
        return dim;
    }

    static std::size_t packed_size(int dim) {
        return static_cast<std::size_t>(dim) * (static_cast<std::size_t>(dim) + 1) / 2;
    }

    std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw IndexError("SymMatrix: index out of range");
        if (j > i) std::swap(i, j);
        return static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 + static_cast<std::size_t>(j);
    }

    void require_same_dim(const SymMatrix& o) const {
        if (dim_ != o.dim_) throw DimensionError("SymMatrix: dimension mismatch");
    }

    int dim_;
    std::vector<double> a_;
};

}  // namespace ellreg
