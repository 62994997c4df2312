#pragma once

#include <cmath>
#include <span>
#include <utility>

#include "ellreg/eig.hpp"
#include "ellreg/errors.hpp"
#include "ellreg/sym_matrix.hpp"

namespace ellreg {

/// Positive definite matrix normalized to unit spectral radius, with its
/// eigendecomposition cached.  All downstream geometry (distances, radii,
/// effective ranks) reads the cached spectrum.
class Metric {
  public:
    /// Normalizes A by its top eigenvalue.  Rejects matrices whose smallest
    /// eigenvalue is below 1e-14 relative to the largest; regularization is
    /// the caller's job, not this class's.
    static Metric from_sym(const SymMatrix& a) {
        Spectrum spec = eig_sym(a);
        const double top = spec.eigenvalues.front();
        const double bottom = spec.eigenvalues.back();
        if (!(top > 0.0) || bottom < 1e-14 * top)
            throw NotPositiveDefinite("Metric: matrix is not (numerically) positive definite");
        SymMatrix scaled = a;
        scaled.scale(1.0 / top);
        for (auto& ev : spec.eigenvalues) ev /= top;
        spec.eigenvalues.front() = 1.0;
        return Metric(std::move(scaled), std::move(spec));
    }

    static Metric identity(int dim) { return from_sym(SymMatrix::identity(dim)); }

    int dim() const { return matrix_.dim(); }
    const SymMatrix& matrix() const { return matrix_; }
    const Spectrum& spectrum() const { return spectrum_; }

    /// sqrt((x-z)^T M (x-z)); tiny negative quadratic forms from roundoff
    /// are clamped to zero.
    double distance(std::span<const double> x, std::span<const double> z) const {
        return std::sqrt(std::max(0.0, matrix_.quad_form_diff(x, z)));
    }

  private:
    Metric(SymMatrix m, Spectrum s) : matrix_(std::move(m)), spectrum_(std::move(s)) {}

    SymMatrix matrix_;
    Spectrum spectrum_;
};

inline Metric spectral_normalize(const SymMatrix& a) { return Metric::from_sym(a); }

inline double mahalanobis_distance(const Metric& metric, std::span<const double> x, std::span<const double> z) {
    if (static_cast<int>(x.size()) != metric.dim() || static_cast<int>(z.size()) != metric.dim())
        throw DimensionError("mahalanobis_distance: dimension mismatch");
    return metric.distance(x, z);
}

/// Product of the k largest eigenvalues.
inline double truncated_determinant(const Spectrum& spec, int k) {
    if (k < 1 || k > spec.dim()) throw IndexError("truncated_determinant: k out of range");
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= spec.eigenvalues[static_cast<std::size_t>(i)];
    return p;
}

}  // namespace ellreg
