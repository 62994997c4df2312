#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ellreg/errors.hpp"
#include "ellreg/sym_matrix.hpp"

namespace ellreg {

/// Full eigendecomposition of a symmetric matrix.  Eigenvalues are sorted
/// descending; eigenvectors[k] is the unit vector paired with eigenvalues[k].
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<Vec> eigenvectors;

    int dim() const { return static_cast<int>(eigenvalues.size()); }
};

namespace detail {

inline double off_diagonal_norm(const std::vector<double>& a, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < i; ++j) {
            const double v = a[static_cast<std::size_t>(i) * d + j];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi eigendecomposition.  Deterministic: fixed sweep order,
/// stable sort on ties, and eigenvector signs fixed so that the first
/// nonzero component is positive.  Throws NumericalFailure if the
/// off-diagonal mass has not vanished after 100 sweeps.
inline Spectrum eig_sym(const SymMatrix& m) {
    const int d = m.dim();
    std::vector<double> a(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double v = m(i, j);
            if (!std::isfinite(v)) throw DomainError("eig_sym: non-finite entry");
            a[static_cast<std::size_t>(i) * d + j] = v;
        }
    std::vector<double> v(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i) * d + i] = 1.0;

    const double tol = 1e-14 * std::max(1.0, m.frobenius_norm());
    constexpr int kMaxSweeps = 100;
    auto at = [&](std::vector<double>& w, int i, int j) -> double& {
        return w[static_cast<std::size_t>(i) * d + j];
    };

    bool converged = (d == 1) || detail::off_diagonal_norm(a, d) <= tol;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < d - 1; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) continue;
                const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                double t;
                if (theta >= 0.0)
                    t = 1.0 / (theta + std::sqrt(1.0 + theta * theta));
                else
                    t = -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                at(a, p, p) -= t * apq;
                at(a, q, q) += t * apq;
                at(a, p, q) = 0.0;
                at(a, q, p) = 0.0;
                for (int r = 0; r < d; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(a, r, p);
                    const double arq = at(a, r, q);
                    at(a, r, p) = c * arp - s * arq;
                    at(a, p, r) = at(a, r, p);
                    at(a, r, q) = s * arp + c * arq;
                    at(a, q, r) = at(a, r, q);
                }
                for (int r = 0; r < d; ++r) {
                    const double vrp = at(v, r, p);
                    const double vrq = at(v, r, q);
                    at(v, r, p) = c * vrp - s * vrq;
                    at(v, r, q) = s * vrp + c * vrq;
                }
            }
        }
        converged = detail::off_diagonal_norm(a, d) <= tol;
    }
    if (!converged) throw NumericalFailure("eig_sym: Jacobi did not converge in 100 sweeps");

    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return at(a, i, i) > at(a, j, j);
    });

    Spectrum spec;
    spec.eigenvalues.resize(static_cast<std::size_t>(d));
    spec.eigenvectors.assign(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d)));
    for (int k = 0; k < d; ++k) {
        const int col = order[static_cast<std::size_t>(k)];
        spec.eigenvalues[static_cast<std::size_t>(k)] = at(a, col, col);
        Vec& u = spec.eigenvectors[static_cast<std::size_t>(k)];
        for (int r = 0; r < d; ++r) u[static_cast<std::size_t>(r)] = at(v, r, col);
        for (int r = 0; r < d; ++r) {
            if (u[static_cast<std::size_t>(r)] != 0.0) {
                if (u[static_cast<std::size_t>(r)] < 0.0)
                    for (auto& w : u) w = -w;
                break;
            }
        }
    }
    return spec;
}

/// Sum of lambda_k u_k u_k^T; round-trip companion to eig_sym.
inline SymMatrix reconstruct(const Spectrum& spec) {
    const int d = spec.dim();
    SymMatrix m(d);
    for (int k = 0; k < d; ++k)
        m.add_outer(spec.eigenvectors[static_cast<std::size_t>(k)], spec.eigenvalues[static_cast<std::size_t>(k)]);
    return m;
}

}  // namespace ellreg
