#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

#include "ellreg/errors.hpp"

namespace ellreg {

/// Descending positive eigenvalue sequence (spectrum of a metric, or of a
/// gradient outer product matrix).
class EigenvalueProfile {
  public:
    explicit EigenvalueProfile(std::vector<double> values) : values_(std::move(values)) {
        if (values_.empty()) throw DomainError("EigenvalueProfile: empty");
        if (!(values_.front() > 0.0)) throw DomainError("EigenvalueProfile: leading value must be positive");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i])) throw DomainError("EigenvalueProfile: non-finite value");
            if (i > 0 && values_[i] > values_[i - 1])
                throw DomainError("EigenvalueProfile: values must be descending");
        }
    }

    int dim() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return values_; }
    bool is_normalized() const { return values_.front() == 1.0; }

  private:
    std::vector<double> values_;
};

namespace detail {

inline void check_kappa_args(int d, int r, double t) {
    if (r < 1 || r > d) throw DomainError("kappa: r must be in 1..d");
    if (!(t >= 1.0)) throw DomainError("kappa: t must be >= 1");
}

}  // namespace detail

/// kappa(r, t): number of eigenvalues at or above the threshold
/// t^(-2/(1+r)).  Requires a normalized profile (leading value 1), for
/// which the result is always >= 1.
inline int kappa(const EigenvalueProfile& profile, int r, double t) {
    detail::check_kappa_args(profile.dim(), r, t);
    if (!profile.is_normalized()) throw DomainError("kappa: profile must be normalized (values[0] == 1)");
    const double threshold = std::pow(t, -2.0 / (1.0 + r));
    int m = 0;
    while (m < profile.dim() && profile[m] >= threshold) ++m;
    assert(m >= 1);  // threshold <= 1 == values[0]
    return m;
}

/// Smallest r with kappa(r, t) <= r.  Well defined since kappa(d, t) <= d.
inline int effective_rank(const EigenvalueProfile& profile, double t) {
    for (int r = 1; r <= profile.dim(); ++r)
        if (kappa(profile, r, t) <= r) return r;
    return profile.dim();  // unreachable
}

/// Variant of kappa for a raw (unnormalized) profile shifted by the
/// regularization in force: counts m with mu_m + 2 gamma_bar >= mu_1 t^(-2/(1+r)).
inline int kappa_tilde(const EigenvalueProfile& mu, double gamma_bar_t, int r, double t) {
    detail::check_kappa_args(mu.dim(), r, t);
    if (!(gamma_bar_t >= 0.0)) throw DomainError("kappa_tilde: gamma_bar must be >= 0");
    const double threshold = mu[0] * std::pow(t, -2.0 / (1.0 + r));
    int m = 0;
    while (m < mu.dim() && mu[m] + 2.0 * gamma_bar_t >= threshold) ++m;
    return m;
}

inline int effective_rank_tilde(const EigenvalueProfile& mu, double gamma_bar_t, double t) {
    for (int r = 1; r <= mu.dim(); ++r)
        if (kappa_tilde(mu, gamma_bar_t, r, t) <= r) return r;
    return mu.dim();
}

/// Eigenvalue separations and the induced partition into well-separated
/// and leaking indices (0-based).
struct SeparationReport {
    std::vector<double> deltas;       // delta_j = min_{k != j} |mu_j - mu_k|
    double threshold = 0.0;
    std::vector<int> well_separated;  // delta_j >= threshold
    std::vector<int> leaking;         // the complement
};

inline SeparationReport separation_report(const EigenvalueProfile& mu, double threshold) {
    if (!(threshold > 0.0)) throw DomainError("separation_report: threshold must be positive");
    const int d = mu.dim();
    if (d == 1) throw DomainError("separation_report: undefined for d == 1");
    SeparationReport rep;
    rep.threshold = threshold;
    rep.deltas.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        // Sorted order: nearest eigenvalue is a neighbor.
        double delta = std::numeric_limits<double>::infinity();
        if (j > 0) delta = std::min(delta, std::abs(mu[j] - mu[j - 1]));
        if (j + 1 < d) delta = std::min(delta, std::abs(mu[j] - mu[j + 1]));
        rep.deltas[static_cast<std::size_t>(j)] = delta;
        if (delta >= threshold)
            rep.well_separated.push_back(j);
        else
            rep.leaking.push_back(j);
    }
    return rep;
}

}  // namespace ellreg
