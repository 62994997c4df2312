#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ellreg/effective_rank.hpp"
#include "ellreg/errors.hpp"
#include "ellreg/metric.hpp"

namespace ellreg {

/// One round's input: an instance in the unit Euclidean ball and a label
/// in [0, 1].  Violations throw InvalidExample at construction.
struct LabeledExample {
    Vec x;
    double y;

    LabeledExample(Vec x_in, double y_in) : x(std::move(x_in)), y(y_in) {
        double norm_sq = 0.0;
        for (double xi : x) {
            if (!std::isfinite(xi)) throw InvalidExample("LabeledExample: non-finite coordinate");
            norm_sq += xi * xi;
        }
        if (x.empty()) throw InvalidExample("LabeledExample: empty instance");
        if (norm_sq > 1.0 + 1e-9) throw InvalidExample("LabeledExample: instance outside the unit ball");
        if (!std::isfinite(y) || y < 0.0 || y > 1.0) throw InvalidExample("LabeledExample: label outside [0, 1]");
    }
};

/// A packing center: the anchor instance plus the running label statistics
/// of the rounds assigned to it.
struct Center {
    Vec anchor;
    double label_sum = 0.0;
    long count = 0;
    long created_at = 0;
    double radius_at_creation = 0.0;  // epsilon in force when the anchor was admitted

    double mean() const { return label_sum / static_cast<double>(count); }
};

struct StepOutcome {
    double prediction = 0.0;
    double loss = 0.0;
    int assigned_center = 0;   // index of the center that produced the prediction
    bool new_center_created = false;
    double radius_used = 0.0;  // epsilon_t
    int effective_rank_used = 0;

    bool operator==(const StepOutcome&) const = default;
};

/// epsilon_t = t^(-1/(1+rho_t)) with rho_t the profile's effective rank at t.
inline double radius(const EigenvalueProfile& profile, long t) {
    const int rho = effective_rank(profile, static_cast<double>(t));
    return std::pow(static_cast<double>(t), -1.0 / (1.0 + rho));
}

/// Sequentially built ellipsoid packing under a fixed metric.  step() is
/// the only mutator; calls must be externally serialized.
class RegressorState {
  public:
    explicit RegressorState(Metric metric, long start_round = 0)
        : metric_(std::move(metric)), profile_(metric_.spectrum().eigenvalues), round_(start_round) {}

    const Metric& metric() const { return metric_; }
    const EigenvalueProfile& profile() const { return profile_; }
    const std::vector<Center>& centers() const { return centers_; }
    long round() const { return round_; }

    /// Index of the center nearest to x in the Mahalanobis metric, plus
    /// the distance.  Ties go to the earliest-created center (scan order).
    std::pair<int, double> nearest(std::span<const double> x) const {
        if (centers_.empty()) throw EmptyStore("nearest_center: no centers yet");
        int best = 0;
        double best_dist = metric_.distance(x, centers_.front().anchor);
        for (int i = 1; i < static_cast<int>(centers_.size()); ++i) {
            const double dist = metric_.distance(x, centers_[static_cast<std::size_t>(i)].anchor);
            if (dist < best_dist) {
                best = i;
                best_dist = dist;
            }
        }
        return {best, best_dist};
    }

    /// One round of the online protocol: predict with the nearest center's
    /// running mean (1/2 if it has no labels yet), observe the label, then
    /// either absorb the instance or admit it as a new center.  The
    /// prediction never depends on the observed label.
    StepOutcome step(const LabeledExample& example) {
        if (static_cast<int>(example.x.size()) != metric_.dim())
            throw InvalidExample("step: example dimension does not match the metric");

        const long t = round_ + 1;
        const int rho = effective_rank(profile_, static_cast<double>(t));
        const double eps = std::pow(static_cast<double>(t), -1.0 / (1.0 + rho));

        StepOutcome out;
        out.radius_used = eps;
        out.effective_rank_used = rho;

        if (centers_.empty()) {
            centers_.push_back(Center{example.x, 0.0, 0, t, eps});
            out.new_center_created = true;
        }

        const auto [active, dist] = nearest(example.x);
        Center& c = centers_[static_cast<std::size_t>(active)];
        out.assigned_center = active;
        out.prediction = (c.count == 0) ? 0.5 : c.mean();
        out.loss = (out.prediction - example.y) * (out.prediction - example.y);

        if (dist <= eps) {
            c.label_sum += example.y;
            c.count += 1;
        } else {
            // The new center keeps its own example; an empty list would
            // drop y_t from every future mean.
            centers_.push_back(Center{example.x, example.y, 1, t, eps});
            out.new_center_created = true;
        }
        round_ = t;
        return out;
    }

  private:
    Metric metric_;
    EigenvalueProfile profile_;
    std::vector<Center> centers_;
    long round_ = 0;
};

inline std::pair<int, double> nearest_center(const RegressorState& state, std::span<const double> x) {
    return state.nearest(x);
}

/// Folds step over the stream from a fresh state.  Errors are rethrown
/// with the offending round index prepended.
inline std::vector<StepOutcome> run_sequence(const Metric& metric, const std::vector<LabeledExample>& stream,
                                             RegressorState* final_state = nullptr) {
    RegressorState state(metric);
    std::vector<StepOutcome> outcomes;
    outcomes.reserve(stream.size());
    for (std::size_t i = 0; i < stream.size(); ++i) {
        try {
            outcomes.push_back(state.step(stream[i]));
        } catch (const Error& e) {
            throw InvalidExample("round " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    if (final_state != nullptr) *final_state = std::move(state);
    return outcomes;
}

/// Packing property: every pair of anchors is farther apart than the
/// radius in force when the later anchor was created.
inline bool packing_property_holds(const RegressorState& state, double* min_slack = nullptr) {
    const auto& centers = state.centers();
    bool ok = true;
    double slack = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < centers.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const double dist = state.metric().distance(centers[i].anchor, centers[j].anchor);
            slack = std::min(slack, dist - centers[j].radius_at_creation);
            if (!(dist > centers[j].radius_at_creation)) ok = false;
        }
    }
    if (min_slack != nullptr) *min_slack = slack;
    return ok;
}

}  // namespace ellreg
