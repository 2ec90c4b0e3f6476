#pragma once

#include <cstddef>
#include <vector>

namespace clamp {

/// Drift/noise decomposition of one schedule transition sigma_t -> sigma_{t-1}.
/// Satisfies sigma_prev^2 = sigma_ret^2 + sigma_inj^2 and
/// sigma_inj^2 = 2 * lambda * sigma_ref_sq with lambda = 1 - sigma_ret/sigma_t
/// and sigma_ref_sq = sigma_t * sigma_ret.
struct TransitionSplit {
    double sigma_ret = 0.0;
    double sigma_inj = 0.0;
    double lambda = 0.0;
    double sigma_ref_sq = 0.0;
};

/// Strictly decreasing noise levels sigma_T > ... > sigma_1 > sigma_0 = 0,
/// stored so that sigma(t) is the level at step t. Immutable after construction.
class NoiseSchedule {
public:
    /// `sigmas` indexed t = 0..T (low to high). Throws std::invalid_argument
    /// unless the sequence is strictly increasing in that order, sigmas[0] >= 0
    /// and the top level is positive.
    explicit NoiseSchedule(std::vector<double> sigmas);

    double sigma(std::size_t t) const { return sigmas_.at(t); }
    std::size_t steps() const { return sigmas_.size() - 1; }
    double sigma_min_pos() const { return sigma_min_pos_; }
    const std::vector<double>& sigmas() const { return sigmas_; }

private:
    std::vector<double> sigmas_;
    double sigma_min_pos_;
};

/// Power-law discretization between sigma_max and sigma_min with a trailing
/// zero level: sigma_i = (sigma_max^(1/rho) + i/(T-1) * (sigma_min^(1/rho) -
/// sigma_max^(1/rho)))^rho for i = 0..T-1, plus sigma_0 = 0.
/// Requires steps >= 2, 0 < sigma_min < sigma_max, rho > 0.
NoiseSchedule build_edm_schedule(std::size_t steps, double sigma_max,
                                 double sigma_min, double rho);

/// Closed-form variance-preserving split:
///   sigma_ret = sigma_t - sqrt(sigma_t^2 - sigma_prev^2),
///   sigma_inj = sqrt(sigma_prev^2 - sigma_ret^2).
/// Requires 0 <= sigma_prev <= sigma_t and sigma_t > 0.
TransitionSplit split_transition(double sigma_t, double sigma_prev);

}  // namespace clamp
