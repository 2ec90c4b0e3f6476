#include "clamp/schedule.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace clamp {

NoiseSchedule::NoiseSchedule(std::vector<double> sigmas)
    : sigmas_(std::move(sigmas)), sigma_min_pos_(0.0) {
    if (sigmas_.size() < 2) {
        throw std::invalid_argument("NoiseSchedule: need at least two levels");
    }
    if (sigmas_.front() < 0.0) {
        throw std::invalid_argument("NoiseSchedule: sigma_0 must be nonnegative");
    }
    for (std::size_t t = 1; t < sigmas_.size(); ++t) {
        if (!(sigmas_[t - 1] < sigmas_[t])) {
            throw std::invalid_argument("NoiseSchedule: levels must be strictly decreasing in t");
        }
    }
    if (!(sigmas_.back() > 0.0)) {
        throw std::invalid_argument("NoiseSchedule: sigma_T must be positive");
    }
    sigma_min_pos_ = std::numeric_limits<double>::infinity();
    for (double s : sigmas_) {
        if (s > 0.0 && s < sigma_min_pos_) sigma_min_pos_ = s;
    }
}

NoiseSchedule build_edm_schedule(std::size_t steps, double sigma_max,
                                 double sigma_min, double rho) {
    if (steps < 2) throw std::invalid_argument("build_edm_schedule: steps must be >= 2");
    if (!(sigma_min > 0.0) || !(sigma_min < sigma_max)) {
        throw std::invalid_argument("build_edm_schedule: need 0 < sigma_min < sigma_max");
    }
    if (!(rho > 0.0)) throw std::invalid_argument("build_edm_schedule: rho must be positive");

    const double inv_rho = 1.0 / rho;
    const double hi = std::pow(sigma_max, inv_rho);
    const double lo = std::pow(sigma_min, inv_rho);

    std::vector<double> sigmas(steps + 1);
    sigmas[0] = 0.0;
    for (std::size_t i = 0; i < steps; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(steps - 1);
        // i = 0 is the top level sigma_max, i = steps-1 is sigma_min
        sigmas[steps - i] = std::pow(hi + frac * (lo - hi), rho);
    }
    sigmas[steps] = sigma_max;
    sigmas[1] = sigma_min;
    return NoiseSchedule(std::move(sigmas));
}

TransitionSplit split_transition(double sigma_t, double sigma_prev) {
    if (!(sigma_t > 0.0)) throw std::invalid_argument("split_transition: sigma_t must be positive");
    if (sigma_prev < 0.0 || sigma_prev > sigma_t) {
        throw std::invalid_argument("split_transition: need 0 <= sigma_prev <= sigma_t");
    }

    auto safe_sqrt = [](double radicand, double scale) {
        if (radicand < 0.0) {
            if (radicand >= -1e-14 * scale) return 0.0;
            throw std::invalid_argument("split_transition: negative radicand beyond round-off");
        }
        return std::sqrt(radicand);
    };

    TransitionSplit split;
    // The minus root; the plus root exceeds sigma_prev and is inadmissible.
    split.sigma_ret = sigma_t - safe_sqrt(sigma_t * sigma_t - sigma_prev * sigma_prev,
                                          sigma_t * sigma_t);
    split.sigma_inj = safe_sqrt(sigma_prev * sigma_prev - split.sigma_ret * split.sigma_ret,
                                sigma_t * sigma_t);
    split.lambda = 1.0 - split.sigma_ret / sigma_t;
    split.sigma_ref_sq = sigma_t * split.sigma_ret;
    return split;
}

}  // namespace clamp
