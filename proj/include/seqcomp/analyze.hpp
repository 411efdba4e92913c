#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcomp/smooth.hpp"
#include "seqcomp/xcorr.hpp"

namespace seqcomp {

/// Expected coincidence floor under the uniform-random symbol model:
/// mu[p] = overlap(p)/m, sigma[p] = sqrt(overlap(p) * (1/m) * (1 - 1/m)).
/// Each overlapping position pair matches independently with probability
/// 1/m under that model, so the per-displacement counts are binomial.
struct NoiseModel {
    std::size_t ns = 0;
    std::size_t nq = 0;
    std::uint32_t m = 0;
    std::vector<double> mu;     // aligned with the signal it models
    std::vector<double> sigma;
    std::size_t offset = 0;
    bool smoothed = false;

    double mu_at(std::ptrdiff_t p) const {
        return mu[static_cast<std::size_t>(p + static_cast<std::ptrdiff_t>(offset))];
    }
    double sigma_at(std::ptrdiff_t p) const {
        return sigma[static_cast<std::size_t>(p + static_cast<std::ptrdiff_t>(offset))];
    }
};

NoiseModel expected_floor(std::size_t ns, std::size_t nq, std::uint32_t m);

/// Floor for a signal produced by smoothed_coincidence with the same kernel.
/// The smoothed signal is the raw one convolved with the kernel
/// autocorrelation rho, and distinct displacements are uncorrelated under
/// the uniform model, so the mean convolves with rho and the variance with
/// rho^2.
NoiseModel smoothed_floor(std::size_t ns, std::size_t nq, std::uint32_t m, const RectKernel& k);

struct Peak {
    std::ptrdiff_t displacement = 0;
    double height = 0.0;
    double excess = 0.0;  // height - mu
    double z = 0.0;
};

/// Report p iff value >= mu + z_min*sigma, value - mu >= min_excess, and the
/// sample is a local maximum (strictly above at least one neighbor, not
/// below either). Output sorted by height descending, displacement ascending.
std::vector<Peak> detect_peaks(const CoincidenceSignal& e, const NoiseModel& model,
                               double z_min = 5.0, double min_excess = 1.0);

/// Max value over the mean of the central half of the displacement range.
/// Discriminability proxy for comparing the two operators.
double peak_to_background(const std::vector<double>& values);
double peak_to_background(const CoincidenceSignal& e);
double peak_to_background(const RealSignal& e);

/// Everything one pairwise comparison produced, ready for serialization.
struct ComparisonReport {
    std::size_t ns = 0;
    std::size_t nq = 0;
    std::uint32_t m = 0;
    Engine engine = Engine::fft;
    std::optional<double> smooth_width;
    std::string convention = std::string(kDisplacementConvention);
    double z_min = 5.0;
    double floor_mu0 = 0.0;    // model floor at p = 0
    double floor_sigma0 = 0.0;
    std::vector<Peak> peaks;
    std::vector<Peak> smoothed_peaks;
    std::optional<double> coincidence_pbr;  // present with --baseline
    std::optional<double> baseline_pbr;
    double timing_ms = 0.0;  // wall clock; excluded from deterministic serialization
};

}  // namespace seqcomp
