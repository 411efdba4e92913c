#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "seqcomp/seqcore.hpp"

namespace seqcomp {

enum class Engine { naive, fft };

std::string_view engine_name(Engine e);

/// Displacement convention used everywhere: positive p slides the second
/// sequence left, k[p] = sum over valid i of b[i] * c[i + p]. With |b| = ns
/// and |c| = nq the support is p in [-(ns - 1), nq - 1] and the array index
/// of p = 0 is ns - 1.
inline constexpr std::string_view kDisplacementConvention = "k[p] = sum_i b[i]*c[i+p]";

/// Number of position pairs compared at displacement p; the hard upper
/// bound on any count there.
std::int64_t overlap(std::size_t ns, std::size_t nq, std::ptrdiff_t p);

/// Full linear cross-correlation of one channel pair.
struct ChannelCorrelation {
    std::vector<double> values;  // index = p + offset
    std::size_t offset = 0;      // index of p == 0
    std::uint32_t channel = 0;   // 1-based symbol class, 0 if unattributed

    std::ptrdiff_t p_min() const { return -static_cast<std::ptrdiff_t>(offset); }
    std::ptrdiff_t p_max() const {
        return static_cast<std::ptrdiff_t>(values.size()) - 1 - static_cast<std::ptrdiff_t>(offset);
    }
    double at(std::ptrdiff_t p) const {
        return values[static_cast<std::size_t>(p + static_cast<std::ptrdiff_t>(offset))];
    }
};

/// Sum of the per-channel correlations: value at p is the exact number of
/// symbol matches between s and the p-displaced q (real-valued after
/// smoothing, exact integers otherwise).
struct CoincidenceSignal {
    std::vector<double> values;
    std::size_t offset = 0;
    std::size_t ns = 0;
    std::size_t nq = 0;
    std::uint32_t m = 0;
    bool smoothed = false;

    std::ptrdiff_t p_min() const { return -static_cast<std::ptrdiff_t>(offset); }
    std::ptrdiff_t p_max() const {
        return static_cast<std::ptrdiff_t>(values.size()) - 1 - static_cast<std::ptrdiff_t>(offset);
    }
    double at(std::ptrdiff_t p) const {
        return values[static_cast<std::size_t>(p + static_cast<std::ptrdiff_t>(offset))];
    }
};

/// Real-valued signal over the same displacement range (numeric baseline).
struct RealSignal {
    std::vector<double> values;
    std::size_t offset = 0;

    std::ptrdiff_t p_min() const { return -static_cast<std::ptrdiff_t>(offset); }
    std::ptrdiff_t p_max() const {
        return static_cast<std::ptrdiff_t>(values.size()) - 1 - static_cast<std::ptrdiff_t>(offset);
    }
    double at(std::ptrdiff_t p) const {
        return values[static_cast<std::size_t>(p + static_cast<std::ptrdiff_t>(offset))];
    }
};

/// Direct-count correlation of two binary channels; the oracle path.
ChannelCorrelation correlate_channel_naive(std::span<const std::uint8_t> b,
                                           std::span<const std::uint8_t> c,
                                           std::uint32_t channel = 0);

/// Fourier-domain correlation of two binary channels: zero-pad to the next
/// power of two >= ns + nq - 1, transform, conjugate-multiply, invert, and
/// round to integers. Identical to the naive path on the same inputs; any
/// rounding residual >= 0.25 throws instead of returning wrong counts.
ChannelCorrelation correlate_channel_fft(std::span<const std::uint8_t> b,
                                         std::span<const std::uint8_t> c,
                                         std::uint32_t channel = 0);

/// The comparison operator: per-channel correlation summed over channels.
/// threads > 1 parallelizes over channels without changing any output value.
CoincidenceSignal coincidence(const ChannelSet& sc, const ChannelSet& qc,
                              Engine engine = Engine::fft, unsigned threads = 1);

/// Traditional linear cross-correlation of the raw code values, no
/// decomposition. Kept solely as the contrast baseline.
RealSignal numeric_xcorr(const NormalizedSequence& s, const NormalizedSequence& q,
                         Engine engine = Engine::fft);

namespace detail {

/// Full linear cross-correlation of two real arrays, r[p] = sum x[i]*y[i+p],
/// computed in the Fourier domain with both spectra packed into a single
/// complex transform. No rounding.
std::vector<double> fft_cross_correlate(std::span<const double> x, std::span<const double> y);

/// Direct-evaluation counterpart of fft_cross_correlate.
std::vector<double> naive_cross_correlate(std::span<const double> x, std::span<const double> y);

}  // namespace detail

}  // namespace seqcomp
