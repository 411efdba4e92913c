#pragma once

#include <vector>

#include "seqcomp/seqcore.hpp"
#include "seqcomp/xcorr.hpp"

namespace seqcomp {

/// Unit-height rectangle of continuous width w, discretized by unit-cell
/// measure: tap k = |[k - 1/2, k + 1/2] ∩ [-w/2, w/2]|. Taps sum to w.
struct RectKernel {
    double width = 1.0;
    std::vector<double> taps;  // symmetric, length 2*radius + 1

    std::size_t radius() const { return taps.size() / 2; }
};

RectKernel rect_kernel(double w);

/// Real-valued channels (binary channels after low-pass filtering).
struct RealChannelSet {
    std::vector<std::vector<double>> channels;
    std::size_t n = 0;

    std::uint32_t m() const { return static_cast<std::uint32_t>(channels.size()); }
};

/// Convolve every channel with the kernel, output trimmed back to the
/// original length (zero boundary handling).
RealChannelSet smooth_channels(const ChannelSet& ch, const RectKernel& k);

/// Low-pass both channel sets, then correlate and sum. The smoothed
/// channels are kept at full convolution length so that the result equals
/// the unsmoothed coincidence convolved with the kernel's autocorrelation;
/// the displacement range therefore widens by 2*radius on each side.
/// w = 1 degenerates to the identity kernel and returns the unsmoothed
/// counts unchanged.
CoincidenceSignal smoothed_coincidence(const ChannelSet& s, const ChannelSet& q, double w,
                                       Engine engine = Engine::fft, unsigned threads = 1);

}  // namespace seqcomp
