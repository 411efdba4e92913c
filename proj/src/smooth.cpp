#include "seqcomp/smooth.hpp"

#include <algorithm>
#include <cmath>

#include "internal.hpp"

namespace seqcomp {

namespace {

/// Convolution of a binary channel with the taps at full length n + 2R:
/// every 1 scatters a copy of the taps.
std::vector<double> smooth_full(const std::vector<std::uint8_t>& x, const RectKernel& k) {
    std::vector<double> y(x.size() + 2 * k.radius(), 0.0);
    for (std::size_t v = 0; v < x.size(); ++v) {
        if (!x[v]) continue;
        for (std::size_t t = 0; t < k.taps.size(); ++t) y[v + t] += k.taps[t];
    }
    return y;
}

}  // namespace

RectKernel rect_kernel(double w) {
    if (!(w > 0.0)) raise(errc::non_positive_width, "rect_kernel: width must be positive");
    const double half = w / 2.0;
    const auto radius =
        static_cast<std::size_t>(std::max(0.0, std::ceil((w - 1.0) / 2.0)));
    RectKernel k;
    k.width = w;
    k.taps.resize(2 * radius + 1);
    for (std::size_t i = 0; i < k.taps.size(); ++i) {
        const double center = static_cast<double>(i) - static_cast<double>(radius);
        const double lo = std::max(center - 0.5, -half);
        const double hi = std::min(center + 0.5, half);
        k.taps[i] = std::max(0.0, hi - lo);
    }
    return k;
}

RealChannelSet smooth_channels(const ChannelSet& ch, const RectKernel& k) {
    if (ch.m() == 0 || ch.n == 0) raise(errc::empty_input, "smooth_channels: empty channel set");
    const std::size_t R = k.radius();
    RealChannelSet out;
    out.n = ch.n;
    out.channels.resize(ch.m());
    for (std::size_t j = 0; j < ch.channels.size(); ++j) {
        auto full = smooth_full(ch.channels[j], k);
        out.channels[j].assign(full.begin() + static_cast<std::ptrdiff_t>(R),
                               full.begin() + static_cast<std::ptrdiff_t>(R + ch.n));
    }
    return out;
}

CoincidenceSignal smoothed_coincidence(const ChannelSet& s, const ChannelSet& q, double w,
                                       Engine engine, unsigned threads) {
    if (s.m() != q.m())
        raise(errc::alphabet_mismatch, "smoothed_coincidence: channel sets use different alphabets");
    if (s.m() == 0 || s.n == 0 || q.n == 0)
        raise(errc::empty_input, "smoothed_coincidence: empty channel set");

    const RectKernel k = rect_kernel(w);
    if (k.radius() == 0 && k.taps[0] == 1.0) return coincidence(s, q, engine, threads);

    const std::size_t m = s.m();
    const std::size_t R = k.radius();
    const std::size_t ls = s.n + 2 * R;
    const std::size_t lq = q.n + 2 * R;
    const std::size_t len = ls + lq - 1;

    // Channels are independent, so workers may finish in any order; the
    // per-channel buffers are then reduced in channel order, keeping the
    // floating-point result identical for every thread count.
    std::vector<std::vector<double>> per(m);
    detail::for_each_index(m, threads, [&](std::size_t j) {
        const auto sb = smooth_full(s.channels[j], k);
        const auto qb = smooth_full(q.channels[j], k);
        per[j] = engine == Engine::naive ? detail::naive_cross_correlate(sb, qb)
                                         : detail::fft_cross_correlate(sb, qb);
    });

    CoincidenceSignal out;
    out.values.assign(len, 0.0);
    for (const auto& v : per)
        for (std::size_t i = 0; i < len; ++i) out.values[i] += v[i];
    out.offset = ls - 1;
    out.ns = s.n;
    out.nq = q.n;
    out.m = static_cast<std::uint32_t>(m);
    out.smoothed = true;
    return out;
}

}  // namespace seqcomp
