#include "seqcomp/xcorr.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>

#include "seqcomp/fft.hpp"
#include "internal.hpp"

namespace seqcomp {

namespace {

using cplx = std::complex<double>;

struct LagRange {
    std::size_t ns, nq;
    std::size_t length() const { return ns + nq - 1; }
    std::size_t offset() const { return ns - 1; }  // index of p == 0
    std::ptrdiff_t p_min() const { return -static_cast<std::ptrdiff_t>(ns - 1); }
    std::ptrdiff_t p_max() const { return static_cast<std::ptrdiff_t>(nq - 1); }
};

/// Forward transform of x + i*y, zero-padded to the plan size.
template <typename T, typename U>
void packed_spectrum_into(std::span<const T> x, std::span<const U> y, const FftPlan& plan,
                          std::vector<cplx>& z) {
    z.assign(plan.size(), cplx{});
    const std::size_t nx = x.size(), ny = y.size();
    const std::size_t common = std::min(nx, ny);
    for (std::size_t i = 0; i < common; ++i)
        z[i] = cplx(static_cast<double>(x[i]), static_cast<double>(y[i]));
    for (std::size_t i = common; i < nx; ++i) z[i] = cplx(static_cast<double>(x[i]), 0.0);
    for (std::size_t i = common; i < ny; ++i) z[i] = cplx(0.0, static_cast<double>(y[i]));
    plan.forward(z.data());
}

/// Accumulate conj(X_k) * Y_k into acc, where X and Y are the two real
/// spectra hidden in the packed transform Z. Spelled out on doubles for the
/// same reason as the butterflies in FftPlan::forward.
void accumulate_cross_spectrum(const std::vector<cplx>& z, std::vector<cplx>& acc) {
    const std::size_t n = z.size();
    const auto* zd = reinterpret_cast<const double*>(z.data());
    auto* ad = reinterpret_cast<double*>(acc.data());
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t nk = k == 0 ? 0 : n - k;
        const double zr_r = zd[2 * k], zr_i = zd[2 * k + 1];
        const double zc_r = zd[2 * nk], zc_i = -zd[2 * nk + 1];
        // X = (Z_k + conj(Z_{n-k})) / 2, Y = (Z_k - conj(Z_{n-k})) / 2i
        const double xr = 0.5 * (zr_r + zc_r), xi = 0.5 * (zr_i + zc_i);
        const double yr = 0.5 * (zr_i - zc_i), yi = -0.5 * (zr_r - zc_r);
        ad[2 * k] += xr * yr + xi * yi;
        ad[2 * k + 1] += xr * yi - xi * yr;
    }
}

/// Read the linear-lag values out of an inverted circular correlation.
std::vector<double> unwrap_lags(const std::vector<cplx>& time, LagRange r) {
    const auto L = static_cast<std::ptrdiff_t>(time.size());
    std::vector<double> out(r.length());
    for (std::ptrdiff_t p = r.p_min(); p <= r.p_max(); ++p) {
        const std::size_t idx = static_cast<std::size_t>(((p % L) + L) % L);
        out[static_cast<std::size_t>(p - r.p_min())] = time[idx].real();
    }
    return out;
}

/// Round counts in place; any residual of 0.25 or more means the transform
/// failed numerically and must not be reported as a count.
void round_counts(std::vector<double>& v) {
    double worst = 0.0;
    for (double& x : v) {
        const double r = std::round(x);
        worst = std::max(worst, std::abs(x - r));
        x = r == 0.0 ? 0.0 : r;  // canonicalize -0
    }
    if (worst >= 0.25)
        raise(errc::rounding_residual_exceeded,
              "fft correlation: rounding residual " + std::to_string(worst) + " >= 0.25");
}

std::vector<std::int64_t> naive_binary_corr(std::span<const std::uint8_t> b,
                                            std::span<const std::uint8_t> c) {
    const LagRange r{b.size(), c.size()};
    std::vector<std::int64_t> out(r.length(), 0);
    for (std::ptrdiff_t p = r.p_min(); p <= r.p_max(); ++p) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -p);
        const std::ptrdiff_t hi =
            std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(r.ns),
                                     static_cast<std::ptrdiff_t>(r.nq) - p);
        std::int64_t acc = 0;
        for (std::ptrdiff_t i = lo; i < hi; ++i)
            acc += static_cast<std::int64_t>(b[static_cast<std::size_t>(i)]) *
                   c[static_cast<std::size_t>(i + p)];
        out[static_cast<std::size_t>(p - r.p_min())] = acc;
    }
    return out;
}

}  // namespace

std::string_view engine_name(Engine e) { return e == Engine::naive ? "naive" : "fft"; }

std::int64_t overlap(std::size_t ns, std::size_t nq, std::ptrdiff_t p) {
    const auto lo = std::max<std::ptrdiff_t>(0, -p);
    const auto hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(ns),
                                             static_cast<std::ptrdiff_t>(nq) - p);
    return std::max<std::ptrdiff_t>(0, hi - lo);
}

ChannelCorrelation correlate_channel_naive(std::span<const std::uint8_t> b,
                                           std::span<const std::uint8_t> c,
                                           std::uint32_t channel) {
    if (b.empty() || c.empty()) raise(errc::empty_input, "correlate_channel_naive: empty input");
    const LagRange r{b.size(), c.size()};
    ChannelCorrelation out;
    out.offset = r.offset();
    out.channel = channel;
    const auto counts = naive_binary_corr(b, c);
    out.values.assign(counts.begin(), counts.end());
    return out;
}

ChannelCorrelation correlate_channel_fft(std::span<const std::uint8_t> b,
                                         std::span<const std::uint8_t> c,
                                         std::uint32_t channel) {
    if (b.empty() || c.empty()) raise(errc::empty_input, "correlate_channel_fft: empty input");
    const LagRange r{b.size(), c.size()};
    const auto plan = FftPlan::shared(FftPlan::next_pow2(r.length()));

    std::vector<cplx> z;
    packed_spectrum_into(b, c, *plan, z);
    std::vector<cplx> acc(plan->size(), cplx{});
    accumulate_cross_spectrum(z, acc);
    plan->inverse(acc.data());

    ChannelCorrelation out;
    out.offset = r.offset();
    out.channel = channel;
    out.values = unwrap_lags(acc, r);
    round_counts(out.values);
    return out;
}

CoincidenceSignal coincidence(const ChannelSet& sc, const ChannelSet& qc, Engine engine,
                              unsigned threads) {
    if (sc.m() != qc.m())
        raise(errc::alphabet_mismatch, "coincidence: channel sets use different alphabets");
    if (sc.m() == 0 || sc.n == 0 || qc.n == 0)
        raise(errc::empty_input, "coincidence: empty channel set");

    const LagRange r{sc.n, qc.n};
    const std::size_t m = sc.m();

    CoincidenceSignal out;
    out.offset = r.offset();
    out.ns = sc.n;
    out.nq = qc.n;
    out.m = static_cast<std::uint32_t>(m);
    out.smoothed = false;

    if (engine == Engine::naive) {
        // Integer accumulation is order-independent, so per-channel results
        // can land in any order.
        std::vector<std::vector<std::int64_t>> per(m);
        detail::for_each_index(m, threads, [&](std::size_t j) {
            per[j] = naive_binary_corr(sc.channels[j], qc.channels[j]);
        });
        std::vector<std::int64_t> total(r.length(), 0);
        for (const auto& k : per)
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += k[i];
        out.values.assign(total.begin(), total.end());
        return out;
    }

    const auto plan = FftPlan::shared(FftPlan::next_pow2(r.length()));
    // One packed forward per channel, cross-spectra summed, one inverse for
    // the whole signal. The sum may be reordered across workers: the final
    // values are rounded to integers, so the reduction order cannot show.
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), m));
    std::vector<std::vector<cplx>> worker_acc(workers,
                                              std::vector<cplx>(plan->size(), cplx{}));
    std::vector<std::vector<cplx>> worker_z(workers);
    detail::for_each_index(m, workers, [&](std::size_t j) {
        // for_each_index stripes indices by worker = j % workers
        auto& z = worker_z[j % workers];
        packed_spectrum_into(std::span<const std::uint8_t>(sc.channels[j]),
                             std::span<const std::uint8_t>(qc.channels[j]), *plan, z);
        accumulate_cross_spectrum(z, worker_acc[j % workers]);
    });
    std::vector<cplx>& acc = worker_acc[0];
    for (unsigned w = 1; w < workers; ++w)
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += worker_acc[w][k];
    plan->inverse(acc.data());

    out.values = unwrap_lags(acc, r);
    round_counts(out.values);
    return out;
}

RealSignal numeric_xcorr(const NormalizedSequence& s, const NormalizedSequence& q, Engine engine) {
    if (s.codes.empty() || q.codes.empty()) raise(errc::empty_input, "numeric_xcorr: empty input");
    std::vector<double> xs(s.codes.begin(), s.codes.end());
    std::vector<double> xq(q.codes.begin(), q.codes.end());
    RealSignal out;
    out.offset = s.size() - 1;
    out.values = engine == Engine::naive ? detail::naive_cross_correlate(xs, xq)
                                         : detail::fft_cross_correlate(xs, xq);
    return out;
}

namespace detail {

std::vector<double> fft_cross_correlate(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) raise(errc::empty_input, "fft_cross_correlate: empty input");
    const LagRange r{x.size(), y.size()};
    const auto plan = FftPlan::shared(FftPlan::next_pow2(r.length()));
    std::vector<cplx> z;
    packed_spectrum_into(x, y, *plan, z);
    std::vector<cplx> acc(plan->size(), cplx{});
    accumulate_cross_spectrum(z, acc);
    plan->inverse(acc.data());
    return unwrap_lags(acc, r);
}

std::vector<double> naive_cross_correlate(std::span<const double> x, std::span<const double> y) {
    if (x.empty() || y.empty()) raise(errc::empty_input, "naive_cross_correlate: empty input");
    const LagRange r{x.size(), y.size()};
    std::vector<double> out(r.length(), 0.0);
    for (std::ptrdiff_t p = r.p_min(); p <= r.p_max(); ++p) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -p);
        const std::ptrdiff_t hi =
            std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(r.ns),
                                     static_cast<std::ptrdiff_t>(r.nq) - p);
        double acc = 0.0;
        for (std::ptrdiff_t i = lo; i < hi; ++i)
            acc += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i + p)];
        out[static_cast<std::size_t>(p - r.p_min())] = acc;
    }
    return out;
}

}  // namespace detail

}  // namespace seqcomp
