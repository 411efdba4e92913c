#include "seqcomp/analyze.hpp"

#include <algorithm>
#include <cmath>

namespace seqcomp {

namespace {

/// Full linear convolution, length |x| + |h| - 1.
std::vector<double> conv_full(const std::vector<double>& x, const std::vector<double>& h) {
    std::vector<double> y(x.size() + h.size() - 1, 0.0);
    for (std::size_t v = 0; v < x.size(); ++v)
        for (std::size_t t = 0; t < h.size(); ++t) y[v + t] += x[v] * h[t];
    return y;
}

}  // namespace

NoiseModel expected_floor(std::size_t ns, std::size_t nq, std::uint32_t m) {
    if (ns == 0 || nq == 0) raise(errc::empty_input, "expected_floor: empty sequence length");
    if (m == 0) raise(errc::invalid_spec, "expected_floor: m must be >= 1");
    NoiseModel nm;
    nm.ns = ns;
    nm.nq = nq;
    nm.m = m;
    nm.offset = ns - 1;
    nm.smoothed = false;
    const std::size_t len = ns + nq - 1;
    nm.mu.resize(len);
    nm.sigma.resize(len);
    const double pm = 1.0 / m;
    for (std::size_t i = 0; i < len; ++i) {
        const auto p = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(nm.offset);
        const auto ov = static_cast<double>(overlap(ns, nq, p));
        nm.mu[i] = ov * pm;
        nm.sigma[i] = std::sqrt(ov * pm * (1.0 - pm));
    }
    return nm;
}

NoiseModel smoothed_floor(std::size_t ns, std::size_t nq, std::uint32_t m, const RectKernel& k) {
    NoiseModel base = expected_floor(ns, nq, m);
    if (k.radius() == 0 && !k.taps.empty() && k.taps[0] == 1.0) return base;

    // rho = kernel autocorrelation. The unsmoothed counts at distinct
    // displacements are uncorrelated under the uniform model, so the mean
    // convolves with rho and the variance with rho^2.
    const auto& g = k.taps;
    std::vector<double> rho(2 * g.size() - 1, 0.0);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) rho[b + (g.size() - 1) - a] += g[a] * g[b];
    std::vector<double> rho2(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho2[i] = rho[i] * rho[i];

    std::vector<double> var(base.sigma.size());
    for (std::size_t i = 0; i < var.size(); ++i) var[i] = base.sigma[i] * base.sigma[i];

    NoiseModel nm;
    nm.ns = ns;
    nm.nq = nq;
    nm.m = m;
    nm.offset = base.offset + (g.size() - 1);
    nm.smoothed = true;
    nm.mu = conv_full(base.mu, rho);
    const auto svar = conv_full(var, rho2);
    nm.sigma.resize(svar.size());
    for (std::size_t i = 0; i < svar.size(); ++i) nm.sigma[i] = std::sqrt(svar[i]);
    return nm;
}

std::vector<Peak> detect_peaks(const CoincidenceSignal& e, const NoiseModel& model, double z_min,
                               double min_excess) {
    if (e.values.empty()) raise(errc::empty_signal, "detect_peaks: empty signal");
    if (e.values.size() != model.mu.size() || e.offset != model.offset ||
        e.values.size() != model.sigma.size())
        raise(errc::dimension_mismatch, "detect_peaks: noise model does not align with signal");

    const auto& v = e.values;
    const std::size_t n = v.size();
    std::vector<Peak> out;
    for (std::size_t i = 0; i < n; ++i) {
        const double mu = model.mu[i];
        const double sg = model.sigma[i];
        const double excess = v[i] - mu;
        if (v[i] < mu + z_min * sg || excess < min_excess) continue;
        const bool above_some = (i > 0 && v[i] > v[i - 1]) || (i + 1 < n && v[i] > v[i + 1]);
        const bool below_some = (i > 0 && v[i] < v[i - 1]) || (i + 1 < n && v[i] < v[i + 1]);
        if (!above_some || below_some) continue;
        Peak pk;
        pk.displacement = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(e.offset);
        pk.height = v[i];
        pk.excess = excess;
        pk.z = sg > 0.0 ? excess / sg : 0.0;
        out.push_back(pk);
    }
    std::sort(out.begin(), out.end(), [](const Peak& a, const Peak& b) {
        if (a.height != b.height) return a.height > b.height;
        return a.displacement < b.displacement;
    });
    return out;
}

double peak_to_background(const std::vector<double>& values) {
    if (values.empty()) raise(errc::empty_signal, "peak_to_background: empty signal");
    const std::size_t t = values.size();
    const std::size_t lo = t / 4;
    const std::size_t hi = t - t / 4;
    double sum = 0.0;
    for (std::size_t i = lo; i < hi; ++i) sum += values[i];
    const double background = sum / static_cast<double>(hi - lo);
    if (background == 0.0)
        raise(errc::division_by_zero_background, "peak_to_background: zero central background");
    return *std::max_element(values.begin(), values.end()) / background;
}

double peak_to_background(const CoincidenceSignal& e) { return peak_to_background(e.values); }

double peak_to_background(const RealSignal& e) { return peak_to_background(e.values); }

}  // namespace seqcomp
