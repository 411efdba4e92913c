#include "seqcomp/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "seqcomp/errors.hpp"

namespace seqcomp {

FftPlan::FftPlan(std::size_t n) : n_(n) {
    if (n == 0 || (n & (n - 1)) != 0 || n > max_size())
        raise(errc::fft_size_overflow, "FftPlan: size must be a power of two within the cap");
    log2n_ = 0;
    while ((std::size_t{1} << log2n_) < n) ++log2n_;

    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < log2n_; ++b) r |= ((i >> b) & 1u) << (log2n_ - 1 - b);
        bitrev_[i] = r;
    }

    twiddle_.reserve(n > 1 ? n - 1 : 0);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t k = 0; k < len / 2; ++k)
            twiddle_.emplace_back(std::cos(ang * static_cast<double>(k)),
                                  std::sin(ang * static_cast<double>(k)));
    }
}

void FftPlan::forward(std::complex<double>* a) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (i < bitrev_[i]) std::swap(a[i], a[bitrev_[i]]);

    // Butterflies on raw doubles: a std::complex product would go through
    // the checked __muldc3 path, which dominates the runtime of the whole
    // transform. Finite twiddles and data make the checks pointless here.
    auto* d = reinterpret_cast<double*>(a);
    const auto* wt = reinterpret_cast<const double*>(twiddle_.data());
    std::size_t toff = 0;
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const double* w = wt + 2 * toff;
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < n_; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::size_t lo = 2 * (i + k);
                const std::size_t hi = 2 * (i + k + half);
                const double ur = d[lo], ui = d[lo + 1];
                const double xr = d[hi], xi = d[hi + 1];
                const double wr = w[2 * k], wi = w[2 * k + 1];
                const double vr = xr * wr - xi * wi;
                const double vi = xr * wi + xi * wr;
                d[lo] = ur + vr;
                d[lo + 1] = ui + vi;
                d[hi] = ur - vr;
                d[hi + 1] = ui - vi;
            }
        }
        toff += half;
    }
}

void FftPlan::inverse(std::complex<double>* a) const {
    // conj-forward-conj, folded into index reversal to avoid touching
    // the twiddle table
    for (std::size_t i = 1; i < n_ - i; ++i) std::swap(a[i], a[n_ - i]);
    forward(a);
    const double s = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) a[i] *= s;
}

std::size_t FftPlan::next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        if (p > max_size() / 2)
            raise(errc::fft_size_overflow, "next_pow2: requested transform exceeds the size cap");
        p <<= 1;
    }
    return p;
}

std::shared_ptr<const FftPlan> FftPlan::shared(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const FftPlan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto plan = std::make_shared<const FftPlan>(n);
    cache.emplace(n, plan);
    return plan;
}

}  // namespace seqcomp
