#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace seqcomp {

/// Iterative radix-2 transform with precomputed bit-reversal table and
/// per-stage twiddles. A plan is immutable once built, so one instance can
/// be shared across worker threads.
class FftPlan {
public:
    /// n must be a power of two, 1 <= n <= max_size().
    explicit FftPlan(std::size_t n);

    std::size_t size() const { return n_; }

    /// In-place forward DFT.
    void forward(std::complex<double>* data) const;

    /// In-place inverse DFT, scaled by 1/n.
    void inverse(std::complex<double>* data) const;

    /// Smallest power of two >= n. Throws errc::fft_size_overflow past the cap.
    static std::size_t next_pow2(std::size_t n);

    static constexpr std::size_t max_size() { return std::size_t{1} << 26; }

    /// Process-wide plan cache keyed by size.
    static std::shared_ptr<const FftPlan> shared(std::size_t n);

private:
    std::size_t n_;
    std::size_t log2n_;
    std::vector<std::size_t> bitrev_;
    std::vector<std::complex<double>> twiddle_;  // stages concatenated
};

}  // namespace seqcomp
