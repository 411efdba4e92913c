#pragma once

#include <stdexcept>
#include <string>

namespace seqcomp {

enum class errc {
    empty_sequence,
    degenerate_range,
    empty_input,
    fft_size_overflow,
    rounding_residual_exceeded,
    alphabet_mismatch,
    dimension_mismatch,
    empty_signal,
    division_by_zero_background,
    invalid_spec,
    non_positive_width,
    malformed_fasta,
    unknown_symbol,
    io_failure,
};

/// All library failures surface as this exception. `numeric()` separates
/// numeric failures (bad FFT residuals, size overflow) from input errors,
/// which is the split the CLI exit codes rely on.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

    bool numeric() const noexcept {
        return code_ == errc::fft_size_overflow || code_ == errc::rounding_residual_exceeded;
    }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace seqcomp
