#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seqcomp/seqcore.hpp"
#include "seqcomp/xcorr.hpp"

namespace test_helpers {

/// The N = 25, M = 2 worked-example pair used throughout the docs: two
/// binary-alphabet sequences whose symbol-1 channels share 6 hits at
/// displacement +3.
inline seqcomp::Sequence worked_s() {
    return seqcomp::Sequence({2, 1, 2, 2, 2, 1, 1, 1, 1, 2, 1, 2, 1,
                              1, 2, 2, 2, 2, 1, 1, 2, 1, 2, 1, 1});
}

inline seqcomp::Sequence worked_q() {
    return seqcomp::Sequence({1, 1, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 1,
                              2, 2, 1, 1, 1, 1, 2, 2, 1, 2, 1, 2});
}

/// Normalize + decompose, the standard front half of the pipeline.
inline std::pair<seqcomp::ChannelSet, seqcomp::ChannelSet> channels_of(
    const seqcomp::Sequence& a, const seqcomp::Sequence& b) {
    const auto [na, nb] = seqcomp::normalize(a, b);
    return {seqcomp::decompose(na), seqcomp::decompose(nb)};
}

/// Brute-force match counter straight off the definition; the oracle every
/// correlation result is judged against.
inline std::vector<std::int64_t> match_count_oracle(const std::vector<std::int64_t>& s,
                                                    const std::vector<std::int64_t>& q) {
    const auto ns = static_cast<std::ptrdiff_t>(s.size());
    const auto nq = static_cast<std::ptrdiff_t>(q.size());
    std::vector<std::int64_t> out;
    for (std::ptrdiff_t p = -(ns - 1); p <= nq - 1; ++p) {
        std::int64_t hits = 0;
        for (std::ptrdiff_t i = 0; i < ns; ++i) {
            const std::ptrdiff_t j = i + p;
            if (j >= 0 && j < nq && s[static_cast<std::size_t>(i)] == q[static_cast<std::size_t>(j)])
                ++hits;
        }
        out.push_back(hits);
    }
    return out;
}

}  // namespace test_helpers
