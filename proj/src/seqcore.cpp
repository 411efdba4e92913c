#include "seqcomp/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace seqcomp {

namespace {

NormalizedSequence map_distinct_rank(const Sequence& x, const std::map<std::int64_t, std::uint16_t>& rank,
                                     std::uint32_t m, const AlphabetSpec& origin) {
    NormalizedSequence out;
    out.m = m;
    out.origin = origin;
    out.codes.reserve(x.size());
    for (std::int64_t v : x.values) out.codes.push_back(rank.at(v));
    return out;
}

NormalizedSequence map_affine(const Sequence& x, std::int64_t lo, std::int64_t hi, std::uint32_t m,
                              const AlphabetSpec& origin) {
    NormalizedSequence out;
    out.m = m;
    out.origin = origin;
    out.codes.reserve(x.size());
    const double span = static_cast<double>(hi) - static_cast<double>(lo);
    for (std::int64_t v : x.values) {
        std::uint16_t code = 1;
        if (m > 1) {
            double t = (static_cast<double>(v) - static_cast<double>(lo)) * (m - 1) / span;
            code = static_cast<std::uint16_t>(std::llround(t) + 1);
        }
        out.codes.push_back(code);
    }
    return out;
}

}  // namespace

std::pair<NormalizedSequence, NormalizedSequence> normalize(const Sequence& a, const Sequence& b,
                                                            const AlphabetSpec& spec) {
    if (a.empty() || b.empty()) raise(errc::empty_sequence, "normalize: empty input sequence");

    const auto [a_lo, a_hi] = std::minmax_element(a.values.begin(), a.values.end());
    const auto [b_lo, b_hi] = std::minmax_element(b.values.begin(), b.values.end());
    const std::int64_t lo = std::min(*a_lo, *b_lo);
    const std::int64_t hi = std::max(*a_hi, *b_hi);

    if (spec.mode == NormalizeMode::distinct_rank) {
        std::map<std::int64_t, std::uint16_t> rank;
        for (std::int64_t v : a.values) rank.emplace(v, 0);
        for (std::int64_t v : b.values) rank.emplace(v, 0);
        if (rank.size() > kMaxAlphabet)
            raise(errc::invalid_spec, "normalize: more than " + std::to_string(kMaxAlphabet) +
                                          " distinct symbols");
        std::uint16_t next = 1;
        for (auto& [value, code] : rank) code = next++;  // sorted ascending by key
        const auto m = static_cast<std::uint32_t>(rank.size());
        AlphabetSpec origin = spec;
        origin.m = m;
        return {map_distinct_rank(a, rank, m, origin), map_distinct_rank(b, rank, m, origin)};
    }

    // affine-quantize
    const std::uint32_t m = spec.m;
    if (m < 1 || m > kMaxAlphabet)
        raise(errc::invalid_spec, "normalize: affine mode needs 1 <= M <= " + std::to_string(kMaxAlphabet));
    if (hi == lo && m > 1)
        raise(errc::degenerate_range,
              "normalize: pooled max equals min; use distinct-rank or M = 1");
    AlphabetSpec origin = spec;
    return {map_affine(a, lo, hi, m, origin), map_affine(b, lo, hi, m, origin)};
}

ChannelSet decompose(const NormalizedSequence& x) {
    if (x.codes.empty()) raise(errc::empty_sequence, "decompose: empty sequence");
    ChannelSet out;
    out.n = x.size();
    out.channels.assign(x.m, std::vector<std::uint8_t>(out.n, 0));
    for (std::size_t i = 0; i < out.n; ++i) {
        const std::uint16_t c = x.codes[i];
        out.channels[static_cast<std::size_t>(c) - 1][i] = 1;
    }
    return out;
}

}  // namespace seqcomp
