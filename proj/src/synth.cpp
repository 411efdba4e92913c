#include "seqcomp/synth.hpp"

#include <limits>

#include "seqcomp/errors.hpp"

namespace seqcomp {

namespace detail {

std::uint64_t UniformCodeSource::next_below(std::uint64_t bound) {
    if (bound == 0) raise(errc::invalid_spec, "next_below: bound must be positive");
    // 2^64 mod bound draws are discarded so the remainder map is unbiased.
    const std::uint64_t rem =
        (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t r = rng_();
    while (rem != 0 && r > std::numeric_limits<std::uint64_t>::max() - rem) r = rng_();
    return r % bound;
}

}  // namespace detail

Sequence gen_uniform(std::size_t n, std::uint32_t m, std::uint64_t seed) {
    if (n == 0) raise(errc::empty_sequence, "gen_uniform: n must be >= 1");
    if (m == 0 || m > kMaxAlphabet)
        raise(errc::invalid_spec, "gen_uniform: m must be in 1.." + std::to_string(kMaxAlphabet));
    detail::UniformCodeSource src(seed);
    Sequence s;
    s.values.resize(n);
    for (auto& v : s.values) v = src.next_code(m);
    return s;
}

PlantedPair gen_planted(const PlantedSpec& spec) {
    if (spec.n == 0) raise(errc::invalid_spec, "gen_planted: n must be >= 1");
    if (spec.m == 0 || spec.m > kMaxAlphabet)
        raise(errc::invalid_spec, "gen_planted: m must be in 1.." + std::to_string(kMaxAlphabet));

    std::size_t prev_end = 0;
    std::size_t total_deleted = 0;
    for (const auto& d : spec.deletions) {
        if (d.len == 0) raise(errc::invalid_spec, "gen_planted: zero-length deletion");
        if (d.pos < prev_end)
            raise(errc::invalid_spec, "gen_planted: deletions must be sorted and non-overlapping");
        if (d.len > spec.n || d.pos > spec.n - d.len)
            raise(errc::invalid_spec, "gen_planted: deletion extends past the sequence");
        prev_end = d.pos + d.len;
        total_deleted += d.len;
    }
    if (total_deleted >= spec.n)
        raise(errc::invalid_spec, "gen_planted: deletions remove the entire sequence");

    PlantedPair out;
    out.s = gen_uniform(spec.n, spec.m, spec.seed);
    out.q.values.reserve(spec.n - total_deleted);

    // Copy the kept runs; a run that starts after D deleted positions lands
    // D places earlier in q, i.e. it matches s at displacement -D.
    std::size_t cursor = 0;
    std::size_t deleted_before = 0;
    const auto emit_run = [&](std::size_t a, std::size_t b) {
        if (a >= b) return;
        for (std::size_t i = a; i < b; ++i) out.q.values.push_back(out.s.values[i]);
        out.truth.push_back({-static_cast<std::ptrdiff_t>(deleted_before), b - a});
    };
    for (const auto& d : spec.deletions) {
        emit_run(cursor, d.pos);
        deleted_before += d.len;
        cursor = d.pos + d.len;
    }
    emit_run(cursor, spec.n);
    return out;
}

PlantedSpec make_planted_spec(std::size_t n, std::uint32_t m, std::size_t block,
                              std::size_t n_deletions, std::uint64_t seed) {
    if (n == 0) raise(errc::invalid_spec, "make_planted_spec: n must be >= 1");
    if (m == 0 || m > kMaxAlphabet)
        raise(errc::invalid_spec,
              "make_planted_spec: m must be in 1.." + std::to_string(kMaxAlphabet));

    PlantedSpec spec;
    spec.n = n;
    spec.m = m;
    spec.seed = seed;

    if (n_deletions == 0) {
        spec.block_length = n;  // the intact run is the whole sequence
        return spec;
    }

    if (block == 0) raise(errc::invalid_spec, "make_planted_spec: block must be >= 1");
    const std::size_t k = n_deletions;
    // Layout: k + 1 runs and k cuts. One run is exactly `block`; every other
    // run and every cut needs at least one element.
    if (block > n || n - block < 2 * k)
        raise(errc::invalid_spec, "make_planted_spec: n too small for block and deletion count");
    spec.block_length = block;

    // Salted so the layout stream never replays the symbol stream that
    // gen_planted draws from the same seed.
    detail::UniformCodeSource layout(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t block_run = layout.next_below(k + 1);

    std::vector<std::size_t> runs(k + 1, 1);
    std::vector<std::size_t> cuts(k, 1);
    runs[block_run] = block;

    // Spread the slack one unit at a time over the k cuts and k free runs.
    std::size_t slack = n - block - 2 * k;
    while (slack > 0) {
        const std::size_t slot = layout.next_below(2 * k);
        if (slot < k) {
            ++cuts[slot];
        } else {
            std::size_t r = slot - k;
            if (r >= block_run) ++r;  // skip the fixed block run
            ++runs[r];
        }
        --slack;
    }

    std::size_t acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
        acc += runs[i];
        spec.deletions.push_back({acc, cuts[i]});
        acc += cuts[i];
    }
    return spec;
}

}  // namespace seqcomp
