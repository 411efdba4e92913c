#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seqcomp/seqcore.hpp"

namespace seqcomp {

struct Deletion {
    std::size_t pos = 0;  // start index in the original sequence
    std::size_t len = 0;
};

/// Recipe for a planted-match experiment: a uniform random sequence plus a
/// copy with pieces deleted, so shared segments sit at known displacements.
struct PlantedSpec {
    std::size_t n = 512;
    std::uint32_t m = 4;
    std::size_t block_length = 130;  // length of the designated intact block
    std::vector<Deletion> deletions;
    std::uint64_t seed = 1;
};

struct GroundTruth {
    std::ptrdiff_t displacement = 0;
    std::size_t length = 0;
};

struct PlantedPair {
    Sequence s;
    Sequence q;
    std::vector<GroundTruth> truth;
};

/// i.i.d. uniform codes in {1..m}; identical output for identical seeds on
/// every platform (the bounded draw avoids std::uniform_int_distribution).
Sequence gen_uniform(std::size_t n, std::uint32_t m, std::uint64_t seed);

/// Build s uniform random and q = s minus the spec's deletions. Ground
/// truth lists every surviving maximal run as (displacement, length),
/// recorded constructively while deleting.
PlantedPair gen_planted(const PlantedSpec& spec);

/// Seeded random deletion layout: n_deletions non-overlapping cuts placed
/// so that one surviving run has exactly block length. n_deletions = 0
/// yields an identical copy.
PlantedSpec make_planted_spec(std::size_t n, std::uint32_t m, std::size_t block,
                              std::size_t n_deletions, std::uint64_t seed);

namespace detail {

/// mt19937_64 plus a rejection-based bounded draw. The engine's output is
/// pinned by the standard, so seeded runs are bit-identical everywhere.
class UniformCodeSource {
public:
    explicit UniformCodeSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_u64() { return rng_(); }

    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

    /// Uniform code in [1, m].
    std::uint16_t next_code(std::uint32_t m) {
        return static_cast<std::uint16_t>(next_below(m) + 1);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace detail

}  // namespace seqcomp
