#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "seqcomp/errors.hpp"

namespace seqcomp {

/// Raw input sequence: finite integer symbols, no alphabet attached yet.
struct Sequence {
    std::vector<std::int64_t> values;

    Sequence() = default;
    explicit Sequence(std::vector<std::int64_t> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
};

/// Token -> raw symbol code, used when sequences come from text (FASTA).
/// Keys are case-folded to upper case by the loaders.
using SymbolTable = std::map<char, std::int64_t>;

enum class NormalizeMode {
    /// Bijective map of the pooled distinct raw values, sorted ascending,
    /// onto 1..M. Same-factor scaling of both inputs is a no-op here, which
    /// is what makes the comparison operator scale-invariant in code.
    distinct_rank,
    /// v -> round((v - min) * (M - 1) / (max - min)) + 1 over the pooled
    /// range. For amplitude-quantized signals; M is caller-chosen.
    affine_quantize,
};

// Codes are kept in 16-bit cells; 256 symbol classes is the documented cap.
inline constexpr std::uint32_t kMaxAlphabet = 256;

struct AlphabetSpec {
    NormalizeMode mode = NormalizeMode::distinct_rank;
    /// Target alphabet size. Required for affine_quantize; derived from the
    /// pooled input (and ignored if set) for distinct_rank.
    std::uint32_t m = 0;
    std::optional<SymbolTable> symbol_table;
};

/// Sequence remapped into the shared alphabet {1..m}.
struct NormalizedSequence {
    std::vector<std::uint16_t> codes;
    std::uint32_t m = 0;
    AlphabetSpec origin;

    std::size_t size() const { return codes.size(); }
};

/// One binary indicator channel per symbol class. Channels partition the
/// positions: for every i exactly one channel holds a 1.
struct ChannelSet {
    std::vector<std::vector<std::uint8_t>> channels;  // [m][n]
    std::size_t n = 0;

    std::uint32_t m() const { return static_cast<std::uint32_t>(channels.size()); }
};

/// Normalize two sequences into one shared alphabet (pooled over both, so
/// equal raw symbols always map to equal codes).
std::pair<NormalizedSequence, NormalizedSequence> normalize(const Sequence& a, const Sequence& b,
                                                            const AlphabetSpec& spec = {});

/// Split a normalized sequence into its m binary channels: channel j holds
/// a 1 at position i iff codes[i] == j.
ChannelSet decompose(const NormalizedSequence& x);

}  // namespace seqcomp
