#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqcomp/analyze.hpp"
#include "seqcomp/seqcore.hpp"
#include "seqcomp/xcorr.hpp"

namespace seqcomp {

struct FastaRecord {
    std::string header;    // text after '>' on the header line
    std::string residues;  // concatenated sequence lines, upper-cased
};

/// Standard FASTA: '>' header lines, folded sequence lines, CR/LF and case
/// tolerated. Data before the first header or a header with no residues is
/// malformed.
std::vector<FastaRecord> parse_fasta(std::istream& in);
std::vector<FastaRecord> read_fasta_file(const std::string& path);

void write_fasta(const FastaRecord& rec, const std::string& path);

enum class UnknownPolicy {
    reject,  // any token absent from the table is an error
    drop,    // remove the position entirely (lengths shrink; nothing is zero-filled)
};

/// Map residues to raw symbol codes through the table. With drop policy the
/// removed positions are appended to `dropped` when provided.
Sequence encode(const FastaRecord& rec, const SymbolTable& table,
                UnknownPolicy policy = UnknownPolicy::reject,
                std::vector<std::size_t>* dropped = nullptr);

/// The default DNA mapping: C=1, A=2, T=3, G=4.
SymbolTable dna_symbol_table();

/// Config format: one TOKEN=CODE pair per line, '#' starts a comment.
SymbolTable parse_symbol_table(std::istream& in);
SymbolTable load_symbol_table(const std::string& path);
void write_symbol_table(const SymbolTable& table, const std::string& path);

/// Inverse of a symbol table (code -> token) for FASTA emission.
std::vector<char> code_tokens(const SymbolTable& table, std::uint32_t m);

/// CSV layout: header `displacement,value[,smoothed]`, one row per p
/// ascending. When a smoothed signal is present its wider displacement
/// range wins and the unsmoothed column is zero-extended, matching the
/// zero-extension semantics of linear correlation.
void write_signal_csv(const CoincidenceSignal& e, const std::string& path);
void write_signal_csv(const CoincidenceSignal& e, const std::optional<CoincidenceSignal>& smoothed,
                      const std::string& path);

struct SignalCsvRow {
    std::ptrdiff_t displacement = 0;
    double value = 0.0;
    std::optional<double> smoothed;
};
std::vector<SignalCsvRow> read_signal_csv(const std::string& path);

/// Key-sorted JSON document; byte-identical across runs for identical
/// inputs. Wall-clock timing is only serialized on request since it would
/// break that determinism.
void write_report(const ComparisonReport& r, const std::string& path, bool include_timing = false);
std::string report_to_json(const ComparisonReport& r, bool include_timing = false);

struct PlotSeries {
    std::string label;
    std::vector<double> values;
    std::size_t offset = 0;  // index of p == 0
};

/// Static SVG plot of value vs displacement, one polyline per series, with
/// the p = 0 axis marked.
void render_plot(const std::vector<PlotSeries>& series, const std::string& path);
void render_plot(const CoincidenceSignal& e, const std::string& path);

}  // namespace seqcomp
