#include "seqcomp/ioutil.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace seqcomp {

namespace {

std::string trim(std::string s) {
    const auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && issp(s[i])) ++i;
    return s.substr(i);
}

char upper(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(errc::io_failure, "cannot open '" + path + "' for writing");
    return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) raise(errc::io_failure, "write to '" + path + "' failed");
}

/// Integers verbatim, everything else with 17 significant digits, which
/// round-trips any double.
std::string fmt_value(double v) {
    char buf[40];
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.007199254740992e15) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", v);
    }
    return buf;
}

double parse_double(const std::string& tok, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        raise(errc::invalid_spec, where + ": bad number '" + tok + "'");
    }
}

long long parse_int(const std::string& tok, const std::string& where) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        raise(errc::invalid_spec, where + ": bad integer '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::vector<FastaRecord> parse_fasta(std::istream& in) {
    std::vector<FastaRecord> out;
    std::string line;
    std::size_t lineno = 0;
    const auto check_closed = [&]() {
        if (!out.empty() && out.back().residues.empty())
            raise(errc::malformed_fasta, "fasta: record '" + out.back().header + "' is empty");
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (line[0] == '>') {
            check_closed();
            FastaRecord rec;
            rec.header = trim(line.substr(1));
            if (rec.header.empty())
                raise(errc::malformed_fasta,
                      "fasta: empty header at line " + std::to_string(lineno));
            out.push_back(std::move(rec));
        } else {
            if (out.empty())
                raise(errc::malformed_fasta,
                      "fasta: data before first header at line " + std::to_string(lineno));
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    out.back().residues.push_back(upper(c));
        }
    }
    check_closed();
    return out;
}

std::vector<FastaRecord> read_fasta_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_failure, "cannot open '" + path + "' for reading");
    return parse_fasta(in);
}

void write_fasta(const FastaRecord& rec, const std::string& path) {
    if (rec.header.empty() || rec.residues.empty())
        raise(errc::malformed_fasta, "write_fasta: record must have a header and residues");
    auto out = open_out(path);
    out << '>' << rec.header << '\n';
    constexpr std::size_t kWrap = 70;
    for (std::size_t i = 0; i < rec.residues.size(); i += kWrap)
        out << rec.residues.substr(i, kWrap) << '\n';
    finish_out(out, path);
}

Sequence encode(const FastaRecord& rec, const SymbolTable& table, UnknownPolicy policy,
                std::vector<std::size_t>* dropped) {
    Sequence out;
    out.values.reserve(rec.residues.size());
    for (std::size_t i = 0; i < rec.residues.size(); ++i) {
        const auto it = table.find(upper(rec.residues[i]));
        if (it == table.end()) {
            if (policy == UnknownPolicy::reject)
                raise(errc::unknown_symbol,
                      "encode: unknown symbol '" + std::string(1, rec.residues[i]) +
                          "' at position " + std::to_string(i + 1));
            if (dropped) dropped->push_back(i);
            continue;
        }
        out.values.push_back(it->second);
    }
    return out;
}

SymbolTable dna_symbol_table() { return {{'C', 1}, {'A', 2}, {'T', 3}, {'G', 4}}; }

SymbolTable parse_symbol_table(std::istream& in) {
    SymbolTable t;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto where = "symbol table line " + std::to_string(lineno);
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) raise(errc::invalid_spec, where + ": expected TOKEN=CODE");
        const std::string tok = trim(line.substr(0, eq));
        const std::string code = trim(line.substr(eq + 1));
        if (tok.size() != 1)
            raise(errc::invalid_spec, where + ": token must be a single character");
        const char key = upper(tok[0]);
        if (t.count(key)) raise(errc::invalid_spec, where + ": duplicate token");
        t[key] = parse_int(code, where);
    }
    if (t.empty()) raise(errc::invalid_spec, "symbol table: no entries");
    return t;
}

SymbolTable load_symbol_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_failure, "cannot open '" + path + "' for reading");
    return parse_symbol_table(in);
}

void write_symbol_table(const SymbolTable& table, const std::string& path) {
    auto out = open_out(path);
    for (const auto& [tok, code] : table) out << tok << '=' << code << '\n';
    finish_out(out, path);
}

std::vector<char> code_tokens(const SymbolTable& table, std::uint32_t m) {
    if (m == 0 || m > kMaxAlphabet)
        raise(errc::invalid_spec, "code_tokens: m must be in 1.." + std::to_string(kMaxAlphabet));
    std::vector<char> out(m, 0);
    for (const auto& [tok, code] : table) {
        if (code < 1 || code > static_cast<std::int64_t>(m)) continue;
        auto& slot = out[static_cast<std::size_t>(code - 1)];
        if (slot != 0)
            raise(errc::invalid_spec,
                  "code_tokens: multiple tokens map to code " + std::to_string(code));
        slot = tok;
    }
    for (std::size_t j = 0; j < out.size(); ++j)
        if (out[j] == 0)
            raise(errc::invalid_spec, "code_tokens: no token for code " + std::to_string(j + 1));
    return out;
}

void write_signal_csv(const CoincidenceSignal& e, const std::string& path) {
    if (e.values.empty()) raise(errc::empty_signal, "write_signal_csv: empty signal");
    auto out = open_out(path);
    out << "displacement,value\n";
    for (std::ptrdiff_t p = e.p_min(); p <= e.p_max(); ++p)
        out << p << ',' << fmt_value(e.at(p)) << '\n';
    finish_out(out, path);
}

void write_signal_csv(const CoincidenceSignal& e, const std::optional<CoincidenceSignal>& smoothed,
                      const std::string& path) {
    if (!smoothed) {
        write_signal_csv(e, path);
        return;
    }
    if (e.values.empty() || smoothed->values.empty())
        raise(errc::empty_signal, "write_signal_csv: empty signal");
    const auto& s = *smoothed;
    if (s.offset < e.offset ||
        s.values.size() - e.values.size() != 2 * (s.offset - e.offset))
        raise(errc::dimension_mismatch,
              "write_signal_csv: smoothed signal does not extend the raw one symmetrically");
    auto out = open_out(path);
    out << "displacement,value,smoothed\n";
    for (std::ptrdiff_t p = s.p_min(); p <= s.p_max(); ++p) {
        const double raw = (p >= e.p_min() && p <= e.p_max()) ? e.at(p) : 0.0;
        out << p << ',' << fmt_value(raw) << ',' << fmt_value(s.at(p)) << '\n';
    }
    finish_out(out, path);
}

std::vector<SignalCsvRow> read_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::io_failure, "cannot open '" + path + "' for reading");
    std::string line;
    if (!std::getline(in, line)) raise(errc::invalid_spec, "signal csv: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool has_smoothed = false;
    if (line == "displacement,value,smoothed") {
        has_smoothed = true;
    } else if (line != "displacement,value") {
        raise(errc::invalid_spec, "signal csv: unexpected header '" + line + "'");
    }
    std::vector<SignalCsvRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto where = "signal csv line " + std::to_string(lineno);
        const auto cols = split(line, ',');
        if (cols.size() != (has_smoothed ? 3u : 2u))
            raise(errc::invalid_spec, where + ": wrong column count");
        SignalCsvRow row;
        row.displacement = parse_int(cols[0], where);
        row.value = parse_double(cols[1], where);
        if (has_smoothed) row.smoothed = parse_double(cols[2], where);
        rows.push_back(row);
    }
    return rows;
}

namespace {

nlohmann::json peaks_to_json(const std::vector<Peak>& peaks) {
    auto arr = nlohmann::json::array();
    for (const auto& pk : peaks)
        arr.push_back({{"displacement", pk.displacement},
                       {"excess", pk.excess},
                       {"height", pk.height},
                       {"z", pk.z}});
    return arr;
}

}  // namespace

std::string report_to_json(const ComparisonReport& r, bool include_timing) {
    nlohmann::json j{
        {"baseline_pbr", r.baseline_pbr ? nlohmann::json(*r.baseline_pbr) : nlohmann::json()},
        {"coincidence_pbr",
         r.coincidence_pbr ? nlohmann::json(*r.coincidence_pbr) : nlohmann::json()},
        {"convention", r.convention},
        {"engine", std::string(engine_name(r.engine))},
        {"floor_mu0", r.floor_mu0},
        {"floor_sigma0", r.floor_sigma0},
        {"m", r.m},
        {"ns", r.ns},
        {"nq", r.nq},
        {"peaks", peaks_to_json(r.peaks)},
        {"smooth_width", r.smooth_width ? nlohmann::json(*r.smooth_width) : nlohmann::json()},
        {"smoothed_peaks", peaks_to_json(r.smoothed_peaks)},
        {"z_min", r.z_min},
    };
    if (include_timing) j["timing_ms"] = r.timing_ms;
    return j.dump(2) + "\n";
}

void write_report(const ComparisonReport& r, const std::string& path, bool include_timing) {
    auto out = open_out(path);
    out << report_to_json(r, include_timing);
    finish_out(out, path);
}

namespace {

const char* series_color(std::size_t i) {
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    return kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
}

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

void render_plot(const std::vector<PlotSeries>& series, const std::string& path) {
    if (series.empty()) raise(errc::empty_signal, "render_plot: no series");
    for (const auto& s : series)
        if (s.values.empty()) raise(errc::empty_signal, "render_plot: empty series");

    std::ptrdiff_t pmin = 0, pmax = 0;
    double vmin = 0.0, vmax = 0.0;
    bool first = true;
    for (const auto& s : series) {
        const auto lo = -static_cast<std::ptrdiff_t>(s.offset);
        const auto hi = lo + static_cast<std::ptrdiff_t>(s.values.size()) - 1;
        const auto [mn, mx] = std::minmax_element(s.values.begin(), s.values.end());
        if (first) {
            pmin = lo;
            pmax = hi;
            vmin = *mn;
            vmax = *mx;
            first = false;
        } else {
            pmin = std::min(pmin, lo);
            pmax = std::max(pmax, hi);
            vmin = std::min(vmin, *mn);
            vmax = std::max(vmax, *mx);
        }
    }
    vmin = std::min(vmin, 0.0);
    if (vmax == vmin) vmax = vmin + 1.0;
    const double pspan = pmax > pmin ? static_cast<double>(pmax - pmin) : 1.0;

    constexpr double kW = 880, kH = 480, kL = 60, kR = 20, kT = 20, kB = 40;
    const auto x_of = [&](double p) { return kL + (p - static_cast<double>(pmin)) / pspan * (kW - kL - kR); };
    const auto y_of = [&](double v) { return kH - kB - (v - vmin) / (vmax - vmin) * (kH - kT - kB); };

    auto out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
        << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << kW << "\" height=\"" << kH
        << "\" fill=\"white\"/>\n";

    // value axis (left) and displacement axis at value 0
    out << "  <line x1=\"" << fmt_coord(kL) << "\" y1=\"" << fmt_coord(kT) << "\" x2=\""
        << fmt_coord(kL) << "\" y2=\"" << fmt_coord(kH - kB) << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << fmt_coord(kL) << "\" y1=\"" << fmt_coord(y_of(0.0)) << "\" x2=\""
        << fmt_coord(kW - kR) << "\" y2=\"" << fmt_coord(y_of(0.0)) << "\" stroke=\"black\"/>\n";

    // the p = 0 marker
    if (pmin <= 0 && 0 <= pmax) {
        out << "  <line x1=\"" << fmt_coord(x_of(0.0)) << "\" y1=\"" << fmt_coord(kT)
            << "\" x2=\"" << fmt_coord(x_of(0.0)) << "\" y2=\"" << fmt_coord(kH - kB)
            << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
        out << "  <text x=\"" << fmt_coord(x_of(0.0) + 4) << "\" y=\"" << fmt_coord(kH - kB + 16)
            << "\" font-family=\"sans-serif\" font-size=\"12\">p=0</text>\n";
    }
    out << "  <text x=\"" << fmt_coord(kL) << "\" y=\"" << fmt_coord(kH - kB + 16)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << pmin << "</text>\n";
    out << "  <text x=\"" << fmt_coord(kW - kR - 30) << "\" y=\"" << fmt_coord(kH - kB + 16)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << pmax << "</text>\n";
    out << "  <text x=\"4\" y=\"" << fmt_coord(y_of(vmax) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_value(vmax) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        out << "  <polyline fill=\"none\" stroke=\"" << series_color(i)
            << "\" stroke-width=\"1.5\" points=\"";
        const auto lo = -static_cast<std::ptrdiff_t>(s.offset);
        for (std::size_t t = 0; t < s.values.size(); ++t) {
            if (t) out << ' ';
            out << fmt_coord(x_of(static_cast<double>(lo + static_cast<std::ptrdiff_t>(t))))
                << ',' << fmt_coord(y_of(s.values[t]));
        }
        out << "\"/>\n";
        out << "  <text x=\"" << fmt_coord(kW - kR - 200) << "\" y=\""
            << fmt_coord(kT + 16 + 16 * static_cast<double>(i))
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << series_color(i)
            << "\">" << s.label << "</text>\n";
    }
    out << "</svg>\n";
    finish_out(out, path);
}

void render_plot(const CoincidenceSignal& e, const std::string& path) {
    PlotSeries s;
    s.label = e.smoothed ? "smoothed coincidence" : "coincidence";
    s.values = e.values;
    s.offset = e.offset;
    render_plot(std::vector<PlotSeries>{std::move(s)}, path);
}

}  // namespace seqcomp
