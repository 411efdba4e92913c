#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "seqcomp/analyze.hpp"
#include "seqcomp/ioutil.hpp"
#include "seqcomp/seqcore.hpp"
#include "seqcomp/smooth.hpp"
#include "seqcomp/synth.hpp"
#include "seqcomp/xcorr.hpp"

namespace sc = seqcomp;

namespace {

volatile double g_sink = 0.0;  // defeats dead-code elimination around timed work

sc::Engine engine_from(const std::string& name) {
    return name == "naive" ? sc::Engine::naive : sc::Engine::fft;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += std::log(x[i]);
        sy += std::log(y[i]);
    }
    const double mx = sx / n, my = sy / n;
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
        den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
    }
    return num / den;
}

void print_peaks(const std::vector<sc::Peak>& peaks) {
    if (peaks.empty()) {
        std::printf("  (none)\n");
        return;
    }
    for (const auto& pk : peaks)
        std::printf("  peak p=%td height=%.10g excess=%.10g z=%.10g\n", pk.displacement,
                    pk.height, pk.excess, pk.z);
}

// ---------------------------------------------------------------- compare

struct CompareArgs {
    std::string a, b;
    std::string engine = "fft";
    double smooth = 0.0;  // 0 = off
    bool baseline = false;
    std::string csv, plot, report, alphabet;
    double z_min = 5.0;
    unsigned threads = 1;
};

int run_compare(const CompareArgs& args) {
    const auto recs_a = sc::read_fasta_file(args.a);
    const auto recs_b = sc::read_fasta_file(args.b);
    if (recs_a.empty()) sc::raise(sc::errc::malformed_fasta, args.a + ": no sequences");
    if (recs_b.empty()) sc::raise(sc::errc::malformed_fasta, args.b + ": no sequences");
    const sc::SymbolTable table =
        args.alphabet.empty() ? sc::dna_symbol_table() : sc::load_symbol_table(args.alphabet);
    const sc::Sequence raw_a = sc::encode(recs_a.front(), table);
    const sc::Sequence raw_b = sc::encode(recs_b.front(), table);
    const sc::Engine eng = engine_from(args.engine);

    const auto [na, nb] = sc::normalize(raw_a, raw_b);

    const auto t0 = std::chrono::steady_clock::now();
    const auto ca = sc::decompose(na);
    const auto cb = sc::decompose(nb);
    const auto e = sc::coincidence(ca, cb, eng, args.threads);
    const auto t1 = std::chrono::steady_clock::now();

    const auto model = sc::expected_floor(na.size(), nb.size(), na.m);

    sc::ComparisonReport rep;
    rep.ns = na.size();
    rep.nq = nb.size();
    rep.m = na.m;
    rep.engine = eng;
    rep.z_min = args.z_min;
    rep.floor_mu0 = model.mu_at(0);
    rep.floor_sigma0 = model.sigma_at(0);
    rep.peaks = sc::detect_peaks(e, model, args.z_min);
    rep.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    std::optional<sc::CoincidenceSignal> es;
    if (args.smooth > 0.0) {
        es = sc::smoothed_coincidence(ca, cb, args.smooth, eng, args.threads);
        const auto smodel =
            sc::smoothed_floor(na.size(), nb.size(), na.m, sc::rect_kernel(args.smooth));
        rep.smoothed_peaks = sc::detect_peaks(*es, smodel, args.z_min);
        rep.smooth_width = args.smooth;
    }
    if (args.baseline) {
        rep.coincidence_pbr = sc::peak_to_background(e);
        rep.baseline_pbr = sc::peak_to_background(sc::numeric_xcorr(na, nb, eng));
    }

    std::printf("ns=%zu nq=%zu m=%u engine=%s\n", rep.ns, rep.nq, rep.m,
                std::string(sc::engine_name(eng)).c_str());
    std::printf("floor at p=0: mu=%.10g sigma=%.10g\n", rep.floor_mu0, rep.floor_sigma0);
    std::printf("coincidence peaks (z_min=%.10g): %zu\n", args.z_min, rep.peaks.size());
    print_peaks(rep.peaks);
    if (es) {
        std::printf("smoothed peaks (w=%.10g): %zu\n", args.smooth, rep.smoothed_peaks.size());
        print_peaks(rep.smoothed_peaks);
    }
    if (args.baseline)
        std::printf("peak-to-background: coincidence=%.10g baseline=%.10g\n",
                    *rep.coincidence_pbr, *rep.baseline_pbr);
    std::printf("timing: %.3f ms\n", rep.timing_ms);

    if (!args.csv.empty()) sc::write_signal_csv(e, es, args.csv);
    if (!args.plot.empty()) {
        std::vector<sc::PlotSeries> series;
        series.push_back({"coincidence", e.values, e.offset});
        if (es) series.push_back({"smoothed", es->values, es->offset});
        sc::render_plot(series, args.plot);
    }
    if (!args.report.empty()) sc::write_report(rep, args.report);
    return 0;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::size_t n = 512;
    std::uint32_t m = 4;
    std::size_t block = 130;
    std::size_t deletions = 3;
    std::uint64_t seed = 1;
    std::string out_a = "a.fasta";
    std::string out_b = "b.fasta";
    std::string truth = "truth.csv";
    std::string alphabet;
};

int run_gen(const GenArgs& args) {
    const auto spec = sc::make_planted_spec(args.n, args.m, args.block, args.deletions, args.seed);
    const auto pair = sc::gen_planted(spec);
    const sc::SymbolTable table =
        args.alphabet.empty() ? sc::dna_symbol_table() : sc::load_symbol_table(args.alphabet);
    const auto tokens = sc::code_tokens(table, args.m);

    const auto to_record = [&](const sc::Sequence& s, const char* name) {
        sc::FastaRecord rec;
        std::ostringstream h;
        h << name << " n=" << args.n << " m=" << args.m << " block=" << spec.block_length
          << " deletions=" << args.deletions << " seed=" << args.seed;
        rec.header = h.str();
        rec.residues.reserve(s.size());
        for (const auto v : s.values)
            rec.residues.push_back(tokens[static_cast<std::size_t>(v - 1)]);
        return rec;
    };
    sc::write_fasta(to_record(pair.s, "s"), args.out_a);
    sc::write_fasta(to_record(pair.q, "q"), args.out_b);

    std::ofstream tf(args.truth);
    if (!tf) sc::raise(sc::errc::io_failure, "cannot open '" + args.truth + "' for writing");
    tf << "displacement,length\n";
    for (const auto& t : pair.truth) tf << t.displacement << ',' << t.length << '\n';
    tf.flush();
    if (!tf) sc::raise(sc::errc::io_failure, "write to '" + args.truth + "' failed");

    std::printf("s: %zu symbols -> %s\n", pair.s.size(), args.out_a.c_str());
    std::printf("q: %zu symbols -> %s\n", pair.q.size(), args.out_b.c_str());
    std::printf("truth: %zu runs -> %s\n", pair.truth.size(), args.truth.c_str());
    for (const auto& t : pair.truth) std::printf("  run p=%td len=%zu\n", t.displacement, t.length);
    return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::vector<std::size_t> sizes = {512, 1024, 2048, 4096, 8192};
    std::uint32_t m = 4;
    std::vector<std::string> engines = {"fft", "naive"};
    unsigned reps = 9;
    std::uint64_t seed = 1;
    std::string csv;
};

int run_bench(const BenchArgs& args) {
    if (args.reps < 5) sc::raise(sc::errc::invalid_spec, "bench: --reps must be >= 5");
    if (args.sizes.empty()) sc::raise(sc::errc::invalid_spec, "bench: --sizes must be nonempty");

    struct Row {
        std::size_t n;
        std::string engine;
        double median, mean;
    };
    std::vector<Row> rows;

    for (const auto& engine : args.engines) {
        const sc::Engine eng = engine_from(engine);
        std::vector<double> xs, ys;
        for (const std::size_t n : args.sizes) {
            const auto s = sc::gen_uniform(n, args.m, mix_seed(args.seed, 2 * n));
            const auto q = sc::gen_uniform(n, args.m, mix_seed(args.seed, 2 * n + 1));
            const auto [ns_, nq_] = sc::normalize(s, q);
            std::vector<double> ms;
            for (unsigned r = 0; r < args.reps; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                const auto cs = sc::decompose(ns_);
                const auto cq = sc::decompose(nq_);
                const auto e = sc::coincidence(cs, cq, eng);
                const auto t1 = std::chrono::steady_clock::now();
                g_sink = g_sink + e.values[e.offset];
                ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
            const double med = median_of(ms), avg = mean_of(ms);
            rows.push_back({n, engine, med, avg});
            xs.push_back(static_cast<double>(n));
            ys.push_back(med);
            std::printf("n=%zu m=%u engine=%s reps=%u median=%.3fms mean=%.3fms\n", n, args.m,
                        engine.c_str(), args.reps, med, avg);
        }
        if (args.sizes.size() >= 2)
            std::printf("engine %s: log-log slope %.3f\n", engine.c_str(), loglog_slope(xs, ys));
    }

    if (!args.csv.empty()) {
        std::ofstream out(args.csv);
        if (!out) sc::raise(sc::errc::io_failure, "cannot open '" + args.csv + "' for writing");
        out << "n,m,engine,repetitions,median_ms,mean_ms\n";
        char buf[64];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%.6f,%.6f", r.median, r.mean);
            out << r.n << ',' << args.m << ',' << r.engine << ',' << args.reps << ',' << buf
                << '\n';
        }
        out.flush();
        if (!out) sc::raise(sc::errc::io_failure, "write to '" + args.csv + "' failed");
    }
    return 0;
}

// ---------------------------------------------------------------- noise

struct NoiseArgs {
    std::size_t n = 512;
    std::uint32_t m = 4;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::string csv;
};

int run_noise(const NoiseArgs& args) {
    if (args.trials == 0) sc::raise(sc::errc::invalid_spec, "noise: --trials must be >= 1");

    const std::size_t len = 2 * args.n - 1;
    std::vector<double> sum(len, 0.0), sumsq(len, 0.0);
    for (std::size_t t = 0; t < args.trials; ++t) {
        const auto s = sc::gen_uniform(args.n, args.m, mix_seed(args.seed, 2 * t));
        const auto q = sc::gen_uniform(args.n, args.m, mix_seed(args.seed, 2 * t + 1));
        const auto [ns_, nq_] = sc::normalize(s, q);
        const auto e = sc::coincidence(sc::decompose(ns_), sc::decompose(nq_));
        for (std::size_t i = 0; i < len; ++i) {
            sum[i] += e.values[i];
            sumsq[i] += e.values[i] * e.values[i];
        }
    }

    // The model is indexed for the full alphabet; a symbol can vanish from a
    // sampled pair, but the floor contract is about the requested m.
    const auto model = sc::expected_floor(args.n, args.n, args.m);
    const auto trials = static_cast<double>(args.trials);
    double worst_z = 0.0;
    std::ptrdiff_t worst_p = 0;
    std::vector<double> emean(len), esd(len);
    for (std::size_t i = 0; i < len; ++i) {
        emean[i] = sum[i] / trials;
        const double var = std::max(0.0, sumsq[i] / trials - emean[i] * emean[i]);
        esd[i] = args.trials > 1 ? std::sqrt(var * trials / (trials - 1.0)) : 0.0;
        if (model.sigma[i] > 0.0) {
            const double se = model.sigma[i] / std::sqrt(trials);
            const double z = std::abs(emean[i] - model.mu[i]) / se;
            if (z > worst_z) {
                worst_z = z;
                worst_p = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(model.offset);
            }
        }
    }

    std::printf("trials=%zu n=%zu m=%u seed=%llu\n", args.trials, args.n, args.m,
                static_cast<unsigned long long>(args.seed));
    const auto i0 = model.offset;
    if (model.sigma[i0] > 0.0) {
        const double se0 = model.sigma[i0] / std::sqrt(trials);
        std::printf("p=0: empirical mean=%.10g model mu=%.10g (%.2f standard errors)\n",
                    emean[i0], model.mu[i0], std::abs(emean[i0] - model.mu[i0]) / se0);
    } else {
        std::printf("p=0: empirical mean=%.10g model mu=%.10g (sigma=0)\n", emean[i0],
                    model.mu[i0]);
    }
    std::printf("max deviation: %.2f standard errors (at p=%td)\n", worst_z, worst_p);

    if (!args.csv.empty()) {
        std::ofstream out(args.csv);
        if (!out) sc::raise(sc::errc::io_failure, "cannot open '" + args.csv + "' for writing");
        out << "displacement,empirical_mean,empirical_sd,model_mu,model_sigma\n";
        char buf[128];
        for (std::size_t i = 0; i < len; ++i) {
            const auto p = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(model.offset);
            std::snprintf(buf, sizeof buf, "%td,%.17g,%.17g,%.17g,%.17g", p, emean[i], esd[i],
                          model.mu[i], model.sigma[i]);
            out << buf << '\n';
        }
        out.flush();
        if (!out) sc::raise(sc::errc::io_failure, "write to '" + args.csv + "' failed");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequence comparison by per-symbol channel correlation"};
    app.require_subcommand(1);

    CompareArgs cargs;
    auto* cmp = app.add_subcommand("compare", "compare two FASTA sequences");
    cmp->add_option("--a", cargs.a, "first FASTA file")->required();
    cmp->add_option("--b", cargs.b, "second FASTA file")->required();
    cmp->add_option("--engine", cargs.engine, "correlation engine")
        ->check(CLI::IsMember({"fft", "naive"}));
    cmp->add_option("--smooth", cargs.smooth, "rectangular low-pass width")
        ->check(CLI::PositiveNumber);
    cmp->add_flag("--baseline", cargs.baseline, "also run plain numeric cross-correlation");
    cmp->add_option("--csv", cargs.csv, "write the signal as CSV");
    cmp->add_option("--plot", cargs.plot, "write an SVG plot");
    cmp->add_option("--report", cargs.report, "write a JSON report");
    cmp->add_option("--alphabet", cargs.alphabet, "symbol table file (TOKEN=CODE lines)");
    cmp->add_option("--z-min", cargs.z_min, "peak detection threshold in model sigmas");
    cmp->add_option("--threads", cargs.threads, "per-channel worker threads")
        ->check(CLI::Range(1u, 256u));

    GenArgs gargs;
    auto* gen = app.add_subcommand("gen", "generate a planted-match sequence pair");
    gen->add_option("--n", gargs.n, "sequence length")->check(CLI::PositiveNumber);
    gen->add_option("--m", gargs.m, "alphabet size")->check(CLI::Range(1u, 256u));
    gen->add_option("--block", gargs.block, "length of the designated intact block");
    gen->add_option("--deletions", gargs.deletions, "number of deleted pieces");
    gen->add_option("--seed", gargs.seed, "random seed");
    gen->add_option("--out-a", gargs.out_a, "output FASTA for the original");
    gen->add_option("--out-b", gargs.out_b, "output FASTA for the copy with deletions");
    gen->add_option("--truth", gargs.truth, "output CSV of ground-truth runs");
    gen->add_option("--alphabet", gargs.alphabet, "symbol table file (TOKEN=CODE lines)");

    BenchArgs bargs;
    auto* bench = app.add_subcommand("bench", "time the compare pipeline");
    bench->add_option("--sizes", bargs.sizes, "comma-separated sequence lengths")
        ->delimiter(',');
    bench->add_option("--m", bargs.m, "alphabet size")->check(CLI::Range(1u, 256u));
    bench->add_option("--engines", bargs.engines, "engines to time")
        ->delimiter(',')
        ->check(CLI::IsMember({"fft", "naive"}));
    bench->add_option("--reps", bargs.reps, "repetitions per point (>= 5)");
    bench->add_option("--seed", bargs.seed, "random seed");
    bench->add_option("--csv", bargs.csv, "write timings as CSV");

    NoiseArgs nargs;
    auto* noise = app.add_subcommand("noise", "Monte Carlo calibration of the noise floor");
    noise->add_option("--n", nargs.n, "sequence length")->check(CLI::PositiveNumber);
    noise->add_option("--m", nargs.m, "alphabet size")->check(CLI::Range(1u, 256u));
    noise->add_option("--trials", nargs.trials, "number of random pairs");
    noise->add_option("--seed", nargs.seed, "random seed");
    noise->add_option("--csv", nargs.csv, "write per-displacement statistics as CSV");

    int rc = 0;
    cmp->callback([&] { rc = run_compare(cargs); });
    gen->callback([&] { rc = run_gen(gargs); });
    bench->callback([&] { rc = run_bench(bargs); });
    noise->callback([&] { rc = run_noise(nargs); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sc::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.numeric() ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
