// Acceptance harness: one line per criterion, exit code = number of failures.
// Every random draw is seeded, so a run is reproducible end to end.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "seqcomp/analyze.hpp"
#include "seqcomp/seqcore.hpp"
#include "seqcomp/smooth.hpp"
#include "seqcomp/synth.hpp"
#include "seqcomp/xcorr.hpp"

using namespace seqcomp;

namespace {

volatile double g_sink = 0.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

NormalizedSequence make_norm(const Sequence& s, std::uint32_t m) {
    NormalizedSequence n;
    n.codes.assign(s.values.begin(), s.values.end());
    n.m = m;
    return n;
}

std::vector<double> conv_full(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<double> autocorr(const std::vector<double>& g) {
    std::vector<double> rho(2 * g.size() - 1, 0.0);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) rho[b + (g.size() - 1) - a] += g[a] * g[b];
    return rho;
}

// ---- criterion 1: worked-example fidelity --------------------------------

Outcome criterion1() {
    const auto [sc, qc] =
        test_helpers::channels_of(test_helpers::worked_s(), test_helpers::worked_q());
    const auto kn = correlate_channel_naive(sc.channels[0], qc.channels[0], 1);
    const auto kf = correlate_channel_fft(sc.channels[0], qc.channels[0], 1);
    const bool ok = kn.at(3) == 6.0 && kf.at(3) == 6.0 && kn.values == kf.values;
    char buf[128];
    std::snprintf(buf, sizeof buf, "N=25 M=2 channel 1 at p=+3: naive=%g fft=%g (want 6, both engines)",
                  kn.at(3), kf.at(3));
    return {ok, buf};
}

// ---- criterion 2: fft == naive over 1000 random pairs --------------------

Outcome criterion2() {
    std::mt19937_64 rng(0xC0FFEE);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t ns = 1 + rng() % 256;
        const std::size_t nq = 1 + rng() % 256;
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 8);
        const auto s = gen_uniform(ns, m, rng());
        const auto q = gen_uniform(nq, m, rng());
        const auto sc = decompose(make_norm(s, m));
        const auto qc = decompose(make_norm(q, m));
        const auto en = coincidence(sc, qc, Engine::naive);
        const auto ef = coincidence(sc, qc, Engine::fft);
        if (en.values != ef.values || en.offset != ef.offset) {
            return {false, "engines disagree at trial " + std::to_string(trial) +
                               " (ns=" + std::to_string(ns) + " nq=" + std::to_string(nq) +
                               " m=" + std::to_string(m) + ")"};
        }
        ++checked;
    }
    return {true, "1000 random pairs (Ns,Nq<=256, M<=8): fft == naive at every displacement, "
                  "all residuals < 0.25"};
}

// ---- criterion 3: conservation law ---------------------------------------

Outcome criterion3() {
    std::mt19937_64 rng(0x5EED);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t ns = 8 + rng() % 200;
        const std::size_t nq = 8 + rng() % 200;
        const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 8);
        const auto s = gen_uniform(ns, m, rng());
        const auto q = gen_uniform(nq, m, rng());
        const auto E = coincidence(decompose(make_norm(s, m)), decompose(make_norm(q, m)));
        const double total = std::accumulate(E.values.begin(), E.values.end(), 0.0);
        std::vector<std::int64_t> cs(m + 1, 0), cq(m + 1, 0);
        for (const auto v : s.values) ++cs[static_cast<std::size_t>(v)];
        for (const auto v : q.values) ++cq[static_cast<std::size_t>(v)];
        std::int64_t want = 0;
        for (std::uint32_t j = 1; j <= m; ++j) want += cs[j] * cq[j];
        if (total != static_cast<double>(want))
            return {false, "sum_p E_p = " + std::to_string(total) + " but symbol census gives " +
                               std::to_string(want) + " at trial " + std::to_string(trial)};
    }
    return {true, "500 random pairs: sum_p E_p == sum_j n_j(s)*n_j(q) with zero deviation"};
}

// ---- criterion 4: N/4 noise floor ----------------------------------------

Outcome criterion4() {
    constexpr std::size_t kN = 512;
    constexpr std::uint32_t kM = 4;
    constexpr int kTrials = 1000;
    const std::vector<std::ptrdiff_t> probes{0, 128, -128, 256, -256};

    const auto model = expected_floor(kN, kN, kM);
    std::vector<double> sum(probes.size(), 0.0), sumsq(probes.size(), 0.0);
    for (int t = 0; t < kTrials; ++t) {
        const auto s = gen_uniform(kN, kM, 0xA0000 + static_cast<std::uint64_t>(t));
        const auto q = gen_uniform(kN, kM, 0xB0000 + static_cast<std::uint64_t>(t));
        const auto E = coincidence(decompose(make_norm(s, kM)), decompose(make_norm(q, kM)));
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const double v = E.at(probes[i]);
            sum[i] += v;
            sumsq[i] += v * v;
        }
    }

    double worst_mean_se = 0.0, worst_sd_rel = 0.0;
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const double mu = model.mu_at(probes[i]);
        const double sg = model.sigma_at(probes[i]);
        const double mean = sum[i] / kTrials;
        const double var = (sumsq[i] - kTrials * mean * mean) / (kTrials - 1);
        const double mean_dev_se = std::abs(mean - mu) / (sg / std::sqrt(double(kTrials)));
        // sampling error of a variance estimate: sd(s^2) ~ sigma^2*sqrt(2/(n-1))
        const double var_dev_se = std::abs(var - sg * sg) / (sg * sg * std::sqrt(2.0 / (kTrials - 1)));
        worst_mean_se = std::max(worst_mean_se, mean_dev_se);
        worst_sd_rel = std::max(worst_sd_rel, var_dev_se);
    }
    const bool ok = worst_mean_se <= 3.0 && worst_sd_rel <= 4.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "1000 pairs N=512 M=4 at p in {0,±128,±256}: worst mean dev %.2f SE (<=3), "
                  "worst variance dev %.2f SE (<=4); mu(0)=128",
                  worst_mean_se, worst_sd_rel);
    return {ok, buf};
}

// ---- criterion 5: planted-block replica ----------------------------------

Outcome criterion5() {
    int detected = 0, pbr_wins = 0;
    constexpr int kTrials = 100;
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t k = 3 + static_cast<std::size_t>(t % 4);
        const auto spec = make_planted_spec(512, 4, 130, k, 9000 + static_cast<std::uint64_t>(t));
        const auto pp = gen_planted(spec);
        const auto ns_ = make_norm(pp.s, 4);
        const auto nq_ = make_norm(pp.q, 4);
        const auto E = coincidence(decompose(ns_), decompose(nq_));
        const auto peaks = detect_peaks(E, expected_floor(pp.s.size(), pp.q.size(), 4), 5.0);

        bool all_found = true;
        for (const auto& truth : pp.truth) {
            if (truth.length < 130) continue;
            const bool found =
                std::any_of(peaks.begin(), peaks.end(), [&](const Peak& pk) {
                    return pk.displacement == truth.displacement && pk.height >= 130.0;
                });
            all_found = all_found && found;
        }
        detected += all_found ? 1 : 0;

        const double pbr_c = peak_to_background(E);
        const double pbr_b = peak_to_background(numeric_xcorr(ns_, nq_));
        pbr_wins += pbr_c > pbr_b ? 1 : 0;
    }
    const bool ok = detected == kTrials && pbr_wins >= 95;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "100 planted instances (block 130, 3-6 deletions): detection %d/100 (need 100), "
                  "coincidence pbr wins %d/100 (need >=95)",
                  detected, pbr_wins);
    return {ok, buf};
}

// ---- criterion 6: smoothing equivalence ----------------------------------

Outcome criterion6() {
    std::mt19937_64 rng(0x600D);
    double worst_rel = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t ns = 16 + rng() % 144;
        const std::size_t nq = 16 + rng() % 144;
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 5);
        const auto sc = decompose(make_norm(gen_uniform(ns, m, rng()), m));
        const auto qc = decompose(make_norm(gen_uniform(nq, m, rng()), m));
        const auto E = coincidence(sc, qc, Engine::naive);

        for (const double w : {1.5, 4.5}) {
            const auto want = conv_full(E.values, autocorr(rect_kernel(w).taps));
            const auto got = smoothed_coincidence(sc, qc, w);
            if (got.values.size() != want.size())
                return {false, "smoothed length mismatch at trial " + std::to_string(trial)};
            double max_abs = 1.0;
            for (const double v : got.values) max_abs = std::max(max_abs, std::abs(v));
            for (std::size_t i = 0; i < want.size(); ++i) {
                const double rel = std::abs(got.values[i] - want[i]) / max_abs;
                worst_rel = std::max(worst_rel, rel);
                if (rel > 1e-6)
                    return {false, "w=" + std::to_string(w) + " deviates by " +
                                       std::to_string(rel) + " of max at trial " +
                                       std::to_string(trial)};
            }
        }

        const auto ident = smoothed_coincidence(sc, qc, 1.0);
        if (ident.values != E.values || ident.offset != E.offset)
            return {false, "w=1 is not bit-identical at trial " + std::to_string(trial)};
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "200 pairs, w in {1.5,4.5}: matches E (*) kernel autocorrelation, worst dev "
                  "%.2e of max (<=1e-6); w=1 bit-identical",
                  worst_rel);
    return {true, buf};
}

// ---- criterion 7: invariance suite ---------------------------------------

Outcome criterion7() {
    std::mt19937_64 rng(0x1AB5);

    // Relabeling: one random permutation of {1..M} applied to both inputs.
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 7);
        const auto s = gen_uniform(24 + rng() % 120, m, rng());
        const auto q = gen_uniform(24 + rng() % 120, m, rng());
        std::vector<std::int64_t> perm(m);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto relabel = [&](const Sequence& x) {
            Sequence y = x;
            for (auto& v : y.values) v = perm[static_cast<std::size_t>(v - 1)];
            return y;
        };
        const auto base = coincidence(decompose(make_norm(s, m)), decompose(make_norm(q, m)));
        const auto rs = relabel(s);
        const auto rq = relabel(q);
        const auto relabeled =
            coincidence(decompose(make_norm(rs, m)), decompose(make_norm(rq, m)));
        if (base.values != relabeled.values)
            return {false, "relabel changed E at trial " + std::to_string(trial)};
    }

    // Scaling: both raw inputs times one random positive factor, then
    // distinct-rank normalization; E must be value-identical.
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 7);
        const auto s = gen_uniform(24 + rng() % 120, m, rng());
        const auto q = gen_uniform(24 + rng() % 120, m, rng());
        const std::int64_t factor = 2 + static_cast<std::int64_t>(rng() % 999);
        const auto scale = [&](const Sequence& x) {
            Sequence y = x;
            for (auto& v : y.values) v *= factor;
            return y;
        };
        const auto [a0, b0] = normalize(s, q);
        const auto base = coincidence(decompose(a0), decompose(b0));
        const auto [a1, b1] = normalize(scale(s), scale(q));
        const auto scaled = coincidence(decompose(a1), decompose(b1));
        if (base.values != scaled.values)
            return {false, "scaling by " + std::to_string(factor) + " changed E at trial " +
                               std::to_string(trial)};
    }
    return {true, "200 relabel trials + 200 same-factor scaling trials leave E value-identical"};
}

// ---- criterion 8: performance separation ---------------------------------

double median_pipeline_ms(std::size_t n, Engine engine, int reps, std::uint64_t seed) {
    const auto s = gen_uniform(n, 4, seed);
    const auto q = gen_uniform(n, 4, seed + 777);
    const auto ns_ = make_norm(s, 4);
    const auto nq_ = make_norm(q, 4);
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto sc = decompose(ns_);
        const auto qc = decompose(nq_);
        const auto E = coincidence(sc, qc, engine);
        const auto t1 = std::chrono::steady_clock::now();
        g_sink = g_sink + E.at(0);
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

Outcome criterion8() {
    const std::vector<std::size_t> sizes{1024, 2048, 4096, 8192, 16384};
    std::vector<double> lx, fft_ly, naive_ly;
    double fft_8192 = 0.0, naive_8192 = 0.0;
    for (const auto n : sizes) {
        const double f = median_pipeline_ms(n, Engine::fft, 7, 0xBE9C + n);
        const double v = median_pipeline_ms(n, Engine::naive, 3, 0xBE9C + n);
        lx.push_back(std::log2(static_cast<double>(n)));
        fft_ly.push_back(std::log2(f));
        naive_ly.push_back(std::log2(v));
        if (n == 8192) {
            fft_8192 = f;
            naive_8192 = v;
        }
    }
    const double ratio = naive_8192 / fft_8192;
    const double fft_slope = fit_slope(lx, fft_ly);
    const double naive_slope = fit_slope(lx, naive_ly);
    const bool ok = fft_8192 < 50.0 && ratio >= 10.0 && fft_slope <= 1.4 && naive_slope >= 1.7;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "N=8192 M=4: fft median %.3f ms (<50), naive/fft ratio %.1fx (>=10); "
                  "log-log slopes fft %.3f (<=1.4) naive %.3f (>=1.7) over N=1024..16384",
                  fft_8192, ratio, fft_slope, naive_slope);
    return {ok, buf};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"worked-example fidelity", criterion1},
        {"fft/naive oracle equivalence", criterion2},
        {"conservation law", criterion3},
        {"uniform noise floor", criterion4},
        {"planted-block replica", criterion5},
        {"smoothing equivalence", criterion6},
        {"invariance suite", criterion7},
        {"performance separation", criterion8},
    };
    int failures = 0;
    for (std::size_t i = 0; i < sizeof entries / sizeof entries[0]; ++i) {
        Outcome o;
        try {
            o = entries[i].fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    return failures;
}
