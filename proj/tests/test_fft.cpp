#include "seqcomp/fft.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "seqcomp/errors.hpp"

using namespace seqcomp;
using cplx = std::complex<double>;

namespace {

/// O(n^2) reference DFT, written independently of FftPlan.
std::vector<cplx> dft_reference(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{};
        for (std::size_t t = 0; t < n; ++t) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(k * t) /
                               static_cast<double>(n);
            acc += x[t] * cplx(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

double max_err(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("known transforms") {
    FftPlan p4(4);

    std::vector<cplx> delta{1, 0, 0, 0};
    p4.forward(delta.data());
    CHECK(max_err(delta, {cplx(1), cplx(1), cplx(1), cplx(1)}) < 1e-15);

    std::vector<cplx> ones{1, 1, 1, 1};
    p4.forward(ones.data());
    CHECK(max_err(ones, {cplx(4), cplx(0), cplx(0), cplx(0)}) < 1e-15);

    std::vector<cplx> shifted{0, 1, 0, 0};
    p4.forward(shifted.data());
    CHECK(max_err(shifted, {cplx(1, 0), cplx(0, -1), cplx(-1, 0), cplx(0, 1)}) < 1e-15);
}

TEST_CASE("size-1 transform is the identity") {
    FftPlan p1(1);
    std::vector<cplx> x{cplx(3.5, -2.0)};
    p1.forward(x.data());
    CHECK(x[0] == cplx(3.5, -2.0));
    p1.inverse(x.data());
    CHECK(x[0] == cplx(3.5, -2.0));
}

TEST_CASE("forward matches the reference DFT") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const std::size_t n : {2u, 8u, 16u, 32u}) {
        std::vector<cplx> x(n);
        for (auto& v : x) v = cplx(u(rng), u(rng));
        auto expect = dft_reference(x);
        FftPlan plan(n);
        auto got = x;
        plan.forward(got.data());
        CHECK(max_err(got, expect) < 1e-10);
    }
}

TEST_CASE("inverse undoes forward") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<cplx> x(64);
    for (auto& v : x) v = cplx(u(rng), u(rng));
    auto y = x;
    FftPlan plan(64);
    plan.forward(y.data());
    plan.inverse(y.data());
    CHECK(max_err(y, x) < 1e-12);
}

TEST_CASE("next_pow2") {
    CHECK(FftPlan::next_pow2(1) == 1);
    CHECK(FftPlan::next_pow2(2) == 2);
    CHECK(FftPlan::next_pow2(5) == 8);
    CHECK(FftPlan::next_pow2(8) == 8);
    CHECK(FftPlan::next_pow2(FftPlan::max_size()) == FftPlan::max_size());
    try {
        FftPlan::next_pow2(FftPlan::max_size() + 1);
        FAIL("expected fft_size_overflow");
    } catch (const error& e) {
        CHECK(e.code() == errc::fft_size_overflow);
        CHECK(e.numeric());
    }
}

TEST_CASE("plans require a power-of-two size") {
    CHECK_THROWS_AS(FftPlan(0), error);
    CHECK_THROWS_AS(FftPlan(3), error);
    CHECK_THROWS_AS(FftPlan(12), error);
}

TEST_CASE("the process-wide plan cache returns one plan per size") {
    const auto a = FftPlan::shared(256);
    const auto b = FftPlan::shared(256);
    CHECK(a.get() == b.get());
    CHECK(a->size() == 256);
}
