#include "oracles.hpp"

#include "hypwin/error.hpp"
#include "hypwin/transform.hpp"

#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

using namespace hypwin;

namespace {

double max_rel_error(const std::vector<std::complex<double>>& got,
                     const std::vector<std::complex<long double>>& ref)
{
    long double peak = 0;
    for (const auto& v : ref) {
        peak = std::max(peak, std::abs(v));
    }
    long double worst = 0;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        const std::complex<long double> g(got[k].real(), got[k].imag());
        worst = std::max(worst, std::abs(g - ref[k]));
    }
    return static_cast<double>(worst / peak);
}

std::vector<double> random_sequence(std::size_t n, oracle::Rng& rng)
{
    std::vector<double> x(n);
    for (double& v : x) {
        v = rng.uniform(-1.0, 1.0);
    }
    return x;
}

} // namespace

TEST_CASE("power-of-two transform matches direct summation")
{
    oracle::Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
            const auto x = random_sequence(n, rng);
            CHECK(max_rel_error(dft::forward(x, dft::Execution::Serial), oracle::direct_dft(x)) < 1e-13);
        }
    }
}

TEST_CASE("other lengths use the chirp-z path and agree with direct summation")
{
    oracle::Rng rng(7);
    for (std::size_t n : {1u, 3u, 5u, 6u, 12u, 17u, 48u, 100u, 127u}) {
        const auto x = random_sequence(n, rng);
        CAPTURE(n);
        CHECK(max_rel_error(dft::forward(x), oracle::direct_dft(x)) < 1e-12);
    }
}

TEST_CASE("library naive DFT agrees with the long-double oracle")
{
    oracle::Rng rng(3);
    const auto x = random_sequence(40, rng);
    CHECK(max_rel_error(dft::naive_dft(x), oracle::direct_dft(x)) < 1e-13);
}

TEST_CASE("serial and parallel kernels are bit-identical")
{
    oracle::Rng rng(99);
    for (std::size_t n : {64u, 4096u, 65536u, 262144u}) {
        const auto x = random_sequence(n, rng);
        const auto a = dft::forward(x, dft::Execution::Serial);
        const auto b = dft::forward(x, dft::Execution::Parallel);
        REQUIRE(a.size() == b.size());
        bool identical = true;
        for (std::size_t k = 0; k < n; ++k) {
            identical = identical && a[k] == b[k];
        }
        CHECK(identical);
    }
}

TEST_CASE("radix-2 rejects other sizes")
{
    std::vector<std::complex<double>> data(12);
    CHECK_THROWS_AS(dft::fft_radix2(data), ValidationError);
    CHECK(dft::is_power_of_two(1));
    CHECK(dft::is_power_of_two(65536));
    CHECK_FALSE(dft::is_power_of_two(0));
    CHECK_FALSE(dft::is_power_of_two(96));
}
