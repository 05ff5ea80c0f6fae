#include "hypwin/transform.hpp"

#include "hypwin/error.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace hypwin::dft {

namespace {

using cplx = std::complex<double>;

// Below this size the OpenMP fork/join costs more than the butterflies.
constexpr std::size_t kParallelThreshold = 1U << 12;

// exp(-2 pi i k / n) for k < n/2, each entry computed directly from its own
// angle (no recurrences), which keeps the transform noise near machine epsilon.
std::shared_ptr<const std::vector<cplx>> twiddles(std::size_t n)
{
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const std::vector<cplx>>> cache;

    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        auto table = std::make_shared<std::vector<cplx>>(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            (*table)[k] = cplx(std::cos(angle), std::sin(angle));
        }
        slot = std::move(table);
    }
    return slot;
}

std::size_t reverse_bits(std::size_t value, int bits)
{
    std::size_t out = 0;
    for (int b = 0; b < bits; ++b) {
        out = (out << 1) | (value & 1U);
        value >>= 1;
    }
    return out;
}

void bit_reverse_permute(std::span<cplx> data, int bits, bool parallel)
{
    const auto n = static_cast<std::ptrdiff_t>(data.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto j = static_cast<std::ptrdiff_t>(reverse_bits(static_cast<std::size_t>(i), bits));
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }
}

std::size_t next_power_of_two(std::size_t n)
{
    std::size_t p = 1;
    while (p < n) {
        p <<= 1;
    }
    return p;
}

std::vector<cplx> bluestein(std::span<const double> input, Execution exec)
{
    const std::size_t n = input.size();
    const std::size_t len = next_power_of_two(2 * n - 1);

    // chirp_k = exp(-i pi k^2 / n); k^2 reduced mod 2n to keep the angle small.
    std::vector<cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto k2 = static_cast<double>((k * k) % (2 * n));
        const double angle = -std::numbers::pi * k2 / static_cast<double>(n);
        chirp[k] = cplx(std::cos(angle), std::sin(angle));
    }

    std::vector<cplx> a(len, cplx{});
    std::vector<cplx> b(len, cplx{});
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = input[k] * chirp[k];
    }
    b[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
        b[k] = b[len - k] = std::conj(chirp[k]);
    }

    fft_radix2(a, exec);
    fft_radix2(b, exec);
    for (std::size_t k = 0; k < len; ++k) {
        a[k] = std::conj(a[k] * b[k]);
    }
    fft_radix2(a, exec); // inverse via conjugation
    const double scale = 1.0 / static_cast<double>(len);

    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = std::conj(a[k]) * scale * chirp[k];
    }
    return out;
}

} // namespace

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::span<cplx> data, Execution exec)
{
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) {
        throw ValidationError("n", "radix-2 transform length must be a power of two");
    }
    if (n < 2) {
        return;
    }
    int bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }

    const bool parallel = exec == Execution::Parallel && n >= kParallelThreshold;
    const auto table = twiddles(n);
    const cplx* tw = table->data();

    bit_reverse_permute(data, bits, parallel);

    const auto butterflies = static_cast<std::ptrdiff_t>(n / 2);
    for (std::size_t half = 1; half < n; half <<= 1) {
        const std::size_t stride = n / (2 * half);
#pragma omp parallel for schedule(static) if (parallel)
        for (std::ptrdiff_t b = 0; b < butterflies; ++b) {
            const auto ub = static_cast<std::size_t>(b);
            const std::size_t group = ub / half;
            const std::size_t pos = ub % half;
            const std::size_t i = group * 2 * half + pos;
            const std::size_t j = i + half;
            const cplx t = tw[pos * stride] * data[j];
            data[j] = data[i] - t;
            data[i] += t;
        }
    }
}

std::vector<cplx> forward(std::span<const double> input, Execution exec)
{
    if (input.empty()) {
        return {};
    }
    if (!is_power_of_two(input.size())) {
        return bluestein(input, exec);
    }
    std::vector<cplx> data(input.begin(), input.end());
    fft_radix2(data, exec);
    return data;
}

std::vector<cplx> naive_dft(std::span<const double> input)
{
    const std::size_t n = input.size();
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc{};
        for (std::size_t j = 0; j < n; ++j) {
            const auto phase = static_cast<double>((j * k) % n);
            const double angle = -2.0 * std::numbers::pi * phase / static_cast<double>(n);
            acc += input[j] * cplx(std::cos(angle), std::sin(angle));
        }
        out[k] = acc;
    }
    return out;
}

} // namespace hypwin::dft
