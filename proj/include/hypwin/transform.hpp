#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hypwin::dft {

/// Selects the OpenMP kernels or the single-threaded reference path. Both
/// perform the same floating-point operations in the same order, so results
/// are bit-identical.
enum class Execution
{
    Serial,
    Parallel,
};

bool is_power_of_two(std::size_t n) noexcept;

/// In-place forward radix-2 transform, X_k = sum_j x_j exp(-2 pi i jk/n).
/// Size must be a power of two.
void fft_radix2(std::span<std::complex<double>> data, Execution exec = Execution::Parallel);

/// Forward DFT of a real sequence of any length. Powers of two go through
/// fft_radix2; other lengths use Bluestein's chirp-z construction.
std::vector<std::complex<double>> forward(std::span<const double> input,
                                          Execution exec = Execution::Parallel);

/// Direct O(n^2) summation. Test and benchmark reference only.
std::vector<std::complex<double>> naive_dft(std::span<const double> input);

} // namespace hypwin::dft
