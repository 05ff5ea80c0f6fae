#pragma once

#include "hypwin/transform.hpp"
#include "hypwin/window.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hypwin {

/// Power values are clamped here so logarithms stay finite at exact zeros.
inline constexpr double kDbFloor = -400.0;

/// Amplitudes below this (relative to the peak, about -300 dB) are treated as
/// numerical noise when looking for sign changes.
inline constexpr double kSignificantAmplitude = 1e-15;

/// Envelope points below this power are considered noise-floor contaminated.
inline constexpr double kNoiseGuardDb = -320.0;

/// Real signed amplitude curve on the zero-padded grid Tf = k / pad,
/// k = 0 .. n*pad/2, plus its power in decibels.
///
/// Transform spectra are normalized so values[0] == 1. Derived curves (the
/// oscillatory residual, the smooth DC part) keep the scale of the spectrum
/// they came from.
struct Spectrum
{
    int n = 0;
    int pad = 1;
    std::vector<double> values;
    std::vector<double> power_db;
    /// Largest |Im X_k| / Re X_0 discarded from the transform.
    double imag_residue = 0.0;

    std::size_t size() const noexcept { return values.size(); }
    double tf(std::size_t k) const noexcept { return static_cast<double>(k) / pad; }
    /// Nearest bin to a frequency, clamped to the grid.
    std::size_t bin(double tf) const noexcept;

    static Spectrum from_amplitudes(int n, int pad, std::vector<double> values, double imag_residue = 0.0);
};

double amplitude_to_db(double amplitude) noexcept;

/// ENBW = N sum w_j^2 / (sum w_j)^2 over all stored samples.
double enbw(std::span<const double> samples);
inline double enbw(const SampledWindow& w) { return enbw(w.samples()); }

/// Zero-padded transform of a sequence in DFT storage order (index 0 at t = 0,
/// negative times at the top). The real part is kept and normalized by the
/// f = 0 bin.
Spectrum compute_spectrum(std::span<const double> samples, int pad,
                          dft::Execution exec = dft::Execution::Parallel);
inline Spectrum compute_spectrum(const SampledWindow& w, int pad,
                                 dft::Execution exec = dft::Execution::Parallel)
{
    return compute_spectrum(w.samples(), pad, exec);
}

struct Peak
{
    std::size_t bin;
    double tf;
    double amplitude; // |W|
};

/// Bins in [first, last] whose |W| is strictly above the left neighbour and
/// not below the right one, plateaus resolved to their leftmost bin.
std::vector<Peak> local_maxima(const Spectrum& sp, std::size_t first, std::size_t last);

/// First sign change of the signed amplitude at Tf > 0, linearly interpolated
/// between the bracketing bins. Bins below kSignificantAmplitude are skipped.
std::optional<double> first_zero_crossing(const Spectrum& sp);

/// Highest sidelobe power in dB beyond the first zero crossing; absent when
/// there is no crossing or no local maximum past it.
std::optional<double> max_sidelobe_db(const Spectrum& sp);

struct RolloffEstimate
{
    double slope = 0.0;      // amplitude exponent r, |W| ~ Tf^r
    int points_used = 0;
    int points_total = 0;
    int iterations = 0;
    bool oscillatory = true; // false: too few maxima, the smooth curve was sampled at integer Tf
};

/// Log-log envelope slope of |W| over [f_center / 2^h, f_center * 2^h].
///
/// Envelope points are the local maxima of |W| when the span holds at least
/// six of them, otherwise (a smooth, non-oscillating curve) the values at
/// integer Tf. A least-squares line is
/// fitted to log10|W| against log10 Tf, lifted to the upper envelope, and
/// points more than 3 dB below it are dropped before refitting, until the
/// point set is stable or 10 passes have run.
///
/// Throws NumericalError with fewer than 6 envelope points or when a point
/// lies below kNoiseGuardDb; ValidationError when the span leaves the grid.
RolloffEstimate estimate_rolloff(const Spectrum& sp, double f_center = 150.0,
                                 double half_span_octaves = 1.0);

struct NoiseFloor
{
    double level_db;
    /// Lowest Tf past which the per-cycle maximum power stays within 10 dB of the floor.
    double onset_tf;
};

/// Median envelope (local-maximum) power over the top octave of the grid,
/// reported only when that octave is flat: the medians of eight log-spaced
/// sub-bands must fit an amplitude log-log slope of magnitude below 0.5.
std::optional<NoiseFloor> noise_floor_db(const Spectrum& sp);

enum class RolloffSource
{
    Total,
    Residual,
};

const char* to_string(RolloffSource source) noexcept;

/// ENBW, maximum sidelobe, and roll-off for one window configuration.
struct WindowMetrics
{
    double enbw = 0.0;
    std::optional<double> sidelobe_db;
    std::optional<double> rolloff;
    RolloffSource rolloff_source = RolloffSource::Total;
};

} // namespace hypwin
