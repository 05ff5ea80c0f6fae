#pragma once

#include "hypwin/spectral_metrics.hpp"
#include "hypwin/window.hpp"

#include <optional>
#include <vector>

namespace hypwin {

/// Frequency (Tf) at which roll-off is measured unless told otherwise.
inline constexpr double kRolloffCenter = 150.0;

/// Warp s for which the hyperbolic window of exponent `alpha`, sampled at
/// `n` points, has the requested ENBW. Bisection on the monotone s -> ENBW
/// relation; the result matches the target within 1e-6.
double solve_warp_for_enbw(double alpha, double target_enbw, int n);

/// Planck taper epsilon in [0.001, 0.5] with the requested ENBW.
double solve_planck_epsilon_for_enbw(double target_enbw, int n);

/// First-order (small s) difference between the hyperbolic window and
/// Hann^alpha at tau, for integer alpha:
///   2^(2-2a) pi a s tau (1-tau) sum_{k<a} C(2a,k) (a-k)/a sin((a-k) pi tau)
double perturbation_delta_w(double alpha, double warp, double tau);

/// A padded spectrum split into the smooth part interpolated from the
/// unpadded DFT and the oscillatory remainder.
struct Decomposition
{
    Spectrum total;
    std::vector<double> dc;
    std::vector<double> residual;

    Spectrum dc_spectrum() const;
    Spectrum residual_spectrum() const;
};

/// Requires pad >= 4.
Decomposition decompose(const SampledWindow& w, int pad);

/// Splits `total` using the DC curve of window `w` (local cubic interpolation
/// through its unpadded DFT). Used when `total` is the spectrum of a windowed
/// signal rather than of the window itself.
Decomposition decompose_against(Spectrum total, const SampledWindow& w);

/// Lowest integer Tf past the first zero crossing from which the total stays
/// of one sign for at least three whole cycles. 0 when the transform never
/// crosses zero; absent when it keeps oscillating across the whole grid.
std::optional<double> dc_dominance_onset(const Spectrum& total);

/// Residual when DC dominance sets in below `f_center`, otherwise total.
RolloffSource rolloff_source_for(const Spectrum& total, double f_center = kRolloffCenter);

/// True when the hyperbolic transform of exponent `alpha` crosses zero below
/// Tf = alpha + 3 (the first-sidelobe region of Hann^alpha plus one cycle).
/// Past the critical ENBW the first crossing jumps far out, where it reflects
/// the slowly decaying boundary term rather than a sidelobe structure.
bool oscillates_in_near_field(const Spectrum& total, double alpha);

struct CriticalPoint
{
    double enbw;      // largest ENBW that still has a near-field zero crossing
    double warp;      // corresponding s
    double next_enbw; // smallest probed ENBW without one
};

/// Searches s by bisection for the edge of the oscillatory regime: the
/// largest ENBW for which oscillates_in_near_field() still holds.
CriticalPoint find_critical_enbw(double alpha, int n, int pad = 16);

struct EnvelopeCrossing
{
    double crossover_tf;
    double max_advantage_db; // largest (other - reference) envelope gap before the crossover
};

/// Walks the local maxima of `reference` from `start_tf` upward, comparing
/// them against the dB envelope of `other` (piecewise linear between its
/// maxima). The crossover is the first of `persistence` consecutive points
/// where other <= reference. Throws NumericalError when there is none.
EnvelopeCrossing compare_envelopes(const Spectrum& reference, const Spectrum& other, double start_tf,
                                   int persistence = 3);

struct CrossoverResult
{
    double enbw;
    double alpha;
    double warp;
    double planck_epsilon;
    double crossover_tf;
    double max_advantage_db;
    RolloffSource source;
};

/// Frequency beyond which the Planck window of the same ENBW has the lower
/// envelope. The hyperbolic curve is its residual when DC dominance sets in
/// below Tf = 150, its total otherwise.
CrossoverResult crossover_vs_planck(double alpha, double enbw, int n, int pad);

/// Spectrum of the window applied to a unit DC level plus a cosine at
/// `tone_tf` cycles per window, w_j (1 + 2 A cos(2 pi tone_tf t_j / n)) with
/// t_j the signed sample time, so the tone peak sits at A relative to f = 0.
Spectrum tone_demo(const WindowSpec& window, double tone_tf, double rel_amplitude, int n, int pad);

/// tone_demo() split against the window's own DC curve.
Decomposition tone_demo_decomposed(const WindowSpec& window, double tone_tf, double rel_amplitude, int n,
                                   int pad);

/// ENBW, sidelobe and roll-off for one configuration. Hyperbolic windows
/// switch their roll-off measurement to the residual per rolloff_source_for().
WindowMetrics evaluate_metrics(const WindowSpec& spec, int n, int pad, double f_center = kRolloffCenter);

} // namespace hypwin
