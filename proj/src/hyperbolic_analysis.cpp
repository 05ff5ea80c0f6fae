#include "hypwin/hyperbolic_analysis.hpp"

#include "hypwin/detail/local_cubic.hpp"
#include "hypwin/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace hypwin {

namespace detail {

double LocalCubic::knot(long i) const
{
    const auto last = static_cast<long>(y_.size()) - 1;
    if (i < 0) {
        i = -i;
    }
    if (i > last) {
        i = 2 * last - i;
    }
    return y_[static_cast<std::size_t>(std::clamp(i, 0L, last))];
}

double LocalCubic::operator()(double x) const
{
    const auto last = static_cast<long>(y_.size()) - 1;
    if (last < 1) {
        return y_.empty() ? 0.0 : y_[0];
    }
    const double clamped = std::clamp(x, 0.0, static_cast<double>(last));
    const long i = std::min(static_cast<long>(std::floor(clamped)), last - 1);
    const double t = clamped - static_cast<double>(i);
    const double p0 = knot(i - 1);
    const double p1 = knot(i);
    const double p2 = knot(i + 1);
    const double p3 = knot(i + 2);
    if (t == 0.0) {
        return p1;
    }
    return p1 + 0.5 * t * ((p2 - p0) + t * ((2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) + t * (3.0 * (p1 - p2) + p3 - p0)));
}

} // namespace detail

namespace {

constexpr int kMaxBisections = 200;

// Bisection for a decreasing f on [lo, hi]: returns x with f(x) ~= target.
double bisect_decreasing(const std::function<double(double)>& f, double lo, double hi, double target,
                         const char* what)
{
    double x = 0.5 * (lo + hi);
    double fx = f(x);
    for (int step = 0; step < kMaxBisections; ++step) {
        x = 0.5 * (lo + hi);
        fx = f(x);
        if (std::abs(fx - target) <= 1e-13 * target || hi - lo <= 4e-16) {
            break;
        }
        if (fx > target) {
            lo = x;
        } else {
            hi = x;
        }
    }
    if (!(std::abs(fx - target) <= 1e-6)) {
        throw NumericalError(std::string(what) + ": bisection did not converge (ENBW " + std::to_string(fx) +
                             " vs target " + std::to_string(target) + ")");
    }
    return x;
}

void check_target(double target_enbw)
{
    if (!(target_enbw > 1.0) || !std::isfinite(target_enbw)) {
        throw ValidationError("target_enbw", "must exceed 1 (only the top hat reaches ENBW = 1)");
    }
}

std::vector<double> unpadded_dc_curve(const SampledWindow& w, const Spectrum& total)
{
    const auto unpadded = compute_spectrum(w, 1);
    const detail::LocalCubic interpolant(unpadded.values);
    std::vector<double> dc(total.size());
    for (std::size_t k = 0; k < dc.size(); ++k) {
        dc[k] = interpolant(static_cast<double>(k) / total.pad);
    }
    return dc;
}

double interpolate_db(const std::vector<Peak>& peaks, double tf)
{
    const auto upper = std::lower_bound(peaks.begin(), peaks.end(), tf,
                                        [](const Peak& p, double f) { return p.tf < f; });
    if (upper == peaks.begin()) {
        return amplitude_to_db(upper->amplitude);
    }
    if (upper == peaks.end()) {
        return amplitude_to_db(peaks.back().amplitude);
    }
    const auto lower = upper - 1;
    const double t = (tf - lower->tf) / (upper->tf - lower->tf);
    return (1.0 - t) * amplitude_to_db(lower->amplitude) + t * amplitude_to_db(upper->amplitude);
}

} // namespace

double solve_warp_for_enbw(double alpha, double target_enbw, int n)
{
    check_target(target_enbw);
    WindowSpec::hyperbolic(alpha, 0.0).validate();
    const auto enbw_at = [alpha, n](double s) { return enbw(sample_window(WindowSpec::hyperbolic(alpha, s), n)); };

    // ENBW falls as s rises toward the top hat.
    const double widest = enbw_at(kMaxWarp);
    const double narrowest = enbw_at(-kMaxWarp);
    if (target_enbw < widest || target_enbw > narrowest) {
        throw ValidationError("target_enbw", "ENBW " + std::to_string(target_enbw) + " outside the reachable range [" +
                                                 std::to_string(widest) + ", " + std::to_string(narrowest) +
                                                 "] for this alpha and n");
    }
    return bisect_decreasing(enbw_at, -kMaxWarp, kMaxWarp, target_enbw, "solve_warp_for_enbw");
}

double solve_planck_epsilon_for_enbw(double target_enbw, int n)
{
    check_target(target_enbw);
    constexpr double lo = 0.001;
    constexpr double hi = 0.5;
    // ENBW rises with epsilon; negate so the shared bisection sees a decreasing function.
    const auto neg_enbw = [n](double eps) { return -enbw(sample_window(WindowSpec::planck(eps), n)); };

    double previous = -neg_enbw(lo);
    for (int i = 1; i <= 10; ++i) {
        const double current = -neg_enbw(lo + (hi - lo) * i / 10.0);
        if (!(current > previous)) {
            throw NumericalError("Planck ENBW is not monotone in epsilon at this n");
        }
        previous = current;
    }
    const double smallest = -neg_enbw(lo);
    const double largest = -neg_enbw(hi);
    if (target_enbw < smallest || target_enbw > largest) {
        throw ValidationError("target_enbw", "ENBW " + std::to_string(target_enbw) +
                                                 " outside the Planck window's reachable range [" +
                                                 std::to_string(smallest) + ", " + std::to_string(largest) + "]");
    }
    return bisect_decreasing(neg_enbw, lo, hi, -target_enbw, "solve_planck_epsilon_for_enbw");
}

double perturbation_delta_w(double alpha, double warp, double tau)
{
    if (!(alpha >= 1.0) || alpha != std::floor(alpha) || alpha > kMaxAlpha) {
        throw ValidationError("alpha", "perturbation formula requires an integer exponent in [1, 64]");
    }
    if (!(tau >= 0.0 && tau <= 1.0)) {
        throw ValidationError("tau", "must lie in [0, 1]");
    }
    const int a = static_cast<int>(alpha);
    constexpr double pi = std::numbers::pi;

    double sum = 0.0;
    double binom = 1.0; // C(2a, k)
    for (int k = 0; k < a; ++k) {
        sum += binom * static_cast<double>(a - k) / a * std::sin((a - k) * pi * tau);
        binom = binom * (2 * a - k) / (k + 1);
    }
    return std::exp2(2.0 - 2.0 * a) * pi * a * warp * tau * (1.0 - tau) * sum;
}

Spectrum Decomposition::dc_spectrum() const
{
    return Spectrum::from_amplitudes(total.n, total.pad, dc);
}

Spectrum Decomposition::residual_spectrum() const
{
    return Spectrum::from_amplitudes(total.n, total.pad, residual);
}

Decomposition decompose_against(Spectrum total, const SampledWindow& w)
{
    if (total.pad < 4) {
        throw ValidationError("pad", "decomposition needs a zero-pad factor of at least 4");
    }
    if (total.n != w.n()) {
        throw ValidationError("n", "spectrum and window sample counts differ");
    }
    Decomposition out;
    out.dc = unpadded_dc_curve(w, total);
    out.residual.resize(total.size());
    for (std::size_t k = 0; k < total.size(); ++k) {
        out.residual[k] = total.values[k] - out.dc[k];
    }
    out.total = std::move(total);
    return out;
}

Decomposition decompose(const SampledWindow& w, int pad)
{
    if (pad < 4) {
        throw ValidationError("pad", "decomposition needs a zero-pad factor of at least 4");
    }
    return decompose_against(compute_spectrum(w, pad), w);
}

std::optional<double> dc_dominance_onset(const Spectrum& total)
{
    const auto f0 = first_zero_crossing(total);
    if (!f0) {
        return 0.0;
    }
    const auto pad = static_cast<std::size_t>(total.pad);
    const auto cycles = (total.size() - 1) / pad;
    for (auto m = static_cast<std::size_t>(std::ceil(*f0)); m + 3 <= cycles; ++m) {
        int last_sign = 0;
        bool changed = false;
        for (std::size_t k = m * pad; k <= (m + 3) * pad; ++k) {
            const double v = total.values[k];
            if (std::abs(v) < kSignificantAmplitude) {
                continue;
            }
            const int sign = v > 0.0 ? 1 : -1;
            if (last_sign != 0 && sign != last_sign) {
                changed = true;
                break;
            }
            last_sign = sign;
        }
        if (!changed) {
            return static_cast<double>(m);
        }
    }
    return std::nullopt;
}

RolloffSource rolloff_source_for(const Spectrum& total, double f_center)
{
    const auto onset = dc_dominance_onset(total);
    return onset && *onset < f_center ? RolloffSource::Residual : RolloffSource::Total;
}

bool oscillates_in_near_field(const Spectrum& total, double alpha)
{
    const auto f0 = first_zero_crossing(total);
    return f0 && *f0 < alpha + 3.0;
}

CriticalPoint find_critical_enbw(double alpha, int n, int pad)
{
    WindowSpec::hyperbolic(alpha, 0.0).validate();
    const auto oscillates = [&](double s) {
        return oscillates_in_near_field(
            compute_spectrum(sample_window(WindowSpec::hyperbolic(alpha, s), n), pad), alpha);
    };
    const auto enbw_at = [&](double s) { return enbw(sample_window(WindowSpec::hyperbolic(alpha, s), n)); };

    double hi = kMaxWarp; // oscillatory side (wide window)
    double lo = -kMaxWarp;
    if (!oscillates(hi)) {
        throw NumericalError("find_critical_enbw: transform has no near-field zero crossing even at s = 0.9999");
    }
    if (oscillates(lo)) {
        throw NumericalError("find_critical_enbw: transform still oscillates at s = -0.9999");
    }
    for (int step = 0; step < kMaxBisections; ++step) {
        if (enbw_at(lo) - enbw_at(hi) < 1e-4) {
            break;
        }
        const double mid = 0.5 * (lo + hi);
        (oscillates(mid) ? hi : lo) = mid;
    }
    return {enbw_at(hi), hi, enbw_at(lo)};
}

EnvelopeCrossing compare_envelopes(const Spectrum& reference, const Spectrum& other, double start_tf,
                                   int persistence)
{
    const auto ref_peaks = local_maxima(reference, reference.bin(start_tf), reference.size() - 1);
    const auto other_peaks = local_maxima(other, other.bin(start_tf), other.size() - 1);
    if (ref_peaks.empty() || other_peaks.size() < 2) {
        throw NumericalError("compare_envelopes: not enough envelope maxima beyond Tf = " + std::to_string(start_tf));
    }

    double max_advantage = 0.0;
    int run = 0;
    for (std::size_t i = 0; i < ref_peaks.size(); ++i) {
        const double ref_db = amplitude_to_db(ref_peaks[i].amplitude);
        const double other_db = interpolate_db(other_peaks, ref_peaks[i].tf);
        if (other_db <= ref_db) {
            if (++run == persistence) {
                const std::size_t first = i + 1 - static_cast<std::size_t>(persistence);
                return {ref_peaks[first].tf, max_advantage};
            }
        } else {
            run = 0;
            max_advantage = std::max(max_advantage, other_db - ref_db);
        }
    }
    throw NumericalError("compare_envelopes: envelopes do not cross within the frequency grid");
}

CrossoverResult crossover_vs_planck(double alpha, double target_enbw, int n, int pad)
{
    const double eps = solve_planck_epsilon_for_enbw(target_enbw, n);
    const double warp = solve_warp_for_enbw(alpha, target_enbw, n);

    const auto hyp = sample_window(WindowSpec::hyperbolic(alpha, warp), n);
    const auto parts = decompose(hyp, pad);
    const auto planck = compute_spectrum(sample_window(WindowSpec::planck(eps), n), pad);

    const RolloffSource source = rolloff_source_for(parts.total);
    const Spectrum curve = source == RolloffSource::Residual ? parts.residual_spectrum() : parts.total;

    double start = 1.0;
    if (const auto f0 = first_zero_crossing(planck)) {
        start = std::max(start, *f0);
    }
    if (const auto f0 = first_zero_crossing(parts.total)) {
        start = std::max(start, *f0);
    }
    const auto crossing = compare_envelopes(curve, planck, start);
    return {target_enbw, alpha, warp, eps, crossing.crossover_tf, crossing.max_advantage_db, source};
}

namespace {

std::vector<double> tone_signal(const SampledWindow& w, double tone_tf, double rel_amplitude)
{
    const int n = w.n();
    if (!(tone_tf > 0.0 && tone_tf < n / 2.0)) {
        throw ValidationError("tone_tf", "tone frequency must lie strictly between 0 and n/2");
    }
    if (!(rel_amplitude >= 0.0) || !std::isfinite(rel_amplitude)) {
        throw ValidationError("rel_amplitude", "must be a finite non-negative number");
    }
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double t = j <= n / 2 ? j : j - n;
        const double phase = 2.0 * std::numbers::pi * tone_tf * t / n;
        x[j] = w[j] * (1.0 + 2.0 * rel_amplitude * std::cos(phase));
    }
    return x;
}

} // namespace

Spectrum tone_demo(const WindowSpec& window, double tone_tf, double rel_amplitude, int n, int pad)
{
    const auto w = sample_window(window, n);
    return compute_spectrum(tone_signal(w, tone_tf, rel_amplitude), pad);
}

Decomposition tone_demo_decomposed(const WindowSpec& window, double tone_tf, double rel_amplitude, int n, int pad)
{
    const auto w = sample_window(window, n);
    return decompose_against(compute_spectrum(tone_signal(w, tone_tf, rel_amplitude), pad), w);
}

WindowMetrics evaluate_metrics(const WindowSpec& spec, int n, int pad, double f_center)
{
    const auto w = sample_window(spec, n);
    WindowMetrics m;
    m.enbw = enbw(w);

    const auto total = compute_spectrum(w, pad);
    m.sidelobe_db = max_sidelobe_db(total);

    if (spec.family == WindowFamily::Hyperbolic && pad >= 4) {
        m.rolloff_source = rolloff_source_for(total, f_center);
    }
    try {
        if (m.rolloff_source == RolloffSource::Residual) {
            m.rolloff = estimate_rolloff(decompose_against(total, w).residual_spectrum(), f_center).slope;
        } else {
            m.rolloff = estimate_rolloff(total, f_center).slope;
        }
    } catch (const NumericalError&) {
        m.rolloff.reset();
    }
    return m;
}

} // namespace hypwin
