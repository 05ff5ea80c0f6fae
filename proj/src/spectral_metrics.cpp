#include "hypwin/spectral_metrics.hpp"

#include "hypwin/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hypwin {

namespace {

struct Line
{
    double intercept;
    double slope;
    double at(double x) const { return intercept + slope * x; }
};

Line least_squares(std::span<const double> x, std::span<const double> y, std::span<const char> use)
{
    double n = 0.0, sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (use[i]) {
            n += 1.0;
            sx += x[i];
            sy += y[i];
        }
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (use[i]) {
            sxx += (x[i] - mx) * (x[i] - mx);
            sxy += (x[i] - mx) * (y[i] - my);
        }
    }
    const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
    return {my - slope * mx, slope};
}

double median(std::vector<double> v)
{
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (v.size() % 2 == 1) {
        return *mid;
    }
    const double upper = *mid;
    const double lower = *std::max_element(v.begin(), mid);
    return 0.5 * (lower + upper);
}

} // namespace

std::size_t Spectrum::bin(double frequency) const noexcept
{
    if (values.empty() || !(frequency > 0.0)) {
        return 0;
    }
    const double k = std::round(frequency * pad);
    return std::min(values.size() - 1, static_cast<std::size_t>(k));
}

Spectrum Spectrum::from_amplitudes(int n, int pad, std::vector<double> values, double imag_residue)
{
    Spectrum sp;
    sp.n = n;
    sp.pad = pad;
    sp.imag_residue = imag_residue;
    sp.power_db.resize(values.size());
    std::transform(values.begin(), values.end(), sp.power_db.begin(), amplitude_to_db);
    sp.values = std::move(values);
    return sp;
}

double amplitude_to_db(double amplitude) noexcept
{
    const double a = std::abs(amplitude);
    if (!(a > 0.0)) {
        return kDbFloor;
    }
    return std::max(kDbFloor, 20.0 * std::log10(a));
}

const char* to_string(RolloffSource source) noexcept
{
    return source == RolloffSource::Residual ? "residual" : "total";
}

double enbw(std::span<const double> samples)
{
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const double w : samples) {
        sum += w;
        sum_sq += w * w;
    }
    if (sum == 0.0) {
        throw NumericalError("ENBW undefined for an all-zero window");
    }
    return static_cast<double>(samples.size()) * sum_sq / (sum * sum);
}

Spectrum compute_spectrum(std::span<const double> samples, int pad, dft::Execution exec)
{
    if (pad < 1) {
        throw ValidationError("pad", "zero-pad factor must be at least 1");
    }
    const auto padded = zero_pad(samples, pad);
    const auto transform = dft::forward(padded, exec);

    const double dc = transform[0].real();
    if (dc == 0.0) {
        throw NumericalError("transform has zero DC value; cannot normalize");
    }
    const std::size_t bins = padded.size() / 2 + 1;
    std::vector<double> values(bins);
    double imag = 0.0;
    for (std::size_t k = 0; k < bins; ++k) {
        values[k] = transform[k].real() / dc;
        imag = std::max(imag, std::abs(transform[k].imag()));
    }
    auto sp = Spectrum::from_amplitudes(static_cast<int>(samples.size()), pad, std::move(values),
                                        imag / std::abs(dc));
    for (auto& p : sp.power_db) {
        p = std::min(p, 0.0);
    }
    return sp;
}

std::vector<Peak> local_maxima(const Spectrum& sp, std::size_t first, std::size_t last)
{
    std::vector<Peak> peaks;
    if (sp.size() < 3) {
        return peaks;
    }
    first = std::max<std::size_t>(first, 1);
    last = std::min(last, sp.size() - 2);
    const auto mag = [&](std::size_t k) { return std::abs(sp.values[k]); };

    for (std::size_t k = first; k <= last; ++k) {
        const double a = mag(k);
        if (!(a > mag(k - 1))) {
            continue;
        }
        std::size_t right = k;
        while (right + 1 < sp.size() && mag(right + 1) == a) {
            ++right;
        }
        if (right + 1 < sp.size() && mag(right + 1) < a) {
            peaks.push_back({k, sp.tf(k), a});
        }
        k = right;
    }
    return peaks;
}

std::optional<double> first_zero_crossing(const Spectrum& sp)
{
    std::size_t last = sp.size();
    for (std::size_t k = 0; k < sp.size(); ++k) {
        const double v = sp.values[k];
        if (std::abs(v) < kSignificantAmplitude) {
            continue;
        }
        if (last != sp.size() && (v > 0.0) != (sp.values[last] > 0.0)) {
            const double a = sp.values[last];
            const double fraction = a / (a - v);
            return sp.tf(last) + fraction * (sp.tf(k) - sp.tf(last));
        }
        last = k;
    }
    return std::nullopt;
}

std::optional<double> max_sidelobe_db(const Spectrum& sp)
{
    const auto f0 = first_zero_crossing(sp);
    if (!f0) {
        return std::nullopt;
    }
    const auto start = static_cast<std::size_t>(std::ceil(*f0 * sp.pad));
    const auto peaks = local_maxima(sp, start, sp.size() - 1);
    if (peaks.empty()) {
        return std::nullopt;
    }
    const auto highest = std::max_element(peaks.begin(), peaks.end(),
                                          [](const Peak& a, const Peak& b) { return a.amplitude < b.amplitude; });
    return amplitude_to_db(highest->amplitude);
}

RolloffEstimate estimate_rolloff(const Spectrum& sp, double f_center, double half_span_octaves)
{
    if (!(f_center > 0.0) || !(half_span_octaves > 0.0)) {
        throw ValidationError("f_center", "centre frequency and span must be positive");
    }
    const double scale = std::exp2(half_span_octaves);
    const auto lo = static_cast<std::size_t>(std::ceil(f_center / scale * sp.pad));
    const auto hi = static_cast<std::size_t>(std::floor(f_center * scale * sp.pad));
    if (lo < 1 || hi + 1 >= sp.size()) {
        throw ValidationError("f_center", "roll-off span [" + std::to_string(f_center / scale) + ", " +
                                              std::to_string(f_center * scale) + "] leaves the frequency grid");
    }

    RolloffEstimate est;
    const auto peaks = local_maxima(sp, lo, hi);
    est.oscillatory = peaks.size() >= 6;

    std::vector<double> x;
    std::vector<double> y;
    const auto add_point = [&](double tf, double amplitude) {
        if (amplitude_to_db(amplitude) < kNoiseGuardDb) {
            throw NumericalError("roll-off span reaches the numerical noise floor near Tf = " +
                                 std::to_string(tf) + "; choose a lower centre frequency");
        }
        x.push_back(std::log10(tf));
        y.push_back(std::log10(amplitude));
    };

    if (est.oscillatory) {
        for (const auto& p : peaks) {
            add_point(p.tf, p.amplitude);
        }
    } else {
        const auto pad = static_cast<std::size_t>(sp.pad);
        for (std::size_t k = (lo + pad - 1) / pad * pad; k <= hi; k += pad) {
            add_point(sp.tf(k), std::abs(sp.values[k]));
        }
    }

    est.points_total = static_cast<int>(x.size());
    if (x.size() < 6) {
        throw NumericalError("only " + std::to_string(x.size()) +
                             " envelope peaks in the roll-off span; increase the pad factor or the span");
    }

    std::vector<char> keep(x.size(), 1);
    Line line = least_squares(x, y, keep);
    for (est.iterations = 1; est.iterations <= 10; ++est.iterations) {
        double top = -1e300;
        for (std::size_t i = 0; i < x.size(); ++i) {
            top = std::max(top, 20.0 * (y[i] - line.at(x[i])));
        }
        std::vector<char> next(x.size());
        std::size_t kept = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            next[i] = 20.0 * (y[i] - line.at(x[i])) >= top - 3.0;
            kept += next[i] ? 1 : 0;
        }
        if (kept < 2) {
            break;
        }
        line = least_squares(x, y, next);
        const bool stable = next == keep;
        keep = std::move(next);
        if (stable) {
            break;
        }
    }
    est.iterations = std::min(est.iterations, 10);
    est.points_used = static_cast<int>(std::count(keep.begin(), keep.end(), 1));
    est.slope = line.slope;
    return est;
}

std::optional<NoiseFloor> noise_floor_db(const Spectrum& sp)
{
    if (sp.size() < 32) {
        return std::nullopt;
    }
    const std::size_t last = sp.size() - 1;
    const std::size_t first = last / 2;
    const double f_top = sp.tf(last);

    // Eight logarithmic sub-bands across the top octave; a flat floor shows
    // no trend in their medians.
    constexpr int bands = 8;
    std::vector<double> band_x;
    std::vector<double> band_y;
    for (int b = 0; b < bands; ++b) {
        const double f_lo = 0.5 * f_top * std::exp2(static_cast<double>(b) / bands);
        const double f_hi = 0.5 * f_top * std::exp2(static_cast<double>(b + 1) / bands);
        std::vector<double> band;
        for (std::size_t k = sp.bin(f_lo); k <= sp.bin(f_hi) && k <= last; ++k) {
            band.push_back(sp.power_db[k]);
        }
        if (band.empty()) {
            continue;
        }
        band_x.push_back(std::log10(std::sqrt(f_lo * f_hi)));
        band_y.push_back(median(std::move(band)));
    }
    if (band_x.size() < 3) {
        return std::nullopt;
    }
    std::vector<char> all(band_x.size(), 1);
    const double amplitude_slope = least_squares(band_x, band_y, all).slope / 20.0;
    if (std::abs(amplitude_slope) >= 0.5) {
        return std::nullopt;
    }

    // The floor level is read off its envelope, as on a plotted spectrum.
    std::vector<double> envelope;
    for (const auto& p : local_maxima(sp, first, last)) {
        envelope.push_back(amplitude_to_db(p.amplitude));
    }
    if (envelope.empty()) {
        return std::nullopt;
    }
    const double level = median(std::move(envelope));

    // Onset: first whole cycle whose maximum power is within 10 dB of the floor.
    double onset = f_top;
    const auto pad = static_cast<std::size_t>(sp.pad);
    for (std::size_t start = pad; start + pad <= sp.size(); start += pad) {
        const double cell_max =
            *std::max_element(sp.power_db.begin() + static_cast<std::ptrdiff_t>(start),
                              sp.power_db.begin() + static_cast<std::ptrdiff_t>(start + pad));
        if (cell_max <= level + 10.0) {
            onset = sp.tf(start);
            break;
        }
    }
    return NoiseFloor{level, onset};
}

} // namespace hypwin
