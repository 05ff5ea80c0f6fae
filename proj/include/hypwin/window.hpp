#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypwin {

enum class WindowFamily
{
    TopHat,
    HannPow,
    Hyperbolic,
    Tukey,
    Planck,
    ValleePoussin,
    Bohman,
    Kaiser,
    Nuttall3,
    Nuttall4a,
    Nuttall4b,
};

/// Canonical lower-case name of a family ("tophat", "hann", "hyperbolic", ...).
std::string_view family_name(WindowFamily family);

/// Inverse of family_name(); throws ValidationError("window") on unknown names.
WindowFamily parse_family(std::string_view name);

/// Names of the parameters that affect `family` ("alpha", "warp", "tukey_fraction",
/// "planck_epsilon"). Parameters not listed are ignored for that family.
std::vector<std::string_view> applicable_parameters(WindowFamily family);

/// A window family plus its parameters.
///
/// All families are defined on the normalized half-interval coordinate
/// tau = 2|t|/T in [0, 1], with w(0) = 1. Fields that do not apply to the
/// chosen family are ignored.
struct WindowSpec
{
    WindowFamily family = WindowFamily::HannPow;
    double alpha = 1.0;          // HannPow, Hyperbolic
    double warp = 0.0;           // Hyperbolic, |s| <= kMaxWarp
    double tukey_fraction = 0.5; // Tukey: fraction of the half-window occupied by the cosine taper
    double planck_epsilon = 0.1; // Planck: taper width as a fraction of the full window length

    static WindowSpec top_hat() { return {WindowFamily::TopHat}; }
    static WindowSpec hann(double alpha = 1.0) { return {WindowFamily::HannPow, alpha}; }
    static WindowSpec hyperbolic(double alpha, double warp)
    {
        return {WindowFamily::Hyperbolic, alpha, warp};
    }
    static WindowSpec tukey(double fraction)
    {
        WindowSpec spec{WindowFamily::Tukey};
        spec.tukey_fraction = fraction;
        return spec;
    }
    static WindowSpec planck(double epsilon)
    {
        WindowSpec spec{WindowFamily::Planck};
        spec.planck_epsilon = epsilon;
        return spec;
    }
    static WindowSpec of(WindowFamily family) { return {family}; }

    /// Throws ValidationError naming the first out-of-range applicable parameter.
    void validate() const;

    /// True when w(tau = 1) = 0 (everything except the top hat, a zero-width
    /// Tukey taper, and the Kaiser pedestal).
    bool tapers_to_zero() const;

    /// Short human-readable parameter list, e.g. "alpha=4;warp=0.606".
    std::string parameter_string() const;
};

inline constexpr double kMaxWarp = 0.9999;
inline constexpr double kMaxAlpha = 64.0;

/// Modified Bessel function I0 by power series, stopped once a term drops
/// below 1e-17 of the running sum.
double bessel_i0(double x);

/// Hyperbolic warp map z(s, tau) = tau (1 - s) / (1 - s (2 tau - 1)).
double hyperbolic_z(double warp, double tau);

/// Continuous window value at normalized coordinate tau in [0, 1].
double window_value(const WindowSpec& spec, double tau);

/// N symmetric samples in DFT storage order: w_j = w(tau = 2j/N) for
/// j <= N/2 and w_j = w_{N-j} above.
class SampledWindow
{
public:
    int n() const noexcept { return static_cast<int>(samples_.size()); }
    std::span<const double> samples() const noexcept { return samples_; }
    const WindowSpec& spec() const noexcept { return spec_; }
    double operator[](std::size_t j) const { return samples_[j]; }

private:
    friend SampledWindow sample_window(const WindowSpec& spec, int n);
    SampledWindow(WindowSpec spec, std::vector<double> samples)
        : spec_(spec), samples_(std::move(samples))
    {
    }

    WindowSpec spec_;
    std::vector<double> samples_;
};

/// Requires n even and n >= 4.
SampledWindow sample_window(const WindowSpec& spec, int n);

/// Zero-padded copy of length a*N: the non-negative-time half stays at the
/// front, the negative-time half moves to the end, zeros in between.
std::vector<double> zero_pad(std::span<const double> samples, int factor);
inline std::vector<double> zero_pad(const SampledWindow& w, int factor)
{
    return zero_pad(w.samples(), factor);
}

} // namespace hypwin
