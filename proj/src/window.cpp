#include "hypwin/window.hpp"

#include "hypwin/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hypwin {

namespace {

constexpr double pi = std::numbers::pi;

struct FamilyEntry
{
    WindowFamily family;
    std::string_view name;
};

constexpr std::array kFamilies{
    FamilyEntry{WindowFamily::TopHat, "tophat"},
    FamilyEntry{WindowFamily::HannPow, "hann"},
    FamilyEntry{WindowFamily::Hyperbolic, "hyperbolic"},
    FamilyEntry{WindowFamily::Tukey, "tukey"},
    FamilyEntry{WindowFamily::Planck, "planck"},
    FamilyEntry{WindowFamily::ValleePoussin, "vallee-poussin"},
    FamilyEntry{WindowFamily::Bohman, "bohman"},
    FamilyEntry{WindowFamily::Kaiser, "kaiser"},
    FamilyEntry{WindowFamily::Nuttall3, "nuttall3"},
    FamilyEntry{WindowFamily::Nuttall4a, "nuttall4a"},
    FamilyEntry{WindowFamily::Nuttall4b, "nuttall4b"},
};

// Nuttall (1981) cosine-sum coefficients, centred form
// w = a0 + a1 cos(pi tau) + a2 cos(2 pi tau) + a3 cos(3 pi tau).
constexpr std::array<double, 4> kNuttall3{0.40897, 0.5, 0.09103, 0.0};                 // sidelobe -64.2 dB
constexpr std::array<double, 4> kNuttall4a{0.338946, 0.481973, 0.161054, 0.018027};    // -82.6 dB
constexpr std::array<double, 4> kNuttall4b{0.355768, 0.487396, 0.144232, 0.012604};    // -93.3 dB

double cosine_sum(const std::array<double, 4>& a, double tau)
{
    const double sum = a[0] + a[1] + a[2] + a[3];
    const double v = a[0] + a[1] * std::cos(pi * tau) + a[2] * std::cos(2.0 * pi * tau) +
                     a[3] * std::cos(3.0 * pi * tau);
    return v / sum;
}

// cos(pi x / 2) written as sin(pi (1 - x) / 2) so the value is exactly zero
// at x = 1 and keeps full relative precision next to the edge.
double half_cos(double x) { return std::sin(0.5 * pi * (1.0 - x)); }

double planck_value(double epsilon, double tau)
{
    // Taper coordinate measured from the outer edge, in units of the full window length.
    const double x = 0.5 * (1.0 - tau);
    if (x >= epsilon) {
        return 1.0;
    }
    if (x <= 0.0) {
        return 0.0;
    }
    const double exponent = epsilon / x - epsilon / (epsilon - x);
    return 1.0 / (1.0 + std::exp(exponent));
}

} // namespace

std::string_view family_name(WindowFamily family)
{
    for (const auto& entry : kFamilies) {
        if (entry.family == family) {
            return entry.name;
        }
    }
    return "unknown";
}

WindowFamily parse_family(std::string_view name)
{
    for (const auto& entry : kFamilies) {
        if (entry.name == name) {
            return entry.family;
        }
    }
    std::string known;
    for (const auto& entry : kFamilies) {
        known += known.empty() ? "" : ", ";
        known += entry.name;
    }
    throw ValidationError("window", "unknown window family '" + std::string(name) +
                                        "' (expected one of: " + known + ")");
}

std::vector<std::string_view> applicable_parameters(WindowFamily family)
{
    switch (family) {
    case WindowFamily::HannPow:
        return {"alpha"};
    case WindowFamily::Hyperbolic:
        return {"alpha", "warp"};
    case WindowFamily::Tukey:
        return {"tukey_fraction"};
    case WindowFamily::Planck:
        return {"planck_epsilon"};
    default:
        return {};
    }
}

void WindowSpec::validate() const
{
    const auto check_alpha = [this] {
        if (!(alpha > 0.0) || alpha > kMaxAlpha) {
            throw ValidationError("alpha", "must lie in (0, 64]");
        }
    };
    switch (family) {
    case WindowFamily::HannPow:
        check_alpha();
        break;
    case WindowFamily::Hyperbolic:
        check_alpha();
        if (!(std::abs(warp) <= kMaxWarp)) {
            throw ValidationError("warp", "must satisfy |s| <= 0.9999 (strictly inside (-1, 1))");
        }
        break;
    case WindowFamily::Tukey:
        if (!(tukey_fraction >= 0.0 && tukey_fraction <= 1.0)) {
            throw ValidationError("tukey_fraction", "must lie in [0, 1]");
        }
        break;
    case WindowFamily::Planck:
        if (!(planck_epsilon > 0.0 && planck_epsilon <= 0.5)) {
            throw ValidationError("planck_epsilon", "must lie in (0, 0.5]");
        }
        break;
    default:
        break;
    }
}

bool WindowSpec::tapers_to_zero() const
{
    switch (family) {
    case WindowFamily::TopHat:
    case WindowFamily::Kaiser:
        return false;
    case WindowFamily::Tukey:
        return tukey_fraction > 0.0;
    default:
        return true;
    }
}

std::string WindowSpec::parameter_string() const
{
    std::ostringstream out;
    out.precision(9);
    switch (family) {
    case WindowFamily::HannPow:
        out << "alpha=" << alpha;
        break;
    case WindowFamily::Hyperbolic:
        out << "alpha=" << alpha << ";warp=" << warp;
        break;
    case WindowFamily::Tukey:
        out << "tukey_fraction=" << tukey_fraction;
        break;
    case WindowFamily::Planck:
        out << "planck_epsilon=" << planck_epsilon;
        break;
    default:
        break;
    }
    return out.str();
}

double bessel_i0(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return sum;
}

double hyperbolic_z(double warp, double tau)
{
    return tau * (1.0 - warp) / (1.0 - warp * (2.0 * tau - 1.0));
}

double window_value(const WindowSpec& spec, double tau)
{
    spec.validate();
    if (!(tau >= 0.0 && tau <= 1.0)) {
        throw ValidationError("tau", "must lie in [0, 1]");
    }

    switch (spec.family) {
    case WindowFamily::TopHat:
        return 1.0;
    case WindowFamily::HannPow:
        return std::pow(half_cos(tau), 2.0 * spec.alpha);
    case WindowFamily::Hyperbolic:
        return std::pow(half_cos(hyperbolic_z(spec.warp, tau)), 2.0 * spec.alpha);
    case WindowFamily::Tukey: {
        const double r = spec.tukey_fraction;
        if (tau <= 1.0 - r) {
            return 1.0;
        }
        // cos^2((pi/2)(tau - 1 + r)/r), in the edge-exact form
        const double c = std::sin(0.5 * pi * (1.0 - tau) / r);
        return c * c;
    }
    case WindowFamily::Planck:
        return planck_value(spec.planck_epsilon, tau);
    case WindowFamily::ValleePoussin:
        if (tau <= 0.5) {
            return 1.0 - 6.0 * tau * tau * (1.0 - tau);
        }
        return 2.0 * std::pow(1.0 - tau, 3);
    case WindowFamily::Bohman:
        if (tau >= 1.0) {
            return 0.0;
        }
        return std::max(0.0, (1.0 - tau) * std::cos(pi * tau) + std::sin(pi * tau) / pi);
    case WindowFamily::Kaiser: {
        static const double norm = bessel_i0(3.0 * pi);
        return bessel_i0(3.0 * pi * std::sqrt(std::max(0.0, 1.0 - tau * tau))) / norm;
    }
    case WindowFamily::Nuttall3:
        return tau >= 1.0 ? 0.0 : cosine_sum(kNuttall3, tau);
    case WindowFamily::Nuttall4a:
        return tau >= 1.0 ? 0.0 : cosine_sum(kNuttall4a, tau);
    case WindowFamily::Nuttall4b:
        return tau >= 1.0 ? 0.0 : cosine_sum(kNuttall4b, tau);
    }
    return 0.0;
}

SampledWindow sample_window(const WindowSpec& spec, int n)
{
    if (n < 4 || n % 2 != 0) {
        throw ValidationError("n", "sample count must be even and at least 4");
    }
    spec.validate();

    const int half = n / 2;
    std::vector<double> samples(static_cast<std::size_t>(n));
    for (int j = 0; j <= half; ++j) {
        const double tau = 2.0 * j / n;
        samples[j] = std::clamp(window_value(spec, tau), 0.0, 1.0);
    }
    for (int j = half + 1; j < n; ++j) {
        samples[j] = samples[n - j];
    }
    return SampledWindow(spec, std::move(samples));
}

std::vector<double> zero_pad(std::span<const double> samples, int factor)
{
    const auto n = samples.size();
    if (factor < 1) {
        throw ValidationError("pad", "zero-pad factor must be at least 1");
    }
    if (n < 2 || n % 2 != 0) {
        throw ValidationError("n", "sample count must be even");
    }
    const std::size_t m = n * static_cast<std::size_t>(factor);
    const std::size_t half = n / 2;
    std::vector<double> padded(m, 0.0);
    std::copy_n(samples.begin(), half + 1, padded.begin());
    // w'_j = w_{j-M+N} for j in {M+1-N/2, ..., M-1}
    for (std::size_t j = m + 1 - half; j < m; ++j) {
        padded[j] = samples[j + n - m];
    }
    return padded;
}

} // namespace hypwin
