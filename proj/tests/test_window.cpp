#include "oracles.hpp"

#include "hypwin/error.hpp"
#include "hypwin/window.hpp"

#include "doctest.h"

#include <cmath>
#include <vector>

using namespace hypwin;

namespace {

std::vector<WindowSpec> all_defaults()
{
    return {WindowSpec::top_hat(),
            WindowSpec::hann(1.0),
            WindowSpec::hann(2.5),
            WindowSpec::hyperbolic(4.0, 0.606),
            WindowSpec::tukey(0.0),
            WindowSpec::tukey(0.5),
            WindowSpec::tukey(1.0),
            WindowSpec::planck(0.1),
            WindowSpec::planck(0.5),
            WindowSpec::of(WindowFamily::ValleePoussin),
            WindowSpec::of(WindowFamily::Bohman),
            WindowSpec::of(WindowFamily::Kaiser),
            WindowSpec::of(WindowFamily::Nuttall3),
            WindowSpec::of(WindowFamily::Nuttall4a),
            WindowSpec::of(WindowFamily::Nuttall4b)};
}

} // namespace

TEST_CASE("window values at fixed points")
{
    CHECK(window_value(WindowSpec::hyperbolic(1.0, 0.0), 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(window_value(WindowSpec::top_hat(), 0.9) == 1.0);
    for (double s : {-0.9999, -0.5, 0.0, 0.3, 0.9999}) {
        for (double a : {0.5, 1.0, 4.0, 64.0}) {
            CHECK(window_value(WindowSpec::hyperbolic(a, s), 1.0) == 0.0);
        }
    }
    // 0.94503473290092594196 from a 30-digit mpmath evaluation of the same composition
    const double v = window_value(WindowSpec::hyperbolic(4.0, 0.606), 0.25);
    CHECK(std::abs(v - 0.94503473290092594196) < 1e-12);
    CHECK(std::abs(v - static_cast<double>(oracle::hyperbolic_window(4, 0.606L, 0.25L))) < 1e-12);
}

TEST_CASE("hyperbolic matches the literal formula across the domain")
{
    for (double a : {1.0, 2.0, 3.5, 10.0}) {
        for (double s : {-0.9, -0.3, 0.0, 0.4, 0.95}) {
            for (int i = 0; i <= 100; ++i) {
                const double tau = i / 100.0;
                const double lib = window_value(WindowSpec::hyperbolic(a, s), tau);
                const auto ref = oracle::hyperbolic_window(a, s, tau);
                CHECK(std::abs(lib - static_cast<double>(ref)) < 1e-13);
            }
        }
    }
}

TEST_CASE("warp map")
{
    CHECK(hyperbolic_z(0.0, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(hyperbolic_z(0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-15));
    for (double s : {-0.9999, -0.2, 0.7, 0.9999}) {
        CHECK(hyperbolic_z(s, 1.0) == 1.0);
        CHECK(hyperbolic_z(s, 0.0) == 0.0);
        double prev = -1.0;
        for (int i = 0; i <= 200; ++i) {
            const double z = hyperbolic_z(s, i / 200.0);
            CHECK(z > prev);
            prev = z;
        }
    }
}

TEST_CASE("warp map preserves cross-ratios")
{
    const auto cross_ratio = [](double a, double b, double c, double d) {
        return ((c - a) * (d - b)) / ((c - b) * (d - a));
    };
    oracle::Rng rng(11);
    for (double s : {-0.9, -0.5, -0.1, 0.1, 0.5, 0.9}) {
        for (int trial = 0; trial < 20; ++trial) {
            double t[4];
            for (double& x : t) {
                x = rng.uniform(0.0, 1.0);
            }
            const double before = cross_ratio(t[0], t[1], t[2], t[3]);
            const double after = cross_ratio(hyperbolic_z(s, t[0]), hyperbolic_z(s, t[1]), hyperbolic_z(s, t[2]),
                                             hyperbolic_z(s, t[3]));
            CHECK(std::abs(after - before) <= 1e-9 * std::max(1.0, std::abs(before)));
        }
    }
}

TEST_CASE("sampling layout")
{
    const auto th = sample_window(WindowSpec::top_hat(), 8);
    for (double v : th.samples()) {
        CHECK(v == 1.0);
    }

    const auto h = sample_window(WindowSpec::hann(1.0), 4);
    REQUIRE(h.n() == 4);
    CHECK(h[0] == 1.0);
    CHECK(h[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(h[2]) < 1e-16);
    CHECK(h[3] == h[1]);

    CHECK_THROWS_AS(sample_window(WindowSpec::hann(1.0), 7), ValidationError);
    CHECK_THROWS_AS(sample_window(WindowSpec::hann(1.0), 2), ValidationError);
}

TEST_CASE("samples are symmetric, bounded, start at one and never increase")
{
    for (const auto& spec : all_defaults()) {
        CAPTURE(spec.parameter_string());
        CAPTURE(family_name(spec.family));
        for (int n : {4, 64, 4096}) {
            const auto w = sample_window(spec, n);
            CHECK(w[0] == 1.0);
            for (int j = 1; j < n / 2; ++j) {
                CHECK(w[j] == w[n - j]);
            }
            for (int j = 0; j < n; ++j) {
                CHECK(w[j] >= 0.0);
                CHECK(w[j] <= 1.0);
            }
            for (int j = 1; j <= n / 2; ++j) {
                CHECK(w[j] <= w[j - 1]);
            }
        }
    }
    for (int a = 1; a <= 10; ++a) {
        for (int si = -9; si <= 9; ++si) {
            const auto w = sample_window(WindowSpec::hyperbolic(a, si / 10.0), 512);
            for (int j = 1; j <= 256; ++j) {
                CHECK(w[j] <= w[j - 1]);
            }
        }
    }
}

TEST_CASE("hyperbolic with no warp is Hann^alpha")
{
    for (double a : {1.0, 2.0, 3.0, 4.0}) {
        const auto hyp = sample_window(WindowSpec::hyperbolic(a, 0.0), 4096);
        const auto hann = sample_window(WindowSpec::hann(a), 4096);
        for (int j = 0; j < 4096; ++j) {
            CHECK(std::abs(hyp[j] - hann[j]) <= 1e-12);
        }
    }
}

TEST_CASE("strong positive warp approaches the top hat")
{
    for (double a : {1.0, 4.0}) {
        const WindowSpec spec = WindowSpec::hyperbolic(a, 0.999);
        for (int i = 0; i <= 990; ++i) {
            CHECK(window_value(spec, i / 1000.0) > 0.95);
        }
    }
}

TEST_CASE("tapering families reach zero at the edge")
{
    for (const auto& spec : all_defaults()) {
        CAPTURE(family_name(spec.family));
        if (spec.tapers_to_zero()) {
            CHECK(std::abs(window_value(spec, 1.0)) <= 1e-15);
        } else {
            CHECK(window_value(spec, 1.0) > 0.0);
        }
    }
}

TEST_CASE("contender formulas against direct evaluation")
{
    for (double r : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        for (int i = 0; i <= 64; ++i) {
            const double tau = i / 64.0;
            CHECK(std::abs(window_value(WindowSpec::tukey(r), tau) -
                           static_cast<double>(oracle::tukey_window(r, tau))) < 1e-14);
        }
    }
    // r = 1 is the Hann, r = 0 the top hat
    for (int i = 0; i <= 64; ++i) {
        const double tau = i / 64.0;
        CHECK(window_value(WindowSpec::tukey(1.0), tau) ==
              doctest::Approx(window_value(WindowSpec::hann(1.0), tau)).epsilon(1e-14));
        if (i < 64) {
            CHECK(window_value(WindowSpec::tukey(0.0), tau) == 1.0);
        }
    }
    const double pi = std::acos(-1.0);
    for (int i = 0; i <= 64; ++i) {
        const double tau = i / 64.0;
        const double vp = tau <= 0.5 ? 1 - 6 * tau * tau * (1 - tau) : 2 * std::pow(1 - tau, 3);
        CHECK(window_value(WindowSpec::of(WindowFamily::ValleePoussin), tau) == doctest::Approx(vp).epsilon(1e-14));
        const double bohman = (1 - tau) * std::cos(pi * tau) + std::sin(pi * tau) / pi;
        CHECK(std::abs(window_value(WindowSpec::of(WindowFamily::Bohman), tau) - std::max(0.0, bohman)) < 1e-15);
    }
    // I0(3 pi) by its integral representation (1/pi) int_0^pi exp(x cos t) dt, Simpson rule
    const auto i0_integral = [pi](double x) {
        const int m = 2000;
        double acc = 0;
        for (int k = 0; k <= m; ++k) {
            const double wgt = (k == 0 || k == m) ? 1 : (k % 2 ? 4 : 2);
            acc += wgt * std::exp(x * std::cos(pi * k / m));
        }
        return acc * (pi / m) / 3 / pi;
    };
    for (double x : {0.0, 1.0, 3 * pi, 20.0}) {
        CHECK(bessel_i0(x) == doctest::Approx(i0_integral(x)).epsilon(1e-12));
    }
}

TEST_CASE("Planck taper")
{
    const WindowSpec p = WindowSpec::planck(0.2);
    // flat region: tau <= 1 - 2 eps in half-window coordinates
    CHECK(window_value(p, 0.0) == 1.0);
    CHECK(window_value(p, 0.6) == 1.0);
    CHECK(window_value(p, 1.0) == 0.0);
    // taper coordinate x = (1 - tau) / 2; midpoint x = eps / 2 gives exp(0) -> 1/2
    CHECK(window_value(p, 1.0 - 0.2) == doctest::Approx(0.5).epsilon(1e-14));
    const double x = 0.05;
    const double expected = 1.0 / (1.0 + std::exp(0.2 / x - 0.2 / (0.2 - x)));
    CHECK(window_value(p, 1.0 - 2 * x) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("zero padding layout")
{
    const auto h = sample_window(WindowSpec::hann(1.0), 4);
    const auto p1 = zero_pad(h, 1);
    REQUIRE(p1.size() == 4);
    for (int j = 0; j < 4; ++j) {
        CHECK(p1[j] == h[j]);
    }
    const auto p2 = zero_pad(h, 2);
    const std::vector<double> expected{1, 0.5, h[2], 0, 0, 0, 0, 0.5};
    REQUIRE(p2.size() == expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) {
        CHECK(p2[j] == doctest::Approx(expected[j]).epsilon(1e-15));
    }
    CHECK_THROWS_AS(zero_pad(h, 0), ValidationError);
}

TEST_CASE("parameter validation names the parameter")
{
    const auto param_of = [](const WindowSpec& spec) -> std::string {
        try {
            spec.validate();
        } catch (const ValidationError& e) {
            return e.parameter();
        }
        return "";
    };
    CHECK(param_of(WindowSpec::hyperbolic(1.0, 1.0)) == "warp");
    CHECK(param_of(WindowSpec::hyperbolic(1.0, -1.0)) == "warp");
    CHECK(param_of(WindowSpec::hyperbolic(0.0, 0.0)) == "alpha");
    CHECK(param_of(WindowSpec::hyperbolic(65.0, 0.0)) == "alpha");
    CHECK(param_of(WindowSpec::hann(-1.0)) == "alpha");
    CHECK(param_of(WindowSpec::tukey(1.5)) == "tukey_fraction");
    CHECK(param_of(WindowSpec::planck(0.0)) == "planck_epsilon");
    CHECK(param_of(WindowSpec::planck(0.6)) == "planck_epsilon");
    CHECK(param_of(WindowSpec::hyperbolic(1.0, 0.9999)).empty());

    // inapplicable fields are ignored
    WindowSpec hann = WindowSpec::hann(1.0);
    hann.warp = 5.0;
    CHECK(param_of(hann).empty());

    CHECK_THROWS_AS(window_value(WindowSpec::hann(1.0), 1.5), ValidationError);
    CHECK_THROWS_AS(parse_family("gaussian"), ValidationError);
    CHECK(parse_family("nuttall4b") == WindowFamily::Nuttall4b);
    for (const auto& spec : all_defaults()) {
        CHECK(parse_family(family_name(spec.family)) == spec.family);
    }
    CHECK(applicable_parameters(WindowFamily::Hyperbolic) == std::vector<std::string_view>{"alpha", "warp"});
    CHECK(applicable_parameters(WindowFamily::Kaiser).empty());
}
