#pragma once

#include <span>
#include <vector>

namespace hypwin::detail {

/// Catmull-Rom cubic through (i, y_i) on a unit-spaced grid. Each segment
/// depends only on its four nearest knots; the data are extended evenly past
/// both ends (y_{-i} = y_i, y_{m-1+i} = y_{m-1-i}), as a real even transform is.
/// Returns y_i exactly at the knots and reproduces quadratics.
class LocalCubic
{
public:
    explicit LocalCubic(std::span<const double> y) : y_(y.begin(), y.end()) {}

    double operator()(double x) const;

private:
    double knot(long i) const;

    std::vector<double> y_;
};

} // namespace hypwin::detail
