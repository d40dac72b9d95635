#pragma once

#include <vector>

namespace ncp {

struct TrajectorySample {
    double t;
    double r;
    double theta;
    double phi;  // unwrapped (monotone along the orbit)
    double x, y, z;
};

/// Ordered samples of one bound orbit; immutable result value.
struct Trajectory {
    std::vector<TrajectorySample> samples;
};

}  // namespace ncp
