#pragma once

#include <vector>

#include "ssf/errors.hpp"

namespace ssf {

/// Uniform sample grid start, start+step, ... Includes `end` when
/// (end - start)/step is integral within 1e-9.
struct GridRange {
    double start{};
    double end{};
    double step{};

    std::vector<double> points() const {
        if (!(step > 0.0)) throw StepError("step must be positive");
        if (end < start) throw EmptyRangeError("range end precedes start");
        const long long count = static_cast<long long>((end - start) / step + 1e-9);
        std::vector<double> result;
        result.reserve(static_cast<std::size_t>(count) + 1);
        for (long long k = 0; k <= count; ++k) result.push_back(start + static_cast<double>(k) * step);
        return result;
    }
};

} // namespace ssf
