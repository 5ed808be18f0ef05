#pragma once

#include <vector>

namespace ozf {

/// Finite record of a real d-vector-valued signal. When period > 0 the
/// signal continues periodically past the stored samples; otherwise it is
/// zero there.
struct Signal {
    int d = 1;
    std::vector<std::vector<double>> samples;
    int period = 0;

    std::vector<double> at(int k) const;
    static Signal periodic(std::vector<std::vector<double>> one_period);
    static Signal scalar_periodic(const std::vector<double>& one_period);
};

/// sqrt((1/horizon) sum_{k<horizon} |x_k|^2); equals the signal power
/// exactly when the signal is periodic and horizon spans whole periods.
double signal_power(const Signal& sig, int horizon);

}  // namespace ozf
