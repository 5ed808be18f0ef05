#include "ozf/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace ozf {

std::vector<double> Signal::at(int k) const {
    if (k < 0) throw std::invalid_argument("signal index negative");
    const size_t m = samples.size();
    if (static_cast<size_t>(k) < m) return samples[static_cast<size_t>(k)];
    if (period > 0) return samples[static_cast<size_t>(k % period)];
    return std::vector<double>(static_cast<size_t>(d), 0.0);
}

Signal Signal::periodic(std::vector<std::vector<double>> one_period) {
    if (one_period.empty()) throw std::invalid_argument("empty period");
    Signal s;
    s.d = static_cast<int>(one_period.front().size());
    s.period = static_cast<int>(one_period.size());
    s.samples = std::move(one_period);
    return s;
}

Signal Signal::scalar_periodic(const std::vector<double>& one_period) {
    std::vector<std::vector<double>> rows;
    rows.reserve(one_period.size());
    for (double v : one_period) rows.push_back({v});
    return periodic(std::move(rows));
}

double signal_power(const Signal& sig, int horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be positive");
    double s = 0.0;
    for (int k = 0; k < horizon; ++k) {
        const std::vector<double> x = sig.at(k);
        for (double v : x) s += v * v;
    }
    return std::sqrt(s / horizon);
}

}  // namespace ozf
