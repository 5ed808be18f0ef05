#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ozf/simplex.hpp"

namespace ozf {

/// Arbitrary-precision rational scalar for certified decisions on
/// double-rounded data (conversion from double is exact).
using rational = boost::multiprecision::cpp_rational;

template <>
struct lp_traits<rational> {
    static rational opt_tol() { return rational(0); }
    static rational pivot_tol() { return rational(0); }
    static rational feas_tol() { return rational(0); }
    static constexpr bool exact = true;
};

}  // namespace ozf
