#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hosoya {

/// Exact arbitrary-precision integer used for index values, matching
/// counts, convergents and recurrence terms.
using Int = boost::multiprecision::cpp_int;

}  // namespace hosoya
