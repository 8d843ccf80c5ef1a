#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eo {

/// Exact nonnegative counts. Never converted to floating point.
using BigInt = boost::multiprecision::cpp_int;

} // namespace eo
