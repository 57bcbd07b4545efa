#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fibdig {

/// Arbitrary-precision signed integer used for every exact count.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace fibdig
