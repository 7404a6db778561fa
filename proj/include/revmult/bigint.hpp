#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace revmult {

// Enumeration counts grow without bound as the digit length grows, so the
// counting paths use an unbounded integer rather than a machine word.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace revmult
