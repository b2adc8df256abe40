#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace glasspath {

// Counts grow past 64 bits already for moderate parameters; everything
// that returns a count uses this type.
using BigCount = boost::multiprecision::cpp_int;

} // namespace glasspath
