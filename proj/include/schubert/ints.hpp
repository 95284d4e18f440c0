#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

// Exact arbitrary-precision integer. All coefficients in the library are
// integers; there is no rational arithmetic anywhere.
using Int = boost::multiprecision::cpp_int;

}  // namespace schubert
