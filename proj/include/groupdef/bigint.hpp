#ifndef GROUPDEF_BIGINT_HPP
#define GROUPDEF_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace groupdef {

// Arbitrary-precision signed integer.  Growth bounds like (n!)^2 * n^(2n^2)
// overflow any fixed-width type almost immediately, so every count or bound
// that can grow with group order uses Int.
using Int = boost::multiprecision::cpp_int;

} // namespace groupdef

#endif
