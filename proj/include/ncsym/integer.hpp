#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncsym {

/// Exact signed integer of unbounded size.
using Integer = boost::multiprecision::cpp_int;

inline std::string toString(const Integer& value) { return value.str(); }

}  // namespace ncsym
