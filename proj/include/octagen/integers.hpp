#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace octagen {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// |B_n| = n! * 2^n
BigInt hyperoctahedral_order(int n);

}  // namespace octagen
