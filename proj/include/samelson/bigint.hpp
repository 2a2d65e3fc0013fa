#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace samelson {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k) for arbitrary integer n (generalized:
// n(n-1)...(n-k+1)/k!, exact over the integers). k < 0 yields 0.
BigInt binomial(const BigInt& n, long k);

// p-adic valuation of a nonzero integer.
int p_valuation(BigInt n, long p);

bool is_small_prime(long p);

}  // namespace samelson
