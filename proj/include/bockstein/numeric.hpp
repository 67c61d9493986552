#pragma once

#include <vector>

namespace bockstein {

bool is_prime(unsigned n);

// Distinct prime divisors of m, ascending. m < 2 yields an empty list.
std::vector<unsigned> prime_factors(unsigned m);

}  // namespace bockstein
