#include "bockstein/numeric.hpp"

namespace bockstein {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (unsigned d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> prime_factors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace bockstein
