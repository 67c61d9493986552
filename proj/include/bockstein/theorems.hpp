#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "bockstein/dimtype.hpp"

namespace bockstein {

// Finite universe of dimension types: exceptional primes drawn from
// `primes`, every stored value at most `max_value`, regular defaults.
struct UniverseConfig {
  std::vector<unsigned> primes;
  unsigned max_value = 0;
};

struct Violation {
  std::string law;
  std::vector<std::string> inputs;
  std::string witness;
};

struct VerificationReport {
  std::string law;  // "typeminus" or "algebra"
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::chrono::milliseconds elapsed{0};

  bool pass() const { return violations.empty(); }
};

// Every valid dimension type over the universe, in deterministic order:
// ascending at_zero, then the per-prime decorated values lexicographically
// (primes ascending). Duplicate-free and complete by construction.
std::vector<DimensionType> enumerate_types(const UniverseConfig& cfg);

// D1 (+) D2 + 1, the upper bound on the type of a union A u B with
// d_A <= D1 and d_B <= D2.
DimensionType union_bound(const DimensionType& d1, const DimensionType& d2);

// Whether d <= D1 (+) D2 + 1, i.e. whether a compactum realizing d splits
// into pieces of types at most D1 and D2.
bool decomposition_hypothesis(const DimensionType& d, const DimensionType& d1,
                              const DimensionType& d2);

// Exhaustively checks, for every D in the universe with n = dim D and
// M = n+1 (-) D:
//   (i)  D [+] M <= n+1, and dim(D [+] D') <= n+1 implies D' <= M;
//   (ii) n+1 <= D (+) M, and D' <= D, D'' <= M, n+1 <= D' (+) D'' imply
//        D' = D and D'' = M.
// The inner quantifiers range over the universe. Violations are reported,
// never thrown.
VerificationReport verify_typeminus(const UniverseConfig& cfg);

// Exhaustively checks the algebraic laws over the universe: commutativity,
// associativity, identity and monotonicity of [+] and (+); [+] <= (+);
// D [+] n = D + n = D (+) n; closure of all operations under validity;
// the complementary operation's closure, dim bound and involution; and the
// partial-order axioms of le.
VerificationReport verify_algebra(const UniverseConfig& cfg);

}  // namespace bockstein
