#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bockstein/dimtype.hpp"
#include "bockstein/errors.hpp"

namespace bockstein {

// One direct summand of an abelian-group expression.
struct GroupAtom {
  enum class Kind : std::uint8_t { integers, rationals, cyclic, localized, pruefer };

  Kind kind = Kind::integers;
  unsigned modulus = 0;   // cyclic only, >= 2
  unsigned prime = 0;     // localized / pruefer only
  unsigned exponent = 1;  // direct-sum multiplicity, >= 1

  static GroupAtom integers(unsigned exponent = 1);
  static GroupAtom rationals(unsigned exponent = 1);
  static GroupAtom cyclic(unsigned modulus, unsigned exponent = 1);
  static GroupAtom localized(unsigned prime, unsigned exponent = 1);
  static GroupAtom pruefer(unsigned prime, unsigned exponent = 1);

  std::string str() const;  // "Z", "Q", "Z/12", "Zloc(5)", "Zinf(3)", "Z^2"

  friend bool operator==(const GroupAtom&, const GroupAtom&) = default;
};

// A finite direct sum of atoms; the empty sum is the trivial group.
class GroupExpr {
 public:
  GroupExpr() = default;
  explicit GroupExpr(std::vector<GroupAtom> atoms);  // validates every atom

  const std::vector<GroupAtom>& atoms() const { return atoms_; }
  bool trivial() const { return atoms_.empty(); }
  std::string str() const;  // "Z^2+Z/12+Zinf(3)", "0" when trivial

 private:
  std::vector<GroupAtom> atoms_;
};

// A set of primes that is either finite or the complement of a finite set.
struct PrimeSet {
  bool cofinite = false;
  std::vector<unsigned> primes;  // sorted, unique; the complement if cofinite

  bool contains(unsigned p) const;
  bool empty() const { return !cofinite && primes.empty(); }

  static PrimeSet none() { return {}; }
  static PrimeSet all() { return {true, {}}; }
  static PrimeSet of(std::vector<unsigned> ps);

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
};

// A subset of the Bockstein basis, one prime set per family plus the Q flag.
struct SigmaSet {
  bool has_q = false;
  PrimeSet cyclic;
  PrimeSet pruefer;
  PrimeSet localized;

  bool empty() const {
    return !has_q && cyclic.empty() && pruefer.empty() && localized.empty();
  }

  friend bool operator==(const SigmaSet&, const SigmaSet&) = default;
};

// The Bockstein basis of G. Divisibility is decided summand-wise:
//   Z_(p)    in sigma(G) iff the free part has a Z or Z_(p) summand
//   Q        in sigma(G) iff the free part is nonzero and all of it is Q
//   Z/p      in sigma(G) iff some Z/m summand has p | m
//   Z(p^inf) in sigma(G) iff the p-torsion is nonzero and all of it is Z(p^inf)
SigmaSet sigma_basis(const GroupExpr& g);

// sup { D(H) : H in sigma(G) }. Throws TrivialGroup when sigma(G) is empty.
unsigned dim_wrt_group(const DimensionType& d, const GroupExpr& g);

}  // namespace bockstein
