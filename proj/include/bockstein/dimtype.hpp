#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bockstein/decorated.hpp"
#include "bockstein/errors.hpp"

namespace bockstein {

// The four families making up the Bockstein basis sigma.
enum class SigmaFamily : std::uint8_t { rationals, cyclic, pruefer, localized };

// One member of sigma: Q, Z/p, the Pruefer group Z(p^inf), or the
// localization Z_(p). Prime parameters are primality-checked.
class SigmaGroup {
 public:
  static SigmaGroup rationals();
  static SigmaGroup cyclic(unsigned p);
  static SigmaGroup pruefer(unsigned p);
  static SigmaGroup localized(unsigned p);

  SigmaFamily family() const { return family_; }
  unsigned prime() const { return prime_; }  // 0 for rationals
  std::string str() const;

 private:
  SigmaGroup(SigmaFamily f, unsigned p) : family_(f), prime_(p) {}
  SigmaFamily family_;
  unsigned prime_;
};

// Pre-validation literal material; DecoratedNumber invariants are checked
// only when a DimensionType is assembled from it.
struct RawDecorated {
  unsigned value = 0;
  Decoration dec = Decoration::none;
};
struct RawEntry {
  unsigned prime = 0;
  RawDecorated num;
};

// A dimension type: a value at Q plus a decorated value per prime, stored as
// a finite exceptional set over an eventually-constant default. Valid types
// satisfy
//   - undecorated per-prime values (including an undecorated default) equal
//     the value at Q (the regular case fixes them);
//   - either the type is identically zero or every evaluation on sigma is
//     at least 1;
// and are kept canonical: exceptional entries equal to the default are
// dropped, so equality is structural.
class DimensionType {
 public:
  using Entry = std::pair<unsigned, DecoratedNumber>;

  // Validates and canonicalizes; entries may arrive unsorted. Throws
  // ValidationError (NonPrimeKey, RegularMismatch, ZeroRule, BadArgument).
  static DimensionType make(unsigned at_zero, std::vector<Entry> entries,
                            DecoratedNumber dflt);
  // Same, with the regular default (at_zero, undecorated).
  static DimensionType make(unsigned at_zero, std::vector<Entry> entries);
  // From raw literal material; InvalidDecoration failures name the key.
  static DimensionType make_raw(unsigned at_zero,
                                const std::vector<RawEntry>& entries,
                                const std::optional<RawDecorated>& dflt);
  // The constant type sending every member of sigma to n.
  static DimensionType constant(unsigned n);

  unsigned at_zero() const { return at_zero_; }
  const DecoratedNumber& default_value() const { return dflt_; }
  const std::vector<Entry>& exceptional() const { return entries_; }

  // D(p): the stored decorated value at prime p.
  const DecoratedNumber& at(unsigned p) const;

  // D(G) for G in sigma. With D(p) = m^e:
  //   Q        -> D(Q)
  //   Z/p      -> m
  //   Z(p^inf) -> m, or m-1 when e is minus
  //   Z_(p)    -> D(Q) when e is none, else max(D(Q), D(Z(p^inf)) + 1)
  unsigned eval(const SigmaGroup& g) const;

  // sup of D over sigma; the localizations dominate, so this is the maximum
  // of at_zero and the Z_(p) evaluations across entries and the default.
  unsigned dim() const;

  std::string str() const;  // canonical literal, e.g. "{0:4,2:3+,3:2-,*:4}"

  friend bool operator==(const DimensionType&, const DimensionType&) = default;

 private:
  DimensionType(unsigned at_zero, std::vector<Entry> entries, DecoratedNumber dflt)
      : at_zero_(at_zero), dflt_(dflt), entries_(std::move(entries)) {}

  unsigned at_zero_;
  DecoratedNumber dflt_;
  std::vector<Entry> entries_;  // sorted by prime, none equal to dflt_
};

// D(G) for a slot holding `d` at some prime, in family `f`, given D(Q).
// Exposed so callers can evaluate the default slot without naming a prime.
unsigned eval_slot(unsigned at_zero, const DecoratedNumber& d, SigmaFamily f);

// Pointwise comparison in the decorated order (a partial order on types).
bool le(const DimensionType& a, const DimensionType& b);

// Pointwise box_add; the dimension type of a product.
DimensionType boxplus(const DimensionType& a, const DimensionType& b);

// Pointwise circle_add; the operation appearing in the union bound.
DimensionType oplus(const DimensionType& a, const DimensionType& b);

// Ordinary shift by n; decorations are preserved.
DimensionType add_scalar(const DimensionType& d, unsigned n);

// The complementary type n+1 (-) D: per prime (n+1-m) with the decoration
// negated. Requires n >= dim D (PreconditionDim otherwise).
DimensionType ominus(unsigned n, const DimensionType& d);

}  // namespace bockstein
