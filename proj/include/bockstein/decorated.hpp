#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "bockstein/errors.hpp"

namespace bockstein {

// Per-prime singularity marker. The enumerator order matches the decorated
// order n- < n < n+.
enum class Decoration : std::uint8_t { minus = 0, none = 1, plus = 2 };

constexpr Decoration negated(Decoration e) {
  if (e == Decoration::minus) return Decoration::plus;
  if (e == Decoration::plus) return Decoration::minus;
  return Decoration::none;
}

// Commutative product of decorations: none is the identity, equal marks are
// idempotent, and mixed signs collapse to minus.
constexpr Decoration tensor(Decoration a, Decoration b) {
  if (a == Decoration::none) return b;
  if (b == Decoration::none) return a;
  return a == b ? a : Decoration::minus;
}

const char* decoration_suffix(Decoration e);  // "-", "", "+"

// A natural number carrying a decoration. 0 is always undecorated and 1
// never carries the minus mark; the constructor rejects both rather than
// normalizing.
class DecoratedNumber {
 public:
  explicit DecoratedNumber(unsigned value, Decoration dec = Decoration::none);

  unsigned value() const { return value_; }
  Decoration decoration() const { return dec_; }
  bool decorated() const { return dec_ != Decoration::none; }

  // Total order: by value, ties broken minus < none < plus.
  friend auto operator<=>(const DecoratedNumber&, const DecoratedNumber&) = default;

  std::string str() const;  // "4", "3+", "2-"

 private:
  unsigned value_;
  Decoration dec_;
};

// Value sum with the tensor product of decorations.
DecoratedNumber box_add(const DecoratedNumber& a, const DecoratedNumber& b);

// Value sum with the conjugate product -((-e1) (x) (-e2)).
DecoratedNumber circle_add(const DecoratedNumber& a, const DecoratedNumber& b);

}  // namespace bockstein
