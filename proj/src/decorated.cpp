#include "bockstein/decorated.hpp"

namespace bockstein {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_decoration: return "InvalidDecoration";
    case Errc::regular_mismatch: return "RegularMismatch";
    case Errc::zero_rule: return "ZeroRule";
    case Errc::non_prime_key: return "NonPrimeKey";
    case Errc::precondition_dim: return "PreconditionDim";
    case Errc::trivial_group: return "TrivialGroup";
    case Errc::odd_ambient: return "OddAmbient";
    case Errc::range_violation: return "RangeViolation";
    case Errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

const char* decoration_suffix(Decoration e) {
  switch (e) {
    case Decoration::minus: return "-";
    case Decoration::plus: return "+";
    case Decoration::none: return "";
  }
  return "";
}

DecoratedNumber::DecoratedNumber(unsigned value, Decoration dec)
    : value_(value), dec_(dec) {
  if (value == 0 && dec != Decoration::none) {
    throw ValidationError(Errc::invalid_decoration, "0 carries no decoration");
  }
  if (value == 1 && dec == Decoration::minus) {
    throw ValidationError(Errc::invalid_decoration,
                          "1 cannot carry the '-' decoration");
  }
}

std::string DecoratedNumber::str() const {
  return std::to_string(value_) + decoration_suffix(dec_);
}

DecoratedNumber box_add(const DecoratedNumber& a, const DecoratedNumber& b) {
  // A minus mark in the result forces some operand with a minus mark, whose
  // value is >= 2, so the constructor's invariants cannot fire here.
  return DecoratedNumber(a.value() + b.value(),
                         tensor(a.decoration(), b.decoration()));
}

DecoratedNumber circle_add(const DecoratedNumber& a, const DecoratedNumber& b) {
  return DecoratedNumber(
      a.value() + b.value(),
      negated(tensor(negated(a.decoration()), negated(b.decoration()))));
}

}  // namespace bockstein
