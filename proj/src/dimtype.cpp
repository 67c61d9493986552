#include "bockstein/dimtype.hpp"

#include <algorithm>

#include "bockstein/numeric.hpp"

namespace bockstein {

namespace {

// Walk the union of exceptional primes of a and b, handing the callback the
// per-prime values of both sides (falling back to the defaults).
template <typename Fn>
void for_union(const DimensionType& a, const DimensionType& b, Fn&& fn) {
  const auto& ea = a.exceptional();
  const auto& eb = b.exceptional();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      fn(ea[i].first, ea[i].second, b.default_value());
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      fn(eb[j].first, a.default_value(), eb[j].second);
      ++j;
    } else {
      fn(ea[i].first, ea[i].second, eb[j].second);
      ++i;
      ++j;
    }
  }
}

}  // namespace

SigmaGroup SigmaGroup::rationals() { return SigmaGroup(SigmaFamily::rationals, 0); }

SigmaGroup SigmaGroup::cyclic(unsigned p) {
  if (!is_prime(p)) {
    throw ValidationError(Errc::non_prime_key,
                          "parameter " + std::to_string(p) + " is not prime");
  }
  return SigmaGroup(SigmaFamily::cyclic, p);
}

SigmaGroup SigmaGroup::pruefer(unsigned p) {
  if (!is_prime(p)) {
    throw ValidationError(Errc::non_prime_key,
                          "parameter " + std::to_string(p) + " is not prime");
  }
  return SigmaGroup(SigmaFamily::pruefer, p);
}

SigmaGroup SigmaGroup::localized(unsigned p) {
  if (!is_prime(p)) {
    throw ValidationError(Errc::non_prime_key,
                          "parameter " + std::to_string(p) + " is not prime");
  }
  return SigmaGroup(SigmaFamily::localized, p);
}

std::string SigmaGroup::str() const {
  switch (family_) {
    case SigmaFamily::rationals: return "Q";
    case SigmaFamily::cyclic: return "Z/" + std::to_string(prime_);
    case SigmaFamily::pruefer: return "Zinf(" + std::to_string(prime_) + ")";
    case SigmaFamily::localized: return "Zloc(" + std::to_string(prime_) + ")";
  }
  return "";
}

DimensionType DimensionType::make(unsigned at_zero, std::vector<Entry> entries,
                                  DecoratedNumber dflt) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) {
      throw ValidationError(Errc::bad_argument,
                            "duplicate key " + std::to_string(entries[i].first));
    }
  }
  for (const auto& [p, d] : entries) {
    if (!is_prime(p)) {
      throw ValidationError(Errc::non_prime_key,
                            "key " + std::to_string(p) + " is not prime");
    }
  }

  auto check_regular = [&](const DecoratedNumber& d, const std::string& where) {
    if (!d.decorated() && d.value() != at_zero) {
      throw ValidationError(Errc::regular_mismatch,
                            "undecorated value " + d.str() + " at " + where +
                                " must equal the value " +
                                std::to_string(at_zero) + " at 0");
    }
  };
  check_regular(dflt, "*");
  for (const auto& [p, d] : entries) check_regular(d, "key " + std::to_string(p));

  if (at_zero == 0) {
    auto violates = [](const DecoratedNumber& d) {
      return d.value() > 0 || d.decorated();
    };
    if (violates(dflt) ||
        std::any_of(entries.begin(), entries.end(),
                    [&](const Entry& e) { return violates(e.second); })) {
      throw ValidationError(Errc::zero_rule,
                            "a type with value 0 at 0 must be identically 0");
    }
  }

  std::erase_if(entries, [&](const Entry& e) { return e.second == dflt; });
  return DimensionType(at_zero, std::move(entries), dflt);
}

DimensionType DimensionType::make(unsigned at_zero, std::vector<Entry> entries) {
  return make(at_zero, std::move(entries), DecoratedNumber(at_zero));
}

DimensionType DimensionType::make_raw(unsigned at_zero,
                                      const std::vector<RawEntry>& entries,
                                      const std::optional<RawDecorated>& dflt) {
  auto lift = [](const RawDecorated& r, const std::string& where) {
    try {
      return DecoratedNumber(r.value, r.dec);
    } catch (const ValidationError& e) {
      throw ValidationError(e.code(), std::to_string(r.value) +
                                          decoration_suffix(r.dec) + " at " +
                                          where + " is not a decorated number");
    }
  };
  std::vector<Entry> typed;
  typed.reserve(entries.size());
  for (const auto& e : entries) {
    typed.emplace_back(e.prime, lift(e.num, "key " + std::to_string(e.prime)));
  }
  DecoratedNumber d = dflt ? lift(*dflt, "key *") : DecoratedNumber(at_zero);
  return make(at_zero, std::move(typed), d);
}

DimensionType DimensionType::constant(unsigned n) {
  return DimensionType(n, {}, DecoratedNumber(n));
}

const DecoratedNumber& DimensionType::at(unsigned p) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), p,
      [](const Entry& e, unsigned key) { return e.first < key; });
  if (it != entries_.end() && it->first == p) return it->second;
  return dflt_;
}

unsigned eval_slot(unsigned at_zero, const DecoratedNumber& d, SigmaFamily f) {
  switch (f) {
    case SigmaFamily::rationals:
      return at_zero;
    case SigmaFamily::cyclic:
      return d.value();
    case SigmaFamily::pruefer:
      return d.decoration() == Decoration::minus ? d.value() - 1 : d.value();
    case SigmaFamily::localized:
      if (!d.decorated()) return at_zero;  // regular: equals the value at Q
      return std::max(at_zero,
                      eval_slot(at_zero, d, SigmaFamily::pruefer) + 1);
  }
  return 0;
}

unsigned DimensionType::eval(const SigmaGroup& g) const {
  if (g.family() == SigmaFamily::rationals) return at_zero_;
  return eval_slot(at_zero_, at(g.prime()), g.family());
}

unsigned DimensionType::dim() const {
  unsigned best =
      std::max(at_zero_, eval_slot(at_zero_, dflt_, SigmaFamily::localized));
  for (const auto& [p, d] : entries_) {
    best = std::max(best, eval_slot(at_zero_, d, SigmaFamily::localized));
  }
  return best;
}

std::string DimensionType::str() const {
  std::string out = "{0:" + std::to_string(at_zero_);
  for (const auto& [p, d] : entries_) {
    out += "," + std::to_string(p) + ":" + d.str();
  }
  out += ",*:" + dflt_.str() + "}";
  return out;
}

bool le(const DimensionType& a, const DimensionType& b) {
  if (a.at_zero() > b.at_zero()) return false;
  if (!(a.default_value() <= b.default_value())) return false;
  bool ok = true;
  for_union(a, b, [&](unsigned, const DecoratedNumber& x, const DecoratedNumber& y) {
    ok = ok && x <= y;
  });
  return ok;
}

DimensionType boxplus(const DimensionType& a, const DimensionType& b) {
  std::vector<DimensionType::Entry> out;
  out.reserve(a.exceptional().size() + b.exceptional().size());
  for_union(a, b, [&](unsigned p, const DecoratedNumber& x, const DecoratedNumber& y) {
    out.emplace_back(p, box_add(x, y));
  });
  return DimensionType::make(a.at_zero() + b.at_zero(), std::move(out),
                             box_add(a.default_value(), b.default_value()));
}

DimensionType oplus(const DimensionType& a, const DimensionType& b) {
  std::vector<DimensionType::Entry> out;
  out.reserve(a.exceptional().size() + b.exceptional().size());
  for_union(a, b, [&](unsigned p, const DecoratedNumber& x, const DecoratedNumber& y) {
    out.emplace_back(p, circle_add(x, y));
  });
  return DimensionType::make(a.at_zero() + b.at_zero(), std::move(out),
                             circle_add(a.default_value(), b.default_value()));
}

DimensionType add_scalar(const DimensionType& d, unsigned n) {
  std::vector<DimensionType::Entry> out;
  out.reserve(d.exceptional().size());
  for (const auto& [p, x] : d.exceptional()) {
    out.emplace_back(p, DecoratedNumber(x.value() + n, x.decoration()));
  }
  return DimensionType::make(
      d.at_zero() + n, std::move(out),
      DecoratedNumber(d.default_value().value() + n,
                      d.default_value().decoration()));
}

DimensionType ominus(unsigned n, const DimensionType& d) {
  const unsigned dd = d.dim();
  if (n < dd) {
    throw ValidationError(Errc::precondition_dim,
                          "ominus(" + std::to_string(n) +
                              ", D) requires n >= dim D = " + std::to_string(dd));
  }
  auto flip = [&](const DecoratedNumber& x) {
    return DecoratedNumber(n + 1 - x.value(), negated(x.decoration()));
  };
  std::vector<DimensionType::Entry> out;
  out.reserve(d.exceptional().size());
  for (const auto& [p, x] : d.exceptional()) out.emplace_back(p, flip(x));
  return DimensionType::make(n + 1 - d.at_zero(), std::move(out),
                             flip(d.default_value()));
}

}  // namespace bockstein
