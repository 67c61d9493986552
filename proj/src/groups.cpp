#include "bockstein/groups.hpp"

#include <algorithm>

#include "bockstein/numeric.hpp"

namespace bockstein {

namespace {

void validate_atom(const GroupAtom& a) {
  if (a.exponent < 1) {
    throw ValidationError(Errc::bad_argument, "atom exponent must be >= 1");
  }
  switch (a.kind) {
    case GroupAtom::Kind::cyclic:
      if (a.modulus < 2) {
        throw ValidationError(Errc::bad_argument,
                              "cyclic modulus must be >= 2, got " +
                                  std::to_string(a.modulus));
      }
      break;
    case GroupAtom::Kind::localized:
    case GroupAtom::Kind::pruefer:
      if (!is_prime(a.prime)) {
        throw ValidationError(Errc::non_prime_key,
                              "parameter " + std::to_string(a.prime) +
                                  " is not prime");
      }
      break;
    default:
      break;
  }
}

std::vector<unsigned> sorted_unique(std::vector<unsigned> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

GroupAtom GroupAtom::integers(unsigned exponent) {
  return GroupAtom{Kind::integers, 0, 0, exponent};
}
GroupAtom GroupAtom::rationals(unsigned exponent) {
  return GroupAtom{Kind::rationals, 0, 0, exponent};
}
GroupAtom GroupAtom::cyclic(unsigned modulus, unsigned exponent) {
  return GroupAtom{Kind::cyclic, modulus, 0, exponent};
}
GroupAtom GroupAtom::localized(unsigned prime, unsigned exponent) {
  return GroupAtom{Kind::localized, 0, prime, exponent};
}
GroupAtom GroupAtom::pruefer(unsigned prime, unsigned exponent) {
  return GroupAtom{Kind::pruefer, 0, prime, exponent};
}

std::string GroupAtom::str() const {
  std::string base;
  switch (kind) {
    case Kind::integers: base = "Z"; break;
    case Kind::rationals: base = "Q"; break;
    case Kind::cyclic: base = "Z/" + std::to_string(modulus); break;
    case Kind::localized: base = "Zloc(" + std::to_string(prime) + ")"; break;
    case Kind::pruefer: base = "Zinf(" + std::to_string(prime) + ")"; break;
  }
  if (exponent > 1) base += "^" + std::to_string(exponent);
  return base;
}

GroupExpr::GroupExpr(std::vector<GroupAtom> atoms) : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_) validate_atom(a);
}

std::string GroupExpr::str() const {
  if (atoms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += "+";
    out += atoms_[i].str();
  }
  return out;
}

bool PrimeSet::contains(unsigned p) const {
  bool listed = std::binary_search(primes.begin(), primes.end(), p);
  return cofinite ? !listed : listed;
}

PrimeSet PrimeSet::of(std::vector<unsigned> ps) {
  return PrimeSet{false, sorted_unique(std::move(ps))};
}

SigmaSet sigma_basis(const GroupExpr& g) {
  bool has_free_integers = false;   // some Z summand
  bool has_free_rationals = false;  // some Q summand
  std::vector<unsigned> localized_primes;
  std::vector<unsigned> torsion_primes;  // p with some Z/m, p | m
  std::vector<unsigned> pruefer_primes;

  for (const auto& a : g.atoms()) {
    switch (a.kind) {
      case GroupAtom::Kind::integers:
        has_free_integers = true;
        break;
      case GroupAtom::Kind::rationals:
        has_free_rationals = true;
        break;
      case GroupAtom::Kind::localized:
        // Z_(p) is divisible by every prime except p itself.
        localized_primes.push_back(a.prime);
        break;
      case GroupAtom::Kind::cyclic:
        for (unsigned p : prime_factors(a.modulus)) torsion_primes.push_back(p);
        break;
      case GroupAtom::Kind::pruefer:
        pruefer_primes.push_back(a.prime);
        break;
    }
  }

  SigmaSet out;
  // The free part is divisible by all p only when every free summand is Q.
  out.has_q = has_free_rationals && !has_free_integers && localized_primes.empty();
  // A Z summand blocks divisibility at every prime.
  out.localized = has_free_integers ? PrimeSet::all()
                                    : PrimeSet::of(std::move(localized_primes));
  out.cyclic = PrimeSet::of(torsion_primes);
  // p-torsion is divisible only when no finite cyclic p-part is present.
  std::erase_if(pruefer_primes, [&](unsigned p) { return out.cyclic.contains(p); });
  out.pruefer = PrimeSet::of(std::move(pruefer_primes));
  return out;
}

unsigned dim_wrt_group(const DimensionType& d, const GroupExpr& g) {
  if (g.trivial()) {
    throw ValidationError(Errc::trivial_group,
                          "the trivial group has an empty Bockstein basis");
  }
  const SigmaSet sigma = sigma_basis(g);

  unsigned best = 0;
  if (sigma.has_q) best = std::max(best, d.at_zero());

  auto fold_family = [&](const PrimeSet& ps, SigmaFamily f) {
    if (ps.cofinite) {
      // Cofinitely many primes evaluate through the default slot; the
      // finitely many exceptional primes are handled individually.
      best = std::max(best, eval_slot(d.at_zero(), d.default_value(), f));
      for (const auto& [p, dec] : d.exceptional()) {
        if (ps.contains(p)) best = std::max(best, eval_slot(d.at_zero(), dec, f));
      }
    } else {
      for (unsigned p : ps.primes) {
        best = std::max(best, eval_slot(d.at_zero(), d.at(p), f));
      }
    }
  };
  fold_family(sigma.cyclic, SigmaFamily::cyclic);
  fold_family(sigma.pruefer, SigmaFamily::pruefer);
  fold_family(sigma.localized, SigmaFamily::localized);
  return best;
}

}  // namespace bockstein
