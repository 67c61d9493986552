#include "bockstein/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>

#include "bockstein/numeric.hpp"

namespace bockstein {

namespace {

class Stopwatch {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<unsigned> checked_primes(std::vector<unsigned> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (unsigned p : primes) {
    if (!is_prime(p)) {
      throw ValidationError(Errc::non_prime_key,
                            "universe prime " + std::to_string(p) + " is not prime");
    }
  }
  return primes;
}

// Admissible per-prime values for a given at_zero, ascending in the
// decorated order. Undecorated slots are pinned to at_zero by regularity;
// a zero at_zero admits only the zero slot.
std::vector<DecoratedNumber> slot_candidates(unsigned at_zero, unsigned max_value) {
  std::vector<DecoratedNumber> out;
  if (at_zero == 0) {
    out.emplace_back(0u);
    return out;
  }
  for (unsigned m = 0; m <= max_value; ++m) {
    if (m >= 2) out.emplace_back(m, Decoration::minus);
    if (m == at_zero) out.emplace_back(m);
    if (m >= 1) out.emplace_back(m, Decoration::plus);
  }
  return out;
}

}  // namespace

std::vector<DimensionType> enumerate_types(const UniverseConfig& cfg) {
  const std::vector<unsigned> primes = checked_primes(cfg.primes);
  std::vector<DimensionType> out;
  for (unsigned a0 = 0; a0 <= cfg.max_value; ++a0) {
    const auto cands = slot_candidates(a0, cfg.max_value);
    std::vector<std::size_t> idx(primes.size(), 0);
    bool done = false;
    while (!done) {
      std::vector<DimensionType::Entry> entries;
      entries.reserve(primes.size());
      for (std::size_t k = 0; k < primes.size(); ++k) {
        entries.emplace_back(primes[k], cands[idx[k]]);
      }
      out.push_back(DimensionType::make(a0, std::move(entries)));
      done = true;
      for (std::size_t k = primes.size(); k-- > 0;) {
        if (++idx[k] < cands.size()) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
    }
  }
  return out;
}

DimensionType union_bound(const DimensionType& d1, const DimensionType& d2) {
  return add_scalar(oplus(d1, d2), 1);
}

bool decomposition_hypothesis(const DimensionType& d, const DimensionType& d1,
                              const DimensionType& d2) {
  return le(d, union_bound(d1, d2));
}

VerificationReport verify_typeminus(const UniverseConfig& cfg) {
  Stopwatch watch;
  VerificationReport rep;
  rep.law = "typeminus";
  const std::vector<DimensionType> univ = enumerate_types(cfg);
  const std::size_t n = univ.size();

  auto violation = [&](std::string law, std::vector<std::string> inputs,
                       std::string witness) {
    rep.violations.push_back(
        {std::move(law), std::move(inputs), std::move(witness)});
  };

  for (std::size_t i = 0; i < n; ++i) {
    const DimensionType& d = univ[i];
    const unsigned nd = d.dim();
    const DimensionType m = ominus(nd, d);
    const DimensionType bound = DimensionType::constant(nd + 1);

    ++rep.checked;
    if (!le(boxplus(d, m), bound)) {
      violation("typeminus-i", {d.str()}, boxplus(d, m).str() + " !<= " + bound.str());
    }
    ++rep.checked;
    if (!le(bound, oplus(d, m))) {
      violation("typeminus-ii", {d.str()}, bound.str() + " !<= " + oplus(d, m).str());
    }

    // Maximality: the complementary type is the largest D' keeping
    // dim(D [+] D') within nd+1.
    for (std::size_t j = 0; j < n; ++j) {
      ++rep.checked;
      if (boxplus(d, univ[j]).dim() <= nd + 1 && !le(univ[j], m)) {
        violation("typeminus-maximality", {d.str(), univ[j].str()},
                  univ[j].str() + " !<= " + m.str());
      }
    }

    // Rigidity: within D' <= D, D'' <= m, reaching nd+1 under (+) pins the
    // pair exactly.
    std::vector<std::size_t> below_d, below_m;
    for (std::size_t j = 0; j < n; ++j) {
      if (le(univ[j], d)) below_d.push_back(j);
      if (le(univ[j], m)) below_m.push_back(j);
    }
    for (std::size_t a : below_d) {
      for (std::size_t b : below_m) {
        ++rep.checked;
        if (le(bound, oplus(univ[a], univ[b])) &&
            !(univ[a] == d && univ[b] == m)) {
          violation("typeminus-rigidity",
                    {d.str(), univ[a].str(), univ[b].str()},
                    "pair differs from (" + d.str() + ", " + m.str() + ")");
        }
      }
    }
  }

  rep.elapsed = watch.elapsed();
  return rep;
}

VerificationReport verify_algebra(const UniverseConfig& cfg) {
  Stopwatch watch;
  VerificationReport rep;
  rep.law = "algebra";
  const std::vector<DimensionType> univ = enumerate_types(cfg);
  const std::size_t n = univ.size();

  auto violation = [&](std::string law, std::vector<std::string> inputs,
                       std::string witness) {
    rep.violations.push_back(
        {std::move(law), std::move(inputs), std::move(witness)});
  };

  // Pairwise product tables. Building them exercises closure: the
  // operations re-validate every result they construct.
  std::vector<DimensionType> bp_tab, op_tab;
  bp_tab.reserve(n * n);
  op_tab.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++rep.checked;
      try {
        bp_tab.push_back(boxplus(univ[i], univ[j]));
        op_tab.push_back(oplus(univ[i], univ[j]));
      } catch (const ValidationError& e) {
        violation("closure", {univ[i].str(), univ[j].str()}, e.what());
        bp_tab.push_back(DimensionType::constant(0));
        op_tab.push_back(DimensionType::constant(0));
      }
    }
  }
  auto bp = [&](std::size_t i, std::size_t j) -> const DimensionType& {
    return bp_tab[i * n + j];
  };
  auto op = [&](std::size_t i, std::size_t j) -> const DimensionType& {
    return op_tab[i * n + j];
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++rep.checked;
      if (!(bp(i, j) == bp(j, i))) {
        violation("boxplus-commutative", {univ[i].str(), univ[j].str()},
                  bp(i, j).str() + " vs " + bp(j, i).str());
      }
      ++rep.checked;
      if (!(op(i, j) == op(j, i))) {
        violation("oplus-commutative", {univ[i].str(), univ[j].str()},
                  op(i, j).str() + " vs " + op(j, i).str());
      }
      ++rep.checked;
      if (!le(bp(i, j), op(i, j))) {
        violation("boxplus-le-oplus", {univ[i].str(), univ[j].str()},
                  bp(i, j).str() + " !<= " + op(i, j).str());
      }
    }
  }

  // Identity and the scalar shift: adding a constant type is the ordinary
  // shift, under both operations.
  for (std::size_t i = 0; i < n; ++i) {
    for (unsigned s = 0; s <= cfg.max_value + 1; ++s) {
      const DimensionType cs = DimensionType::constant(s);
      const DimensionType shifted = add_scalar(univ[i], s);
      ++rep.checked;
      if (!(boxplus(univ[i], cs) == shifted)) {
        violation("boxplus-scalar-shift", {univ[i].str(), cs.str()},
                  boxplus(univ[i], cs).str() + " vs " + shifted.str());
      }
      ++rep.checked;
      if (!(oplus(univ[i], cs) == shifted)) {
        violation("oplus-scalar-shift", {univ[i].str(), cs.str()},
                  oplus(univ[i], cs).str() + " vs " + shifted.str());
      }
      if (s == 0) {
        ++rep.checked;
        if (!(shifted == univ[i])) {
          violation("identity", {univ[i].str()}, shifted.str());
        }
      }
    }
  }

  // Associativity, both operations, all ordered triples.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++rep.checked;
        if (!(boxplus(bp(i, j), univ[k]) == boxplus(univ[i], bp(j, k)))) {
          violation("boxplus-associative",
                    {univ[i].str(), univ[j].str(), univ[k].str()}, "");
        }
        ++rep.checked;
        if (!(oplus(op(i, j), univ[k]) == oplus(univ[i], op(j, k)))) {
          violation("oplus-associative",
                    {univ[i].str(), univ[j].str(), univ[k].str()}, "");
        }
      }
    }
  }

  // Partial-order axioms of le.
  std::vector<std::uint8_t> lem(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lem[i * n + j] = le(univ[i], univ[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    ++rep.checked;
    if (!lem[i * n + i]) violation("le-reflexive", {univ[i].str()}, "");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++rep.checked;
      if (lem[i * n + j] && lem[j * n + i]) {
        violation("le-antisymmetric", {univ[i].str(), univ[j].str()},
                  "distinct canonical types compare both ways");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!lem[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!lem[j * n + k]) continue;
        ++rep.checked;
        if (!lem[i * n + k]) {
          violation("le-transitive",
                    {univ[i].str(), univ[j].str(), univ[k].str()}, "");
        }
      }
    }
  }

  // Monotonicity of both operations in each argument.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !lem[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++rep.checked;
        if (!le(bp(i, k), bp(j, k)) || !le(bp(k, i), bp(k, j))) {
          violation("boxplus-monotone", {univ[i].str(), univ[j].str(), univ[k].str()},
                    bp(i, k).str() + " !<= " + bp(j, k).str());
        }
        ++rep.checked;
        if (!le(op(i, k), op(j, k)) || !le(op(k, i), op(k, j))) {
          violation("oplus-monotone", {univ[i].str(), univ[j].str(), univ[k].str()},
                    op(i, k).str() + " !<= " + op(j, k).str());
        }
      }
    }
  }

  // Complementary operation: closure, the dim bound, and the involution.
  for (std::size_t i = 0; i < n; ++i) {
    const DimensionType& d = univ[i];
    const unsigned dd = d.dim();
    for (unsigned m = dd; m <= cfg.max_value + 2; ++m) {
      ++rep.checked;
      try {
        const DimensionType comp = ominus(m, d);
        if (dd > 0) {
          ++rep.checked;
          if (comp.dim() > m) {
            violation("ominus-dim-bound", {d.str()},
                      "dim " + std::to_string(comp.dim()) + " > " + std::to_string(m));
          }
          ++rep.checked;
          if (!(ominus(m, comp) == d)) {
            violation("ominus-involution", {d.str()},
                      ominus(m, comp).str() + " vs " + d.str());
          }
        }
      } catch (const ValidationError& e) {
        violation("ominus-closure", {d.str()}, e.what());
      }
    }
  }

  rep.elapsed = watch.elapsed();
  return rep;
}

}  // namespace bockstein
