#pragma once

// Classification of groups PSL2(2^f) x R with K4-free seven-vertex character
// graphs, the enumeration scanners backing the arithmetic lemmas about
// pi(2^f +- 1) and pi(q^2 - 1), and the solvable-graph validators.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chargraph/arith.hpp"
#include "chargraph/degrees.hpp"
#include "chargraph/graph.hpp"
#include "chargraph/shapes.hpp"

namespace chargraph {

enum class MainCase { I, II, III, None };

inline std::string to_string(MainCase c) {
  switch (c) {
    case MainCase::I: return "I";
    case MainCase::II: return "II";
    case MainCase::III: return "III";
    case MainCase::None: return "None";
  }
  return "None";
}

inline constexpr unsigned kMaxExponent = 63;
inline constexpr unsigned kDefaultExponentBound = 40;
inline constexpr u64 kMaxOddPrimePower = 100000;
inline constexpr u64 kDefaultOddPrimePowerBound = 10000;

struct CaseReport {
  unsigned f = 0;
  PrimeSet minus_primes;  // pi(2^f - 1)
  PrimeSet plus_primes;   // pi(2^f + 1)
  MainCase main_case = MainCase::None;
  CharGraph socle_graph;
  std::string required_radical;
  std::optional<GraphExpr> expected_shape;
  std::optional<CharGraph> graph;  // Delta(G), set by verify_main
  bool verified = false;

  std::pair<std::size_t, std::size_t> sizes() const {
    return {minus_primes.size(), plus_primes.size()};
  }
};

/// Structured precondition failure: every violated condition is listed.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : std::invalid_argument(join_lines(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join_lines(const std::vector<std::string>& v) {
    std::string out = "validation failed";
    for (const auto& s : v) out += "; " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

namespace detail {

inline void require_exponent(unsigned f, unsigned lo, const char* who) {
  if (f < lo || f > kMaxExponent) {
    throw std::out_of_range(std::string(who) + ": f = " + std::to_string(f) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(kMaxExponent) + "]");
  }
}

inline MainCase case_for_sizes(std::size_t minus, std::size_t plus) {
  if (minus != plus) return MainCase::None;
  switch (minus) {
    case 1: return MainCase::I;
    case 2: return MainCase::II;
    case 3: return MainCase::III;
    default: return MainCase::None;
  }
}

}  // namespace detail

/// Expected Delta(G) for each case, in shape syntax.
inline std::optional<std::string> expected_shape_text(MainCase c) {
  switch (c) {
    case MainCase::I: return "K3^c * C4";
    case MainCase::II: return "(K2 + K1 + K2) * K2^c";
    case MainCase::III: return "K3 + K1 + K3";
    case MainCase::None: return std::nullopt;
  }
  return std::nullopt;
}

/// Number of radical factors each case requires (each with two primes).
inline std::size_t radical_arity(MainCase c) {
  switch (c) {
    case MainCase::I: return 2;
    case MainCase::II: return 1;
    default: return 0;
  }
}

/// Case I needs |pi(2^f-1)| = |pi(2^f+1)| = 1, II needs both 2, III both 3.
/// Mixed sizes are case None.
inline CaseReport classify_f(unsigned f) {
  detail::require_exponent(f, 2, "classify_f");
  CaseReport r;
  r.f = f;
  const u64 q = pow2(f);
  r.minus_primes = prime_divisors(q - 1);
  r.plus_primes = prime_divisors(q + 1);
  r.main_case = detail::case_for_sizes(r.minus_primes.size(), r.plus_primes.size());
  r.socle_graph = graph_psl2(q);
  switch (r.main_case) {
    case MainCase::I:
      r.required_radical =
          "direct product of two disconnected solvable groups, each with two new primes "
          "and edgeless character graph";
      break;
    case MainCase::II:
      r.required_radical =
          "one disconnected solvable group with two new primes and edgeless character graph";
      break;
    case MainCase::III: r.required_radical = "abelian"; break;
    case MainCase::None: r.required_radical = "none: no K4-free seven-vertex graph arises"; break;
  }
  if (auto text = expected_shape_text(r.main_case)) r.expected_shape = parse_shape(*text);
  return r;
}

/// Builds Delta(PSL2(2^f) x R) and checks it against the expected shape:
/// seven vertices, K4-free, non-bipartite complement, isomorphic to the
/// case's shape. Violated preconditions raise ValidationError.
inline CaseReport verify_main(unsigned f, const std::vector<DegreeSet>& radical) {
  CaseReport r = classify_f(f);
  std::vector<std::string> violations;
  if (r.main_case == MainCase::None) {
    throw ValidationError({"f = " + std::to_string(f) + " is not case I, II or III"});
  }
  const PrimeSet socle_primes = merge_primes({2}, merge_primes(r.minus_primes, r.plus_primes));
  const std::size_t arity = radical_arity(r.main_case);

  PrimeSet seen;
  std::size_t nontrivial = 0;
  for (std::size_t i = 0; i < radical.size(); ++i) {
    const auto& cd = radical[i];
    const PrimeSet rho = cd.primes();
    const std::string label = "radical factor " + std::to_string(i);
    if (rho.empty()) continue;
    ++nontrivial;
    if (arity == 0) {
      violations.push_back(label + ": case III needs an abelian radical (rho empty)");
      continue;
    }
    if (rho.size() != 2) {
      violations.push_back(label + ": rho has " + std::to_string(rho.size()) +
                           " primes, expected 2");
    }
    if (graph_from_cd(cd).size() != 0) {
      violations.push_back(label + ": character graph is not edgeless");
    }
    for (Prime p : rho) {
      if (std::binary_search(socle_primes.begin(), socle_primes.end(), p)) {
        violations.push_back(label + ": prime " + std::to_string(p) + " divides |PSL2(2^f)|");
      }
      if (std::binary_search(seen.begin(), seen.end(), p)) {
        violations.push_back(label + ": prime " + std::to_string(p) +
                             " shared with another factor");
      }
    }
    seen = merge_primes(seen, rho);
  }
  if (arity != 0 && nontrivial != arity) {
    violations.push_back("case " + to_string(r.main_case) + " needs " + std::to_string(arity) +
                         " non-abelian radical factor(s), got " + std::to_string(nontrivial));
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  std::vector<DegreeSet> factors{cd_psl2(pow2(f))};
  factors.insert(factors.end(), radical.begin(), radical.end());
  const CharGraph delta = graph_from_cd(cd_direct_product(factors));
  const CharGraph shape = eval_shape(*r.expected_shape);
  r.graph = delta;
  r.verified = delta.order() == 7 && is_kn_free(delta, 4) && !is_bipartite(complement(delta)) &&
               are_isomorphic(delta, shape).has_value();
  return r;
}

/// Smallest conforming radical for f: one degree set {1, a, b} per required
/// factor, a and b distinct fresh primes outside pi(|PSL2(2^f)|).
inline std::vector<DegreeSet> synthetic_radical(unsigned f) {
  const CaseReport r = classify_f(f);
  const PrimeSet used = merge_primes({2}, merge_primes(r.minus_primes, r.plus_primes));
  std::vector<DegreeSet> out;
  Prime candidate = 2;
  auto next_fresh = [&] {
    do {
      ++candidate;
    } while (!is_prime(candidate) || std::binary_search(used.begin(), used.end(), candidate));
    return candidate;
  };
  for (std::size_t i = 0; i < radical_arity(r.main_case); ++i) {
    const Prime a = next_fresh();
    const Prime b = next_fresh();
    out.push_back(DegreeSet({1, a, b}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scanners. Each reports counterexamples instead of stopping at the first.

enum class InterestClause { a, b, none };

struct InterestRow {
  unsigned f;
  PrimeSet minus_primes;
  PrimeSet plus_primes;
  InterestClause clause;
  // clause (b) witness: 2^f + 1 = 3 * t^beta
  std::optional<Prime> t;
  unsigned beta = 0;
};

namespace detail {

// 2^f + 1 = 3 * t^beta with t an odd prime and beta odd.
inline bool three_times_odd_prime_power(u64 n, Prime& t, unsigned& beta) {
  if (n % 3 != 0) return false;
  const auto fac = factorize(n / 3);
  if (fac.factors.size() != 1) return false;
  t = fac.factors[0].prime;
  beta = fac.factors[0].exponent;
  return t % 2 == 1 && beta % 2 == 1;
}

}  // namespace detail

/// Every f in [2, f_max] with |rho(PSL2(2^f))| = 4, each matched against
/// clause (a) f = 4, 2^f+1 = 17, 2^f-1 = 3*5; or (b) f >= 5 prime, 2^f-1
/// prime, 2^f+1 = 3 t^beta with t an odd prime and beta odd.
inline std::vector<InterestRow> scan_lemma_interest(unsigned f_max) {
  detail::require_exponent(f_max, 2, "scan_lemma_interest");
  std::vector<InterestRow> rows;
  for (unsigned f = 2; f <= f_max; ++f) {
    const u64 q = pow2(f);
    InterestRow row{f, prime_divisors(q - 1), prime_divisors(q + 1), InterestClause::none, {}, 0};
    if (1 + row.minus_primes.size() + row.plus_primes.size() != 4) continue;
    Prime t = 0;
    unsigned beta = 0;
    if (f == 4 && q + 1 == 17 && q - 1 == 15) {
      row.clause = InterestClause::a;
    } else if (f >= 5 && is_prime(f) && is_prime(q - 1) &&
               detail::three_times_odd_prime_power(q + 1, t, beta)) {
      row.clause = InterestClause::b;
      row.t = t;
      row.beta = beta;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct EvenFiveRow {
  unsigned f;
  PrimeSet minus_primes;
  PrimeSet plus_primes;
  bool conforming;  // f prime or f in {6, 9}
};

/// Every f in [2, f_max] with |pi(2^f - 1)| = |pi(2^f + 1)| = 2.
inline std::vector<EvenFiveRow> scan_lemma_evenfive(unsigned f_max) {
  detail::require_exponent(f_max, 2, "scan_lemma_evenfive");
  std::vector<EvenFiveRow> rows;
  for (unsigned f = 2; f <= f_max; ++f) {
    const u64 q = pow2(f);
    EvenFiveRow row{f, prime_divisors(q - 1), prime_divisors(q + 1), false};
    if (row.minus_primes.size() != 2 || row.plus_primes.size() != 2) continue;
    row.conforming = is_prime(f) || f == 6 || f == 9;
    rows.push_back(std::move(row));
  }
  return rows;
}

enum class OddFourClause { a, b, c, none };

struct OddFourRow {
  u64 q;
  PrimePower power;
  PrimeSet primes;  // pi(q^2 - 1)
  OddFourClause clause;
};

/// Every odd prime power q <= q_max with |pi(q^2 - 1)| = 3, assigned to
/// clause (a) q in {81, 25, 49}, (b) p = 3 and f an odd prime, or
/// (c) p >= 11 and f = 1.
inline std::vector<OddFourRow> scan_lemma_oddfour(u64 q_max) {
  if (q_max > kMaxOddPrimePower) {
    throw std::out_of_range("scan_lemma_oddfour: q_max above " + std::to_string(kMaxOddPrimePower));
  }
  std::vector<OddFourRow> rows;
  for (u64 q = 3; q <= q_max; q += 2) {
    const auto pp = as_prime_power(q);
    if (!pp) continue;
    const PrimeSet primes = merge_primes(prime_divisors(q - 1), prime_divisors(q + 1));
    if (primes.size() != 3) continue;
    OddFourClause clause = OddFourClause::none;
    if (q == 81 || q == 25 || q == 49) {
      clause = OddFourClause::a;
    } else if (pp->p == 3 && pp->f % 2 == 1 && is_prime(pp->f)) {
      clause = OddFourClause::b;
    } else if (pp->p >= 11 && pp->f == 1) {
      clause = OddFourClause::c;
    }
    rows.push_back({q, *pp, primes, clause});
  }
  return rows;
}

struct CaseRow {
  unsigned f;
  std::size_t minus_size;
  std::size_t plus_size;
  MainCase main_case;
};

/// Which case each f in [2, f_max] lands in.
inline std::vector<CaseRow> scan_cases(unsigned f_max) {
  detail::require_exponent(f_max, 2, "scan_cases");
  std::vector<CaseRow> rows;
  for (unsigned f = 2; f <= f_max; ++f) {
    const u64 q = pow2(f);
    const auto minus = prime_divisors(q - 1).size();
    const auto plus = prime_divisors(q + 1).size();
    rows.push_back({f, minus, plus, detail::case_for_sizes(minus, plus)});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Solvable-graph validators.

/// Every three vertices span at least one edge. Necessary for a solvable
/// group's character graph.
inline bool check_palfy(const CharGraph& g) { return odd_cycle_triples(g).empty(); }

/// A solvable group's graph on four or more vertices has a triangle or is C4.
inline bool check_solvable_shape(const CharGraph& g) {
  if (g.order() <= 3) return true;
  if (has_triangle(g)) return true;
  if (g.order() != 4) return false;
  return are_isomorphic(g, eval_shape(GraphExpr::cycle(4))).has_value();
}

/// Warning text when g is K4-free with more than seven vertices, which no
/// character graph can be.
inline std::optional<std::string> k4free_vertex_bound(const CharGraph& g) {
  if (g.order() <= 7 || max_clique_size(g) >= 4) return std::nullopt;
  return "K4-free graph with " + std::to_string(g.order()) +
         " vertices: no finite group has a K4-free character graph on more than 7 vertices";
}

}  // namespace chargraph
