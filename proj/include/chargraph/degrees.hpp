#pragma once

// Character-degree models: PSL2(q), degrees forced on almost-simple
// extensions and on Clifford-induced characters, direct products, and the
// simple groups whose order has exactly three prime divisors.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "chargraph/arith.hpp"
#include "chargraph/graph.hpp"

namespace chargraph {

/// Degrees known to lie in some cd set, without the trivial degree; sorted.
using DegreeFragment = std::vector<u64>;

namespace detail {

inline PrimePower require_psl2_field(u64 q) {
  if (q < 4) throw std::invalid_argument("PSL2(q): q must be >= 4, got " + std::to_string(q));
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("PSL2(q): " + std::to_string(q) + " is not a prime power");
  return *pp;
}

inline PrimeSet without(PrimeSet s, Prime p) {
  s.erase(std::remove(s.begin(), s.end(), p), s.end());
  return s;
}

inline bool is_power_of_two(u64 n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace detail

/// cd(PSL2(q)) for a prime power q >= 4:
///   q even:      {1, q-1, q, q+1}
///   q = 5:       {1, 3, 4, 5}       (PSL2(5) = PSL2(4))
///   q odd > 5:   {1, (q+e)/2, q-1, q, q+1}, e = +-1 with q = e (mod 4)
inline DegreeSet cd_psl2(u64 q) {
  detail::require_psl2_field(q);
  if (q == 5) return DegreeSet({1, 3, 4, 5});
  if (q % 2 == 0) return DegreeSet({1, q - 1, q, q + 1});
  const u64 half = q % 4 == 1 ? (q + 1) / 2 : (q - 1) / 2;
  return DegreeSet({1, half, q - 1, q, q + 1});
}

/// Delta(PSL2(q)) assembled from its known component structure rather than
/// from a degree set:
///  - q even: complete graphs on {2}, pi(q-1), pi(q+1), nothing between them.
///  - q odd > 5: {p} isolated; if q-1 or q+1 is a power of 2, pi(q^2-1) is
///    complete; otherwise M = pi(q-1)\{2} and P = pi(q+1)\{2} are complete,
///    2 is adjacent to all of M and P, and no edge joins M to P.
///  - q = 5 takes the q = 4 shape.
inline CharGraph graph_psl2(u64 q) {
  const PrimePower pp = detail::require_psl2_field(q);
  if (q == 5) q = 4;
  if (pp.p == 2 || q == 4) {
    return disjoint_union(disjoint_union(complete_graph({2}), complete_graph(prime_divisors(q - 1))),
                          complete_graph(prime_divisors(q + 1)));
  }
  const CharGraph isolated = complete_graph({pp.p});
  if (detail::is_power_of_two(q - 1) || detail::is_power_of_two(q + 1)) {
    return disjoint_union(isolated, complete_graph(merge_primes(prime_divisors(q - 1),
                                                                prime_divisors(q + 1))));
  }
  const PrimeSet minus = detail::without(prime_divisors(q - 1), 2);
  const PrimeSet plus = detail::without(prime_divisors(q + 1), 2);
  const CharGraph odd_part = disjoint_union(complete_graph(minus), complete_graph(plus));
  return disjoint_union(isolated, join(complete_graph({2}), odd_part));
}

/// The two degrees every almost-simple G with socle PSL2(q) has:
/// (q-1)*index and (q+1)*index, index = [G : G ∩ PGL2(q)].
/// Requires q = p^f >= 5 with f >= 2 and q != 9.
inline DegreeFragment guaranteed_degrees_almost_simple(u64 q, u64 index) {
  const auto pp = as_prime_power(q);
  if (!pp || q < 5 || pp->f < 2 || q == 9) {
    throw std::invalid_argument("guaranteed_degrees_almost_simple: q = " + std::to_string(q) +
                                " must be a prime power p^f >= 5 with f >= 2 and q != 9");
  }
  if (index == 0) throw std::invalid_argument("guaranteed_degrees_almost_simple: index must be positive");
  return {checked_mul(q - 1, index), checked_mul(q + 1, index)};
}

/// What Clifford theory forces on cd(G | theta) when the inertia quotient is
/// a Frobenius group with elementary abelian p-kernel (G/R(G) = PSL2(q)).
struct FrobeniusConstraint {
  bool extendible;
  u64 theta_deg;
  /// extendible: cd(G|theta) = {theta(1)[G:I], theta(1) b} and this divides b.
  /// not extendible: this divides every degree in cd(G|theta).
  u64 divisor;

  /// Whether a degree is compatible with the constraint. For the extendible
  /// case only the second degree theta(1) b is constrained.
  bool admits(u64 degree) const {
    const u64 d = extendible ? checked_mul(theta_deg, divisor) : divisor;
    return degree % d == 0;
  }
};

inline FrobeniusConstraint frobenius_case_degrees(u64 q, u64 p, u64 theta_deg, bool extendible) {
  const auto pp = as_prime_power(q);
  if (!pp || pp->p != p) {
    throw std::invalid_argument("frobenius_case_degrees: q must be a power of p");
  }
  if (theta_deg == 0) throw std::invalid_argument("frobenius_case_degrees: theta(1) must be positive");
  if (extendible) {
    const u64 d = q % 2 == 1 ? 2 : 1;
    return {true, theta_deg, checked_mul(q - 1, q + 1) / d};
  }
  return {false, theta_deg, checked_mul(checked_mul(p, q + 1), theta_deg)};
}

struct CliffordScenario {
  u64 p;
  unsigned f;
  unsigned m;
  u64 theta_deg;
};

enum class Preconditions { enforce, formula_only };

/// [G:I] = p^(f-m) (p^(2f) - 1) / (p^(2m) - 1) for m | f. The quotient is
/// the geometric sum of p^(2mi), i < f/m, so p^(2f) itself never has to fit.
inline u64 clifford_index(u64 p, unsigned f, unsigned m) {
  if (m == 0 || f % m != 0) throw std::invalid_argument("clifford_index: m must divide f");
  const u64 step = checked_pow(p, 2 * m);
  u64 sum = 0, term = 1;
  for (unsigned i = 0; i < f / m; ++i) {
    sum += term;
    if (sum < term) throw std::out_of_range("clifford_index: overflow");
    if (i + 1 < f / m) term = checked_mul(term, step);
  }
  return checked_mul(checked_pow(p, f - m), sum);
}

/// Degrees theta(1)(p^m - 1)[G:I] and theta(1)(p^m + 1)[G:I] forced when the
/// inertia quotient is PSL2(p^m) inside PSL2(p^f). `formula_only` skips the
/// p^m >= 7, p^m != 9 applicability checks and just evaluates the formula.
inline DegreeFragment special_case_degrees(const CliffordScenario& s,
                                      Preconditions pre = Preconditions::enforce) {
  if (!is_prime(s.p)) throw std::invalid_argument("special_case_degrees: p must be prime");
  if (s.f == 0 || s.m == 0 || s.f % s.m != 0 || s.m == s.f) {
    throw std::invalid_argument("special_case_degrees: m must be a proper divisor of f");
  }
  if (s.theta_deg == 0) throw std::invalid_argument("special_case_degrees: theta(1) must be positive");
  const u64 sub = checked_pow(s.p, s.m);
  if (pre == Preconditions::enforce && (sub < 7 || sub == 9)) {
    throw std::invalid_argument("special_case_degrees: p^m = " + std::to_string(sub) +
                                " must be >= 7 and != 9");
  }
  const u64 scale = checked_mul(s.theta_deg, clifford_index(s.p, s.f, s.m));
  return {checked_mul(sub - 1, scale), checked_mul(sub + 1, scale)};
}

/// Divisor theta(1) p^(f-m) (p^f + 1) that some degree of cd(G|theta) must
/// have when the inertia quotient is PGL2(p^m), p odd, 2m | f, p^m != 3. The
/// degree itself is not determined, so only this divisibility is exposed.
inline u64 pgl2_case_divisor(u64 p, unsigned f, unsigned m, u64 theta_deg) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("pgl2_case_divisor: p must be an odd prime");
  if (m == 0 || f % (2 * m) != 0) throw std::invalid_argument("pgl2_case_divisor: 2m must divide f");
  if (checked_pow(p, m) == 3) throw std::invalid_argument("pgl2_case_divisor: p^m must not be 3");
  return checked_mul(checked_mul(theta_deg, checked_pow(p, f - m)), checked_pow(p, f) + 1);
}

inline bool pgl2_case_admits(u64 p, unsigned f, unsigned m, u64 theta_deg, u64 degree) {
  return degree % pgl2_case_divisor(p, f, m, theta_deg) == 0;
}

/// A group described at the level the classification needs.
struct GroupModel {
  struct Psl2 {
    PrimePower q;
  };
  struct Pgl2 {
    PrimePower q;
  };
  struct AbstractSolvable {
    DegreeSet cd;
  };
  struct DirectProduct {
    std::vector<GroupModel> factors;
  };

  std::variant<Psl2, Pgl2, AbstractSolvable, DirectProduct> kind;

  static GroupModel psl2(u64 p, unsigned f) {
    PrimePower pp{p, f};
    if (!is_prime(p) || f == 0) throw std::invalid_argument("psl2: p must be prime and f >= 1");
    detail::require_psl2_field(pp.value());
    return {Psl2{pp}};
  }
  static GroupModel pgl2(u64 p, unsigned f) {
    PrimePower pp{p, f};
    if (!is_prime(p) || f == 0) throw std::invalid_argument("pgl2: p must be prime and f >= 1");
    detail::require_psl2_field(pp.value());
    return {Pgl2{pp}};
  }
  static GroupModel solvable(DegreeSet cd) { return {AbstractSolvable{std::move(cd)}}; }
  static GroupModel product(std::vector<GroupModel> factors) {
    return {DirectProduct{std::move(factors)}};
  }
};

/// The degree set of a model. PGL2(q) resolves only for even q, where it
/// coincides with PSL2(q); almost-simple odd-q models carry no full cd set.
inline DegreeSet cd_of(const GroupModel& model) {
  return std::visit(
      [](const auto& k) -> DegreeSet {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, GroupModel::Psl2>) {
          return cd_psl2(k.q.value());
        } else if constexpr (std::is_same_v<T, GroupModel::Pgl2>) {
          if (k.q.p != 2) {
            throw std::invalid_argument("cd_of: PGL2(q) for odd q has no modelled degree set");
          }
          return cd_psl2(k.q.value());
        } else if constexpr (std::is_same_v<T, GroupModel::AbstractSolvable>) {
          return k.cd;
        } else {
          DegreeSet acc;
          for (const auto& f : k.factors) acc = degree_product(acc, cd_of(f));
          return acc;
        }
      },
      model.kind);
}

inline DegreeSet cd_direct_product(const std::vector<DegreeSet>& factors) {
  DegreeSet acc;
  for (const auto& f : factors) acc = degree_product(acc, f);
  return acc;
}

inline DegreeSet cd_direct_product(const std::vector<GroupModel>& models) {
  DegreeSet acc;
  for (const auto& m : models) acc = degree_product(acc, cd_of(m));
  return acc;
}

struct K3Group {
  std::string_view name;
  PrimeSet primes;
};

/// Simple groups whose order has exactly three prime divisors.
inline const std::vector<K3Group>& k3_group_table() {
  static const std::vector<K3Group> table = {
      {"A5", {2, 3, 5}},        {"A6", {2, 3, 5}},       {"PSL2(7)", {2, 3, 7}},
      {"PSL2(8)", {2, 3, 7}},   {"PSL2(17)", {2, 3, 17}}, {"PSL3(3)", {2, 3, 13}},
      {"PSU3(3)", {2, 3, 7}},   {"PSU4(2)", {2, 3, 5}},
  };
  return table;
}

inline std::optional<PrimeSet> k3_lookup(std::string_view name) {
  for (const auto& g : k3_group_table())
    if (g.name == name) return g.primes;
  return std::nullopt;
}

}  // namespace chargraph
