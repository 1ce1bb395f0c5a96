#pragma once

#include "fkext/graph.hpp"
#include "fkext/rational.hpp"
#include "fkext/spectral.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fkext {

/// Monic cubic x^3 + c2 x^2 + c1 x + c0 with exact coefficients.
struct Cubic {
  Rational c3 = 1;
  Rational c2 = 0;
  Rational c1 = 0;
  Rational c0 = 0;

  /// Highest degree first.
  std::array<Rational, 4> coefficients() const { return {c3, c2, c1, c0}; }
  Rational operator()(const Rational& x) const { return ((c3 * x + c2) * x + c1) * x + c0; }
  double operator()(double x) const;

  friend bool operator==(const Cubic&, const Cubic&) = default;
};

/// det(xI - B) for a 3x3 quotient matrix. Throws DomainError for other orders.
Cubic charpoly3(const QuotientMatrix& b);

/// Largest real root, bracketed by the Cauchy bound and refined by bisection.
double largest_real_root(const Cubic& c, double tol = kDefaultTolerance);

/// The closed-form characteristic polynomials of the extremal families.
enum class Family {
  f2,              // Q(K_2k v (K_{n-2k-1} u K_1)), positional partition
  f_pi_1,          // Q(G1), n >= 2s-2k+2, positional partition
  f_pi_prime_1,    // Q(G1), n = 2s-2k+1, blocks (K_s, (s-2k)K_1, K_1)
  f3_q,            // Q(G3), n >= 2delta-2k+2
  phi_b1,          // D(G1), n >= 2s-2k+2
  phi_b3_case1,    // D(G3), n >= 2delta-2k+2
  phi_b3_case2,    // D(G3) at n = 2s-2k+1, s >= delta+1
};

inline constexpr std::array<Family, 7> kAllFamilies = {
    Family::f2,     Family::f_pi_1,       Family::f_pi_prime_1, Family::f3_q,
    Family::phi_b1, Family::phi_b3_case1, Family::phi_b3_case2,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Unused fields are ignored by families that do not take them.
struct FamilyParams {
  int n = 0;
  int k = 0;
  int s = 0;
  int delta = 0;
};

/// True iff params lie in the family's validity region.
bool in_region(Family f, const FamilyParams& p);

/// Closed-form coefficients. Throws DomainError outside the validity region.
Cubic closed_form(Family f, const FamilyParams& p);

/// The extremal graph, matrix kind and partition the family's quotient is taken over.
struct FamilySource {
  ExtremalParams graph;
  MatrixKind kind;
  std::vector<int> block_sizes;
};

/// Throws DomainError outside the validity region.
FamilySource family_source(Family f, const FamilyParams& p);

/// charpoly3(quotient(matrix, partition)) computed from the constructed matrix.
Cubic quotient_polynomial(Family f, const FamilyParams& p);

std::string to_string(const Cubic& c);

}  // namespace fkext
