#include "fkext/polynomial.hpp"

#include "fkext/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fkext {

double Cubic::operator()(double x) const {
  return ((to_double(c3) * x + to_double(c2)) * x + to_double(c1)) * x + to_double(c0);
}

Cubic charpoly3(const QuotientMatrix& b) {
  if (b.order != 3) throw DomainError("charpoly3 needs a 3x3 matrix, got order " + std::to_string(b.order));
  const Rational trace = b(0, 0) + b(1, 1) + b(2, 2);
  const Rational minors = (b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0)) + (b(0, 0) * b(2, 2) - b(0, 2) * b(2, 0)) +
                          (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1));
  const Rational det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                       b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                       b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
  return Cubic{1, -trace, minors, -det};
}

double largest_real_root(const Cubic& c, double tol) {
  const double a2 = to_double(c.c2 / c.c3);
  const double a1 = to_double(c.c1 / c.c3);
  const double a0 = to_double(c.c0 / c.c3);
  auto f = [&](double x) { return ((x + a2) * x + a1) * x + a0; };
  // Sign of c at x; falls back to exact evaluation inside the rounding band.
  auto sign = [&](double x) {
    const double v = f(x);
    const double ax = std::abs(x);
    const double scale = ((ax + std::abs(a2)) * ax + std::abs(a1)) * ax + std::abs(a0);
    if (std::abs(v) > 8 * std::numeric_limits<double>::epsilon() * scale) return v > 0 ? 1 : -1;
    const Rational exact = c(Rational(x)) / c.c3;
    return exact > 0 ? 1 : (exact < 0 ? -1 : 0);
  };

  const double bound = 1.0 + std::max({std::abs(a2), std::abs(a1), std::abs(a0)});
  double lo = -bound;
  double hi = bound;

  // f' = 3x^2 + 2 a2 x + a1. With two critical points x- < x+, the largest
  // root sits right of x+ when f(x+) <= 0 and left of x- otherwise.
  const double disc = a2 * a2 - 3.0 * a1;
  if (disc > 0) {
    const double root = std::sqrt(disc);
    const double x_minus = (-a2 - root) / 3.0;
    const double x_plus = (-a2 + root) / 3.0;
    if (sign(x_plus) <= 0) {
      lo = x_plus;
    } else {
      hi = x_minus;
    }
  }

  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (sign(mid) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 0.25 * tol * std::max(1.0, std::abs(lo))) break;
  }
  return 0.5 * (lo + hi);
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::f2: return "f2";
    case Family::f_pi_1: return "f_pi_1";
    case Family::f_pi_prime_1: return "f_pi_prime_1";
    case Family::f3_q: return "f3_q";
    case Family::phi_b1: return "phi_B1";
    case Family::phi_b3_case1: return "phi_B3_case1";
    case Family::phi_b3_case2: return "phi_B3_case2";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  if (name == "phi_b1") return Family::phi_b1;
  if (name == "phi_b3_case1") return Family::phi_b3_case1;
  if (name == "phi_b3_case2") return Family::phi_b3_case2;
  return std::nullopt;
}

bool in_region(Family f, const FamilyParams& p) {
  const int n = p.n;
  const int k = p.k;
  const int s = p.s;
  const int d = p.delta;
  if (k < 1) return false;
  switch (f) {
    case Family::f2: return n >= 2 * k + 2;
    case Family::f_pi_1:
    case Family::phi_b1: return s >= 2 * k && n >= 2 * s - 2 * k + 2;
    case Family::f_pi_prime_1: return s >= 2 * k + 1 && (n == 0 || n == 2 * s - 2 * k + 1);
    case Family::f3_q:
    case Family::phi_b3_case1: return d >= 2 * k + 1 && n >= 2 * d - 2 * k + 2;
    case Family::phi_b3_case2: return d >= 2 * k + 1 && s >= d + 1 && (n == 0 || n == 2 * s - 2 * k + 1);
  }
  return false;
}

namespace {

void require_region(Family f, const FamilyParams& p) {
  if (!in_region(f, p)) {
    throw DomainError(std::string(family_name(f)) + ": parameters outside validity region (n=" + std::to_string(p.n) +
                      " k=" + std::to_string(p.k) + " s=" + std::to_string(p.s) +
                      " delta=" + std::to_string(p.delta) + ")");
  }
}

// Q(G1) over the positional partition; shared by f_pi_1 and f3_q.
Cubic signless_join_polynomial(const Rational& n, const Rational& k, const Rational& s) {
  Cubic c;
  c.c2 = s - 3 * n - 4 * k + 6;
  c.c1 = -4 * s * s + (8 * k + n - 4) * s + 4 * k * n - 8 * n - 8 * k + 2 * n * n + 8;
  c.c0 = -2 * s * s * s + (8 * k + 4 * n - 10) * s * s + (-8 * k * k - 8 * k * n + 20 * k - 2 * n * n + 10 * n - 12) * s;
  return c;
}

// D(G1) over the positional partition; shared by phi_B1 and phi_B3.
Cubic distance_join_polynomial(const Rational& n, const Rational& k, const Rational& s) {
  Cubic c;
  c.c2 = 2 * k - n - s + 3;
  c.c1 = 5 * s * s - 14 * k * s - 2 * n * s + 8 * k * k + 4 * k * n + 6 * s - 6 * k - 5 * n + 6;
  c.c0 = -2 * s * s * s + 6 * k * s * s + n * s * s + 2 * s * s - 4 * k * k * s - 2 * k * n * s - 10 * k * s - n * s +
         6 * s + 8 * k * k + 4 * k * n - 8 * k - 4 * n + 4;
  return c;
}

}  // namespace

Cubic closed_form(Family f, const FamilyParams& p) {
  require_region(f, p);
  const Rational n = p.n;
  const Rational k = p.k;
  const Rational s = p.s;
  const Rational d = p.delta;
  Cubic c;
  switch (f) {
    case Family::f2:
      c.c2 = 6 - 2 * k - 3 * n;
      c.c1 = 6 * n * k - 16 * k + 2 * n * n - 8 * n + 8;
      c.c0 = (-4 * n * n + 20 * n - 24) * k;
      return c;
    case Family::f_pi_1: return signless_join_polynomial(n, k, s);
    case Family::f_pi_prime_1:
      c.c2 = 2 * k - 5 * s + 1;
      c.c1 = 6 * s * s - 2 * k * s - 3 * s;
      c.c0 = -2 * s * s * s + 2 * s * s;
      return c;
    case Family::f3_q: return signless_join_polynomial(n, k, d);
    case Family::phi_b1: return distance_join_polynomial(n, k, s);
    case Family::phi_b3_case1: return distance_join_polynomial(n, k, d);
    case Family::phi_b3_case2:
      c.c2 = 4 * k - d - 2 * s + 2;
      c.c1 = 4 * d + 8 * k - 10 * s - 10 * d * k - 4 * d * s + 8 * k * s + 5 * d * d + 1;
      c.c0 = 5 * d + 4 * k - 8 * s - 10 * d * k - 2 * d * s + 8 * k * s + 4 * d * d * k + 2 * d * d * s + 3 * d * d -
             2 * d * d * d - 4 * d * k * s;
      return c;
  }
  return c;
}

FamilySource family_source(Family f, const FamilyParams& p) {
  require_region(f, p);
  const int n = p.n;
  const int k = p.k;
  const int s = p.s;
  const int d = p.delta;
  switch (f) {
    case Family::f2:
      return {ExtremalParams(n, k, 2 * k), MatrixKind::signless_laplacian, {2 * k, n - 2 * k - 1, 1}};
    case Family::f_pi_1:
      return {ExtremalParams(n, k, s), MatrixKind::signless_laplacian, {s, n - 2 * s + 2 * k - 1, s - 2 * k + 1}};
    case Family::f_pi_prime_1:
      return {ExtremalParams(2 * s - 2 * k + 1, k, s), MatrixKind::signless_laplacian, {s, s - 2 * k, 1}};
    case Family::f3_q:
      return {ExtremalParams(n, k, d), MatrixKind::signless_laplacian, {d, n - 2 * d + 2 * k - 1, d - 2 * k + 1}};
    case Family::phi_b1:
      return {ExtremalParams(n, k, s), MatrixKind::distance, {s, n - 2 * s + 2 * k - 1, s - 2 * k + 1}};
    case Family::phi_b3_case1:
      return {ExtremalParams(n, k, d), MatrixKind::distance, {d, n - 2 * d + 2 * k - 1, d - 2 * k + 1}};
    case Family::phi_b3_case2:
      return {ExtremalParams(2 * s - 2 * k + 1, k, d), MatrixKind::distance, {d, 2 * s - 2 * d, d - 2 * k + 1}};
  }
  throw DomainError("unknown family");
}

Cubic quotient_polynomial(Family f, const FamilyParams& p) {
  const auto src = family_source(f, p);
  const auto m = src.graph.n() <= kMaxVertices ? build_matrix(extremal_graph(src.graph), src.kind)
                                               : extremal_matrix(src.graph, src.kind);
  const auto b = quotient(m, Partition::contiguous(src.block_sizes));
  if (!b.equitable) {
    throw DomainError(std::string(family_name(f)) + ": positional partition is not equitable");
  }
  return charpoly3(b);
}

std::string to_string(const Cubic& c) {
  std::string out;
  for (const auto& coeff : c.coefficients()) {
    if (!out.empty()) out += ", ";
    out += to_string(coeff);
  }
  return out;
}

}  // namespace fkext
