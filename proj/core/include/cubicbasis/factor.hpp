#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cubicbasis/poly.hpp"

namespace cubic {

using Rng = std::mt19937_64;

/// Complete factorization a = unit * prod factors[i].first ^ factors[i].second
/// into monic irreducibles, sorted canonically.
struct Factorization {
  FElem unit;
  std::vector<std::pair<Poly, int>> factors;

  Poly product(const Field& f) const;
};

/// Cantor-Zassenhaus pipeline: squarefree split, distinct-degree, seeded
/// equal-degree splitting. Every factor is re-checked irreducible and the
/// product is re-checked against the input.
Factorization factor(const Poly& a, std::uint64_t seed = 0);

bool is_irreducible(const Poly& a);
bool is_squarefree(const Poly& a);

/// Split of the squarefree/cube-free structure: a = unit * beta1 * beta2^2
/// with beta1, beta2 squarefree, or a witness prime with exponent >= 3.
struct SqfreeCubefree {
  Poly beta1, beta2;
  std::optional<Poly> cube_witness;
};
SqfreeCubefree sqfree_cubefree(const Poly& a, std::uint64_t seed = 0);

/// Chinese remainder: unique solution of x = r_i mod m_i of degree
/// < sum deg m_i. Moduli must be pairwise coprime and nonconstant.
Poly crt(const std::vector<std::pair<Poly, Poly>>& residue_modulus);

/// b with a*b = 1 mod m, deg b < deg m.
Poly mod_inverse(const Poly& a, const Poly& m);

/// Discriminant of the monic cubic X^3 + bX^2 + cX + d.
Poly cubic_disc(const Poly& b, const Poly& c, const Poly& d);

Poly random_poly(const Field& f, int max_degree, Rng& rng);

}  // namespace cubic
