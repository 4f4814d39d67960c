#pragma once

// Internal helpers for the primality tests: small factorizations and lattice
// saturation.

#include <optional>
#include <utility>
#include <vector>

#include "lu/polynomial.hpp"

namespace lu::detail {

/// A nontrivial factorization f = first * second, or nothing when f is
/// irreducible. Handles polynomials in one effective variable of degree <= 8
/// (degree <= 3 over F_p with p < 2^16) and in two effective variables of
/// total degree <= 3. Sets `decided` to false outside these classes.
std::optional<std::pair<Polynomial, Polynomial>> small_factor(const Polynomial& f,
                                                              bool& decided);

/// True when the integer lattice spanned by `rows` is saturated in Z^n
/// (all Smith invariant factors equal one).
bool lattice_saturated(const std::vector<std::vector<mpz_class>>& rows);

/// Exact quotient g / f; throws when f does not divide g.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

}  // namespace lu::detail
