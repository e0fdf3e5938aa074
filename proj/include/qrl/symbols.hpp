#pragma once

// Power residue symbols of quadratic integers at split rational primes.
// A prime l with (d/l) = 1 has residue field F_l at each prime above it, so
// (alpha/p)_h is read off from alpha^((l-1)/h) mod l once sqrt d is embedded.

#include "qrl/modarith.hpp"
#include "qrl/pell.hpp"

#include <optional>
#include <string>

namespace qrl {

struct SymbolValue {
    RootOfUnityValue value;
    u64 prime = 0;
    /// Image of sqrt d used for the embedding.
    u64 root_used = 0;
    std::string subject;

    /// The convention-free predicate "is an h-th power residue".
    bool is_power() const { return value.is_one(); }
};

/// (sign * alpha / p)_h with p the prime above l where sqrt d -> root.
/// Requires h in {2,3,4}, l = 1 mod h, (d/l) = 1.
SymbolValue unit_symbol_at_root(const QuadraticInteger& alpha, u64 l, int h, int sign, u64 root);

/// unit_symbol_at_root with the canonical (smaller) square root of d.
/// Throws WrongResidueClass when l != 1 mod h, NotSplit when (d/l) != 1.
SymbolValue unit_symbol(const QuadraticInteger& alpha, u64 l, int h, int sign = 1);

inline SymbolValue unit_symbol(const QuadraticUnit& eps, u64 l, int h, int sign = 1)
{
    return unit_symbol(eps.value, l, h, sign);
}

/// (a/p)_4 in {+1, -1} for a prime p = 1 mod 4 and a quadratic residue a.
/// Throws NotQuadraticResidue when (a/p) != 1.
int rational_quartic(i64 a, u64 p);

/// x^3 - 3x - constant_term.
struct CubicPolynomial {
    i64 constant_term = 0;

    /// -4(-3)^3 - 27 C^2 = 108 - 27 C^2.
    i64 discriminant() const { return 108 - 27 * constant_term * constant_term; }
    u64 evaluate_mod(u64 x, u64 p) const;
};

/// Number of roots of f in F_p, via deg gcd(x^p - x, f). Throws BadPrime
/// when p divides 6 disc(f), InvalidArgument when p is not prime.
int cubic_root_count(const CubicPolynomial& f, u64 p);

/// Evaluates at the canonical root r and at l - r (i.e. the conjugate prime).
/// True iff the exponents are inverse and, when both are real, equal.
bool conjugation_check(const QuadraticInteger& alpha, u64 l, int h, int sign = 1);

} // namespace qrl
