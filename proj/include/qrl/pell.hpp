#pragma once

// Units of real quadratic fields Q(sqrt d), stored in half coordinates
// (t + u sqrt d) / 2 so that d = 1 mod 4 and d = 2, 3 mod 4 share one type.

#include "qrl/modarith.hpp"

#include <gmpxx.h>

#include <string>

namespace qrl {

/// The algebraic integer (t + u sqrt d) / 2 of Q(sqrt d), t = u d mod 2.
struct QuadraticInteger {
    i64 d = 2;
    mpz_class t;
    mpz_class u;

    /// (t^2 - d u^2) / 4.
    mpz_class norm() const;
    QuadraticInteger conjugate() const { return {d, t, -u}; }
    QuadraticInteger negated() const { return {d, -t, -u}; }

    /// "25 + 4*sqrt(39)" or "(25 + 3*sqrt(69))/2".
    std::string to_string() const;

    friend bool operator==(const QuadraticInteger& x, const QuadraticInteger& y)
    {
        return x.d == y.d && x.t == y.t && x.u == y.u;
    }
};

QuadraticInteger multiply(const QuadraticInteger& x, const QuadraticInteger& y);
QuadraticInteger power(const QuadraticInteger& x, unsigned k);

/// A fundamental unit eps > 1 with t^2 - d u^2 = 4 * norm.
struct QuadraticUnit {
    QuadraticInteger value;
    int norm = 1;

    i64 d() const { return value.d; }
    const mpz_class& t() const { return value.t; }
    const mpz_class& u() const { return value.u; }
};

inline constexpr long kDefaultPellIterations = 1'000'000;

/// Fundamental unit of the maximal order of Q(sqrt d) from the continued
/// fraction of (1 + sqrt d)/2 (d = 1 mod 4) or sqrt d (otherwise).
/// Throws NotSquarefree, InvalidArgument for d <= 1, and RegulatorTooLarge
/// after `max_steps` partial quotients.
QuadraticUnit fundamental_unit(i64 d, long max_steps = kDefaultPellIterations);

/// s in {+1, -1} with s * eps = 1 mod 4, for eps = T + U sqrt d with
/// U = 0 mod 4 and T odd. Throws NotCongruentPlusMinusOne otherwise.
int normalize_sign(const QuadraticInteger& eps);

/// Image of (t + u sqrt d)/2 in F_l under sqrt d -> root.
/// Throws NotSplit when (d/l) != 1 and RootMismatch when root^2 != d.
u64 unit_mod_prime(const QuadraticInteger& eps, u64 l, u64 root);

} // namespace qrl
