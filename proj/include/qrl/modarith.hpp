#pragma once

// Modular arithmetic on word-sized moduli. Products go through unsigned
// __int128, so every routine here is exact for moduli below 2^64.

#include <compare>
#include <cstdint>
#include <vector>

namespace qrl {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Representative of a in [0, m).
u64 reduce_mod(i64 a, u64 m);

u64 mul_mod(u64 a, u64 b, u64 m);

/// base^exp mod modulus, result in [0, modulus). Negative bases are reduced
/// first. Throws InvalidArgument when modulus < 2.
u64 mod_pow(i64 base, u64 exp, u64 modulus);

/// Inverse of a modulo m. Throws InvalidArgument when gcd(a, m) != 1.
u64 inv_mod(i64 a, u64 m);

/// Jacobi symbol (a/n) for odd n >= 1. Throws InvalidArgument otherwise.
int jacobi(i64 a, i64 n);

/// Kronecker symbol (D/n) for n >= 1, extending Jacobi to even n.
int kronecker(i64 d, i64 n);

/// Square root of a modulo an odd prime p, canonicalized to the smaller of
/// the two roots, i.e. r in (0, (p-1)/2]. Tonelli-Shanks with the smallest
/// quadratic non-residue, so the result is deterministic anyway.
u64 sqrt_mod(i64 a, u64 p);

/// Deterministic for every n < 2^64 (Miller-Rabin with the first twelve
/// primes as bases).
bool is_prime(u64 n);

/// Primes p <= limit in ascending order (Eratosthenes).
std::vector<u64> primes_up_to(u64 limit);

bool is_squarefree(i64 n);

/// floor(sqrt(n)) for n >= 0.
u64 isqrt(u64 n);
bool is_square(u64 n);

i64 gcd(i64 a, i64 b);

enum class RootConvention {
    /// zeta_h is the numerically smaller of the two primitive h-th roots
    /// modulo p (h = 3, 4). For h = 2 there is only -1.
    CanonicalMinRoot,
};

/// zeta^exponent for the conventionally chosen primitive root zeta of order h.
struct RootOfUnityValue {
    int order = 1;
    int exponent = 0;
    RootConvention convention = RootConvention::CanonicalMinRoot;

    bool is_one() const { return exponent == 0; }
    /// +1 / -1 when the value is real, 0 when it is a primitive root of
    /// order > 2 (e.g. +-i or a cube root of unity).
    int real_sign() const;

    friend bool operator==(const RootOfUnityValue&, const RootOfUnityValue&) = default;
};

/// The canonical primitive h-th root of unity mod p, h in {2, 3, 4}.
/// Requires p prime with p = 1 mod h (WrongResidueClass otherwise).
u64 canonical_root_of_unity(u64 p, int h);

/// Converts an Euler-criterion residue v (with v^h = 1 mod p) to zeta^e.
/// Throws NotARootOfUnity when v^h != 1 and WrongResidueClass when
/// p != 1 mod h.
RootOfUnityValue classify_root_of_unity(u64 v, u64 p, int h);

} // namespace qrl
