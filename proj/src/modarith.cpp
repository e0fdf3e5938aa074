#include "qrl/modarith.hpp"

#include "qrl/error.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace qrl {

u64 reduce_mod(i64 a, u64 m)
{
    if (a >= 0)
        return static_cast<u64>(a) % m;
    // -(a+1) avoids negating INT64_MIN.
    u64 neg = (static_cast<u64>(-(a + 1)) % m + 1) % m;
    return neg == 0 ? 0 : m - neg;
}

u64 mul_mod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 mod_pow(i64 base, u64 exp, u64 modulus)
{
    if (modulus < 2)
        throw Error(ErrorKind::InvalidArgument, "mod_pow: modulus must be >= 2");
    u64 b = reduce_mod(base, modulus);
    u64 result = 1;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        exp >>= 1;
    }
    return result;
}

u64 inv_mod(i64 a, u64 m)
{
    // Extended Euclid on signed 128-bit values.
    __int128 r0 = static_cast<__int128>(m), r1 = reduce_mod(a, m);
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1)
        throw Error(ErrorKind::InvalidArgument, "inv_mod: argument not invertible");
    __int128 mm = static_cast<__int128>(m);
    return static_cast<u64>(((s0 % mm) + mm) % mm);
}

int jacobi(i64 a, i64 n)
{
    if (n <= 0 || n % 2 == 0)
        throw Error(ErrorKind::InvalidArgument,
                    "jacobi: modulus must be odd and positive, got " + std::to_string(n));
    u64 nn = static_cast<u64>(n);
    u64 aa = reduce_mod(a, nn);
    int t = 1;
    while (aa != 0) {
        while (aa % 2 == 0) {
            aa /= 2;
            u64 r = nn % 8;
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(aa, nn);
        if (aa % 4 == 3 && nn % 4 == 3)
            t = -t;
        aa %= nn;
    }
    return nn == 1 ? t : 0;
}

int kronecker(i64 d, i64 n)
{
    if (n <= 0)
        throw Error(ErrorKind::InvalidArgument, "kronecker: n must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (d % 2 == 0)
            return 0;
        i64 r = static_cast<i64>(reduce_mod(d, 8));
        if (r == 3 || r == 5)
            result = -result;
    }
    return result * jacobi(d, n);
}

u64 sqrt_mod(i64 a, u64 p)
{
    if (p == 2 || p % 2 == 0)
        throw Error(ErrorKind::InvalidArgument, "sqrt_mod: modulus must be an odd prime");
    u64 x = reduce_mod(a, p);
    if (jacobi(static_cast<i64>(x), static_cast<i64>(p)) != 1)
        throw Error(ErrorKind::NotAResidue,
                    std::to_string(a) + " is not a quadratic residue mod " + std::to_string(p));

    u64 q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    u64 z = 2;
    while (jacobi(static_cast<i64>(z), static_cast<i64>(p)) != -1)
        ++z;

    u64 m = s;
    u64 c = mod_pow(static_cast<i64>(z), q, p);
    u64 t = mod_pow(static_cast<i64>(x), q, p);
    u64 r = mod_pow(static_cast<i64>(x), (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0;
        u64 tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j)
            b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r <= p - r ? r : p - r;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned r)
{
    u64 x = mod_pow(static_cast<i64>(a % n), d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

} // namespace

bool is_prime(u64 n)
{
    constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (u64 b : bases) {
        if (n == b)
            return true;
        if (n % b == 0)
            return false;
    }
    u64 d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (u64 b : bases)
        if (miller_rabin_witness(n, b, d, r))
            return false;
    return true;
}

std::vector<u64> primes_up_to(u64 limit)
{
    std::vector<u64> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

bool is_squarefree(i64 n)
{
    u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    if (m == 0)
        return false;
    for (u64 p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        m /= p;
        if (m % p == 0)
            return false;
    }
    return true;
}

u64 isqrt(u64 n)
{
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n)
        --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_square(u64 n)
{
    u64 r = isqrt(n);
    return r * r == n;
}

i64 gcd(i64 a, i64 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int RootOfUnityValue::real_sign() const
{
    if (exponent == 0)
        return 1;
    if (order % 2 == 0 && exponent == order / 2)
        return -1;
    return 0;
}

namespace {

void check_order(u64 p, int h)
{
    if (h != 2 && h != 3 && h != 4)
        throw Error(ErrorKind::InvalidArgument, "root order must be 2, 3 or 4");
    if (p < 3 || (p - 1) % static_cast<u64>(h) != 0)
        throw Error(ErrorKind::WrongResidueClass,
                    std::to_string(p) + " is not 1 mod " + std::to_string(h));
}

} // namespace

u64 canonical_root_of_unity(u64 p, int h)
{
    check_order(p, h);
    switch (h) {
    case 2:
        return p - 1;
    case 4:
        return sqrt_mod(-1, p);
    default: {
        // Roots of x^2 + x + 1: (-1 +- sqrt(-3)) / 2.
        u64 s = sqrt_mod(-3, p);
        u64 half = inv_mod(2, p);
        u64 r1 = mul_mod((p - 1 + s) % p, half, p);
        u64 r2 = mul_mod((p - 1 + (p - s)) % p, half, p);
        return r1 < r2 ? r1 : r2;
    }
    }
}

RootOfUnityValue classify_root_of_unity(u64 v, u64 p, int h)
{
    check_order(p, h);
    v %= p;
    if (mod_pow(static_cast<i64>(v), static_cast<u64>(h), p) != 1)
        throw Error(ErrorKind::NotARootOfUnity,
                    std::to_string(v) + "^" + std::to_string(h) + " != 1 mod " + std::to_string(p));
    u64 zeta = canonical_root_of_unity(p, h);
    u64 power = 1;
    for (int e = 0; e < h; ++e) {
        if (power == v)
            return RootOfUnityValue{h, e, RootConvention::CanonicalMinRoot};
        power = mul_mod(power, zeta, p);
    }
    // Unreachable for prime p: the h-th roots of unity are exactly zeta^e.
    throw Error(ErrorKind::NotARootOfUnity, "residue is not a power of the canonical root");
}

} // namespace qrl
