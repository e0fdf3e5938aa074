#include "qrl/modarith.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace qrl;
using qrl::ErrorKind;

TEST(ModPow, Examples)
{
    EXPECT_EQ(mod_pow(2, 10, 1000), 24u);
    EXPECT_EQ(mod_pow(5, 0, 7), 1u);
    EXPECT_EQ(mod_pow(81, 39, 157), 1u);
    EXPECT_EQ(mod_pow(-2, 3, 7), 6u);
}

TEST(ModPow, RejectsModulusBelowTwo)
{
    EXPECT_QRL_ERROR(mod_pow(3, 2, 1), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(mod_pow(3, 2, 0), ErrorKind::InvalidArgument);
}

TEST(ModPow, MatchesRepeatedMultiplicationForSmallModuli)
{
    for (u64 m = 2; m <= 100; ++m)
        for (i64 b = -m; b < static_cast<i64>(m); ++b)
            for (u64 e = 0; e <= 30; ++e)
                ASSERT_EQ(mod_pow(b, e, m), oracle::naive_pow(b, e, m)) << b << "^" << e << " mod " << m;
}

TEST(ModPow, LargeModulusAgreesWithOracle)
{
    oracle::Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const u64 m = rng.uniform_u(2, (1ull << 62));
        const i64 b = rng.uniform(-(1ll << 62), 1ll << 62);
        const u64 e = rng.uniform_u(0, 1ull << 40);
        ASSERT_EQ(mod_pow(b, e, m), oracle::fast_pow(b, e, m));
    }
}

TEST(Jacobi, Examples)
{
    EXPECT_EQ(jacobi(17, 13), 1);
    EXPECT_EQ(jacobi(-23, 13), 1);
    for (i64 a : {-5, 0, 1, 7, 1000})
        EXPECT_EQ(jacobi(a, 1), 1);
    EXPECT_EQ(jacobi(3, 9), 0);
    EXPECT_EQ(jacobi(2, 15), 1);
    EXPECT_EQ(jacobi(7, 15), -1);
}

TEST(Jacobi, RejectsEvenOrNonpositiveModulus)
{
    EXPECT_QRL_ERROR(jacobi(3, 8), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(jacobi(3, 0), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(jacobi(3, -7), ErrorKind::InvalidArgument);
}

TEST(Jacobi, AgreesWithFactoringOracle)
{
    oracle::Rng rng(5);
    for (int i = 0; i < 20000; ++i) {
        const i64 n = 2 * rng.uniform(0, 499'999) + 1;
        const i64 a = rng.uniform(-2'000'000, 2'000'000);
        ASSERT_EQ(jacobi(a, n), oracle::jacobi_by_factoring(a, static_cast<u64>(n))) << a << "/" << n;
    }
}

TEST(Jacobi, MultiplicativeInTopArgument)
{
    oracle::Rng rng(7);
    for (int i = 0; i < 20000; ++i) {
        const i64 n = 2 * rng.uniform(0, 499'999) + 1;
        const i64 a = rng.uniform(-1'000'000, 1'000'000);
        const i64 b = rng.uniform(-1'000'000, 1'000'000);
        ASSERT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n)) << a << "," << b << " / " << n;
    }
}

TEST(Kronecker, AgreesWithFactoringOracle)
{
    for (i64 D : {-3, -4, -7, -8, -23, -31, -39, -68, -111, -156, -444, 5, 12, 13, 17})
        for (u64 n = 1; n < 600; ++n)
            ASSERT_EQ(kronecker(D, static_cast<i64>(n)), oracle::kronecker(D, n)) << D << "/" << n;
}

TEST(SqrtMod, Examples)
{
    EXPECT_EQ(sqrt_mod(4, 13), 2u);
    EXPECT_EQ(sqrt_mod(39, 61), 10u);
    EXPECT_EQ(sqrt_mod(39, 157), 14u);
}

TEST(SqrtMod, Errors)
{
    EXPECT_QRL_ERROR(sqrt_mod(2, 13), ErrorKind::NotAResidue);
    EXPECT_QRL_ERROR(sqrt_mod(13, 13), ErrorKind::NotAResidue);
    EXPECT_QRL_ERROR(sqrt_mod(1, 2), ErrorKind::InvalidArgument);
}

TEST(SqrtMod, CanonicalSmallerRootForAllResidues)
{
    const auto prime = oracle::sieve(3000);
    for (u64 p = 3; p < prime.size(); ++p) {
        if (!prime[p])
            continue;
        for (u64 a = 1; a < p; ++a) {
            if (oracle::legendre(static_cast<i64>(a), p) != 1)
                continue;
            const u64 r = sqrt_mod(static_cast<i64>(a), p);
            ASSERT_GT(r, 0u);
            ASSERT_LE(r, (p - 1) / 2);
            ASSERT_EQ(r * r % p, a) << "sqrt(" << a << ") mod " << p;
        }
    }
}

TEST(SqrtMod, LargePrimes)
{
    oracle::Rng rng(3);
    int checked = 0;
    while (checked < 100) {
        const u64 p = rng.uniform_u(1ull << 34, 1ull << 40) | 1;
        if (!oracle::trial_division_prime(p))
            continue;
        const i64 a = static_cast<i64>(rng.uniform_u(1, p - 1));
        if (oracle::legendre(a, p) != 1)
            continue;
        const u64 r = sqrt_mod(a, p);
        ASSERT_LE(r, (p - 1) / 2);
        ASSERT_EQ(static_cast<u64>(static_cast<unsigned __int128>(r) * r % p), static_cast<u64>(a));
        ++checked;
    }
}

TEST(IsPrime, Examples)
{
    EXPECT_TRUE(is_prime(61));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(2183));
    EXPECT_FALSE(is_prime(0));
    EXPECT_TRUE(is_prime(2));
}

TEST(IsPrime, AgreesWithSieve)
{
    const auto prime = oracle::sieve(1'000'000);
    for (u64 n = 0; n < prime.size(); ++n)
        ASSERT_EQ(is_prime(n), static_cast<bool>(prime[n])) << n;
}

TEST(IsPrime, StrongPseudoprimesAndLargeValues)
{
    // Strong pseudoprimes to several small base sets, plus Carmichael numbers.
    for (u64 n : {561ull, 1105ull, 3215031751ull, 2152302898747ull, 3474749660383ull,
                  341550071728321ull, 3825123056546413051ull})
        EXPECT_FALSE(is_prime(n)) << n;
    EXPECT_TRUE(is_prime(18446744073709551557ull));
    EXPECT_FALSE(is_prime(18446744073709551615ull));
    EXPECT_TRUE(is_prime((1ull << 61) - 1));
    oracle::Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const u64 n = rng.uniform_u(1ull << 30, 1ull << 38);
        ASSERT_EQ(is_prime(n), oracle::trial_division_prime(n)) << n;
    }
}

TEST(PrimesUpTo, MatchesSieve)
{
    const auto prime = oracle::sieve(10000);
    std::vector<u64> expected;
    for (u64 n = 0; n <= 10000; ++n)
        if (prime[n])
            expected.push_back(n);
    EXPECT_EQ(primes_up_to(10000), expected);
    EXPECT_TRUE(primes_up_to(1).empty());
}

TEST(Squarefree, AgreesWithFactoring)
{
    for (i64 n = 1; n < 5000; ++n) {
        ASSERT_EQ(is_squarefree(n), oracle::squarefree(static_cast<u64>(n))) << n;
        ASSERT_EQ(is_squarefree(-n), oracle::squarefree(static_cast<u64>(n))) << -n;
    }
    EXPECT_FALSE(is_squarefree(0));
}

TEST(Isqrt, Boundaries)
{
    for (u64 r : {0ull, 1ull, 2ull, 1000ull, 4294967295ull}) {
        EXPECT_EQ(isqrt(r * r), r);
        if (r > 0)
            EXPECT_EQ(isqrt(r * r - 1), r - 1);
        EXPECT_TRUE(is_square(r * r));
    }
    EXPECT_EQ(isqrt(~0ull), 4294967295ull);
    EXPECT_FALSE(is_square(2));
}

TEST(InvMod, InverseOrError)
{
    for (u64 m : {7ull, 61ull, 1000ull})
        for (i64 a = 1; a < static_cast<i64>(m); ++a)
            if (std::gcd<u64, u64>(a, m) == 1)
                ASSERT_EQ(static_cast<u64>(a) * inv_mod(a, m) % m, 1u);
    EXPECT_QRL_ERROR(inv_mod(4, 8), ErrorKind::InvalidArgument);
}

TEST(RootOfUnity, Examples)
{
    EXPECT_EQ(classify_root_of_unity(1, 13, 3).exponent, 0);
    const RootOfUnityValue minus_one = classify_root_of_unity(60, 61, 4);
    EXPECT_EQ(minus_one.exponent, 2);
    EXPECT_EQ(minus_one.real_sign(), -1);
    const RootOfUnityValue cube = classify_root_of_unity(9, 13, 3);
    EXPECT_NE(cube.exponent, 0);
    EXPECT_EQ(cube.convention, RootConvention::CanonicalMinRoot);
    EXPECT_EQ(cube.real_sign(), 0);
    EXPECT_EQ(classify_root_of_unity(12, 13, 2).exponent, 1);
}

TEST(RootOfUnity, Errors)
{
    EXPECT_QRL_ERROR(classify_root_of_unity(2, 13, 3), ErrorKind::NotARootOfUnity);
    EXPECT_QRL_ERROR(classify_root_of_unity(1, 7, 4), ErrorKind::WrongResidueClass);
    EXPECT_QRL_ERROR(classify_root_of_unity(1, 13, 5), ErrorKind::InvalidArgument);
}

TEST(RootOfUnity, CanonicalRootIsSmallestOfExactOrder)
{
    const auto prime = oracle::sieve(5000);
    for (u64 p = 5; p < prime.size(); ++p) {
        if (!prime[p])
            continue;
        for (int h : {3, 4})
            if ((p - 1) % h == 0)
                ASSERT_EQ(canonical_root_of_unity(p, h), oracle::smallest_element_of_order(p, h))
                    << p << " h=" << h;
    }
}

TEST(RootOfUnity, ExponentRecoveredFromPrimitiveRootPowers)
{
    const auto prime = oracle::sieve(10000);
    int sampled = 0;
    for (u64 p = 13; p < prime.size(); p += 12) {
        if (!prime[p])
            continue;
        ++sampled;
        const u64 g = oracle::primitive_root(p);
        for (int h : {2, 3, 4}) {
            // g^{(p-1)/h} is some primitive h-th root; map exponents through it.
            const u64 base = oracle::fast_pow(static_cast<i64>(g), (p - 1) / h, p);
            const int base_exp = oracle::discrete_log_in_roots(base, p, h);
            for (int e = 0; e < h; ++e) {
                const u64 v = mod_pow(static_cast<i64>(g), (p - 1) / h * e, p);
                ASSERT_EQ(classify_root_of_unity(v, p, h).exponent, (base_exp * e) % h)
                    << "p=" << p << " h=" << h << " e=" << e;
            }
        }
    }
    EXPECT_GT(sampled, 100);
}
