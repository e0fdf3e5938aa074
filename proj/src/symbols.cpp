#include "qrl/symbols.hpp"

#include "qrl/error.hpp"

#include <array>
#include <string>
#include <vector>

namespace qrl {

namespace {

void check_symbol_args(i64 d, u64 l, int h, int sign)
{
    if (h != 2 && h != 3 && h != 4)
        throw Error(ErrorKind::InvalidArgument, "symbol order must be 2, 3 or 4");
    if (sign != 1 && sign != -1)
        throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
    if (l < 3 || !is_prime(l))
        throw Error(ErrorKind::InvalidArgument, std::to_string(l) + " is not an odd prime");
    if ((l - 1) % static_cast<u64>(h) != 0)
        throw Error(ErrorKind::WrongResidueClass,
                    std::to_string(l) + " is not 1 mod " + std::to_string(h));
    if (jacobi(d, static_cast<i64>(l)) != 1)
        throw Error(ErrorKind::NotSplit, std::to_string(l) + " does not split in Q(sqrt " +
                                             std::to_string(d) + ")");
}

std::string describe(const QuadraticInteger& alpha, int sign)
{
    return sign < 0 ? "-(" + alpha.to_string() + ")" : alpha.to_string();
}

} // namespace

SymbolValue unit_symbol_at_root(const QuadraticInteger& alpha, u64 l, int h, int sign, u64 root)
{
    check_symbol_args(alpha.d, l, h, sign);
    u64 v = unit_mod_prime(alpha, l, root);
    if (sign < 0)
        v = (l - v) % l;
    if (v == 0)
        throw Error(ErrorKind::InvalidArgument, "element is divisible by a prime above " +
                                                    std::to_string(l));
    const u64 euler = mod_pow(static_cast<i64>(v), (l - 1) / static_cast<u64>(h), l);
    return SymbolValue{classify_root_of_unity(euler, l, h), l, root, describe(alpha, sign)};
}

SymbolValue unit_symbol(const QuadraticInteger& alpha, u64 l, int h, int sign)
{
    check_symbol_args(alpha.d, l, h, sign);
    return unit_symbol_at_root(alpha, l, h, sign, sqrt_mod(alpha.d, l));
}

int rational_quartic(i64 a, u64 p)
{
    if (p < 5 || p % 4 != 1 || !is_prime(p))
        throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not a prime 1 mod 4");
    if (jacobi(a, static_cast<i64>(p)) != 1)
        throw Error(ErrorKind::NotQuadraticResidue,
                    std::to_string(a) + " is not a quadratic residue mod " + std::to_string(p));
    const u64 v = mod_pow(a, (p - 1) / 4, p);
    if (v == 1)
        return 1;
    if (v == p - 1)
        return -1;
    throw Error(ErrorKind::NotARootOfUnity, "quartic residue is neither +1 nor -1");
}

u64 CubicPolynomial::evaluate_mod(u64 x, u64 p) const
{
    const u64 x3 = mul_mod(mul_mod(x, x, p), x, p);
    const u64 lin = mul_mod(3 % p, x % p, p);
    const u64 c = reduce_mod(constant_term, p);
    return ((x3 + p - lin) % p + p - c) % p;
}

namespace {

// Polynomials of degree < 3 modulo f = x^3 - 3x - C, coefficients low to high.
using Residue = std::array<u64, 3>;

Residue mul_mod_f(const Residue& x, const Residue& y, u64 c, u64 p)
{
    std::array<u64, 5> prod{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            prod[i + j] = (prod[i + j] + mul_mod(x[i], y[j], p)) % p;
    // x^3 = 3x + C, x^4 = 3x^2 + Cx.
    for (int k = 4; k >= 3; --k) {
        const u64 top = prod[k];
        prod[k] = 0;
        prod[k - 2] = (prod[k - 2] + mul_mod(3 % p, top, p)) % p;
        prod[k - 3] = (prod[k - 3] + mul_mod(c, top, p)) % p;
    }
    return {prod[0], prod[1], prod[2]};
}

// Degree of gcd of two polynomials over F_p (coefficients low to high).
int gcd_degree(std::vector<u64> f, std::vector<u64> g, u64 p)
{
    auto trim = [](std::vector<u64>& v) {
        while (!v.empty() && v.back() == 0)
            v.pop_back();
    };
    trim(f);
    trim(g);
    while (!g.empty()) {
        const u64 lead_inv = inv_mod(static_cast<i64>(g.back()), p);
        while (f.size() >= g.size()) {
            const u64 factor = mul_mod(f.back(), lead_inv, p);
            const std::size_t shift = f.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i)
                f[shift + i] = (f[shift + i] + p - mul_mod(factor, g[i], p)) % p;
            trim(f);
            if (f.empty())
                break;
        }
        std::swap(f, g);
    }
    return static_cast<int>(f.size()) - 1;
}

} // namespace

int cubic_root_count(const CubicPolynomial& f, u64 p)
{
    if (!is_prime(p))
        throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    if (p <= 3 || reduce_mod(f.discriminant(), p) == 0)
        throw Error(ErrorKind::BadPrime,
                    std::to_string(p) + " divides 6 disc(x^3 - 3x - " +
                        std::to_string(f.constant_term) + ")");
    const u64 c = reduce_mod(f.constant_term, p);

    Residue result{1, 0, 0};
    Residue base{0, 1, 0};
    for (u64 e = p; e > 0; e >>= 1) {
        if (e & 1)
            result = mul_mod_f(result, base, c, p);
        base = mul_mod_f(base, base, c, p);
    }
    // x^p - x mod f
    result[1] = (result[1] + p - 1) % p;
    std::vector<u64> poly{(p - c) % p, p - 3, 0, 1};
    return gcd_degree(poly, {result[0], result[1], result[2]}, p);
}

bool conjugation_check(const QuadraticInteger& alpha, u64 l, int h, int sign)
{
    const SymbolValue first = unit_symbol(alpha, l, h, sign);
    const SymbolValue second = unit_symbol_at_root(alpha, l, h, sign, l - first.root_used);
    const int e1 = first.value.exponent;
    const int e2 = second.value.exponent;
    if ((e1 + e2) % h != 0)
        return false;
    const int s1 = first.value.real_sign();
    const int s2 = second.value.real_sign();
    if (s1 != 0 && s2 != 0)
        return s1 == s2;
    return true;
}

} // namespace qrl
