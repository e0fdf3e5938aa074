#include "qrl/pell.hpp"

#include "qrl/error.hpp"

#include <cstdlib>
#include <utility>

namespace qrl {

namespace {

u64 mpz_mod(const mpz_class& x, u64 m)
{
    return mpz_fdiv_ui(x.get_mpz_t(), m);
}

} // namespace

mpz_class QuadraticInteger::norm() const
{
    mpz_class n = t * t - mpz_class(static_cast<long>(d)) * u * u;
    return n / 4;
}

std::string QuadraticInteger::to_string() const
{
    const bool halves = mpz_odd_p(t.get_mpz_t()) || mpz_odd_p(u.get_mpz_t());
    const mpz_class tt = halves ? t : mpz_class(t / 2);
    const mpz_class uu = halves ? u : mpz_class(u / 2);
    std::string s = tt.get_str();
    s += sgn(uu) < 0 ? " - " : " + ";
    mpz_class mag = abs(uu);
    if (mag != 1)
        s += mag.get_str() + "*";
    s += "sqrt(" + std::to_string(d) + ")";
    return halves ? "(" + s + ")/2" : s;
}

QuadraticInteger multiply(const QuadraticInteger& x, const QuadraticInteger& y)
{
    if (x.d != y.d)
        throw Error(ErrorKind::InvalidArgument, "multiply: elements of different fields");
    const mpz_class dd(static_cast<long>(x.d));
    mpz_class t = (x.t * y.t + dd * x.u * y.u) / 2;
    mpz_class u = (x.t * y.u + x.u * y.t) / 2;
    return {x.d, std::move(t), std::move(u)};
}

QuadraticInteger power(const QuadraticInteger& x, unsigned k)
{
    QuadraticInteger result{x.d, 2, 0};
    QuadraticInteger base = x;
    while (k > 0) {
        if (k & 1)
            result = multiply(result, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return result;
}

QuadraticUnit fundamental_unit(i64 d, long max_steps)
{
    if (d <= 1)
        throw Error(ErrorKind::InvalidArgument, "fundamental_unit: d must exceed 1");
    if (!is_squarefree(d))
        throw Error(ErrorKind::NotSquarefree, std::to_string(d) + " is not squarefree");

    // Expand omega = (P0 + sqrt d)/Q0 with Q0 | d - P0^2. The convergent
    // A/B gives the unit A - B*omega' exactly when the next Q returns to Q0.
    const bool one_mod_four = d % 4 == 1;
    const i64 p0 = one_mod_four ? 1 : 0;
    const i64 q0 = one_mod_four ? 2 : 1;
    const i64 root = static_cast<i64>(isqrt(static_cast<u64>(d)));

    i64 P = p0, Q = q0;
    mpz_class a_prev2 = 0, a_prev1 = 1, b_prev2 = 1, b_prev1 = 0;
    std::pair<i64, i64> first_reduced{0, 0};

    for (long k = 0; k < max_steps; ++k) {
        const i64 partial = (P + root) / Q;
        mpz_class A = partial * a_prev1 + a_prev2;
        mpz_class B = partial * b_prev1 + b_prev2;
        const i64 next_p = partial * Q - P;
        const i64 next_q = (d - next_p * next_p) / Q;

        if (std::llabs(next_q) == q0) {
            QuadraticInteger eps{d, one_mod_four ? mpz_class(2 * A - B) : mpz_class(2 * A),
                                 one_mod_four ? B : mpz_class(2 * B)};
            const mpz_class n = eps.norm();
            return QuadraticUnit{std::move(eps), n > 0 ? 1 : -1};
        }

        if (k == 0)
            first_reduced = {next_p, next_q};
        else if (std::pair<i64, i64>{next_p, next_q} == first_reduced)
            throw Error(ErrorKind::StructureError,
                        "continued fraction period closed without a unit for d = " +
                            std::to_string(d));

        a_prev2 = std::move(a_prev1);
        a_prev1 = std::move(A);
        b_prev2 = std::move(b_prev1);
        b_prev1 = std::move(B);
        P = next_p;
        Q = next_q;
    }
    throw Error(ErrorKind::RegulatorTooLarge,
                "no unit within " + std::to_string(max_steps) + " steps for d = " +
                    std::to_string(d));
}

int normalize_sign(const QuadraticInteger& eps)
{
    if (mpz_odd_p(eps.t.get_mpz_t()) || mpz_odd_p(eps.u.get_mpz_t()))
        throw Error(ErrorKind::NotCongruentPlusMinusOne,
                    eps.to_string() + " has half-integral coordinates");
    const mpz_class T = eps.t / 2;
    const mpz_class U = eps.u / 2;
    if (mpz_mod(U, 4) != 0 || mpz_mod(T, 2) == 0)
        throw Error(ErrorKind::NotCongruentPlusMinusOne,
                    eps.to_string() + " is not congruent to +-1 mod 4");
    return mpz_mod(T, 4) == 1 ? 1 : -1;
}

u64 unit_mod_prime(const QuadraticInteger& eps, u64 l, u64 root)
{
    if (l < 3 || l % 2 == 0)
        throw Error(ErrorKind::InvalidArgument, "unit_mod_prime: l must be an odd prime");
    if (jacobi(eps.d, static_cast<i64>(l)) != 1)
        throw Error(ErrorKind::NotSplit,
                    std::to_string(l) + " does not split in Q(sqrt " + std::to_string(eps.d) + ")");
    if (mul_mod(root % l, root % l, l) != reduce_mod(eps.d, l))
        throw Error(ErrorKind::RootMismatch,
                    std::to_string(root) + "^2 != " + std::to_string(eps.d) + " mod " +
                        std::to_string(l));
    const u64 t = mpz_mod(eps.t, l);
    const u64 u = mpz_mod(eps.u, l);
    const u64 sum = (t + mul_mod(u, root % l, l)) % l;
    return mul_mod(sum, inv_mod(2, l), l);
}

} // namespace qrl
