#include "qrl/qforms.hpp"

#include "qrl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace qrl {

namespace {

using i128 = __int128;

i64 narrow(i128 v, const char* what)
{
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw Error(ErrorKind::BoundExceeded, std::string(what) + " does not fit in 64 bits");
    return static_cast<i64>(v);
}

i128 floor_div(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

i128 mod_pos(i128 a, i128 m)
{
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

/// u*a + v*b = g with g = gcd(a, b) >= 0.
struct Bezout {
    i128 u, v, g;
};

Bezout xgcd(i128 a, i128 b)
{
    i128 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        i128 q = r0 / r1;
        i128 tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 < 0)
        return {-s0, -t0, -r0};
    return {s0, t0, r0};
}

struct WideForm {
    i128 a, b, c;
};

// Apply x -> x + r y with r chosen so that -a < b <= a.
void normalize(WideForm& f)
{
    if (-f.a < f.b && f.b <= f.a)
        return;
    i128 r = floor_div(f.a - f.b, 2 * f.a);
    f.c = f.a * r * r + f.b * r + f.c;
    f.b += 2 * f.a * r;
}

QuadraticForm reduce_wide(WideForm f)
{
    normalize(f);
    while (f.a > f.c) {
        f = WideForm{f.c, -f.b, f.a};
        normalize(f);
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return QuadraticForm{narrow(f.a, "a"), narrow(f.b, "b"), narrow(f.c, "c")};
}

void require_valid(const QuadraticForm& f)
{
    if (!f.is_positive_definite())
        throw Error(ErrorKind::InvalidArgument, f.to_string() + " is not positive definite");
    if (!f.is_primitive())
        throw Error(ErrorKind::InvalidArgument, f.to_string() + " is not primitive");
}

i128 isqrt128(i128 n)
{
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace

i64 QuadraticForm::discriminant() const
{
    return narrow(static_cast<i128>(b) * b - static_cast<i128>(4) * a * c, "discriminant");
}

bool QuadraticForm::is_positive_definite() const
{
    return a > 0 && static_cast<i128>(b) * b - static_cast<i128>(4) * a * c < 0;
}

bool QuadraticForm::is_primitive() const
{
    return gcd(gcd(a, b), c) == 1;
}

bool QuadraticForm::is_reduced() const
{
    if (!(std::abs(b) <= a && a <= c))
        return false;
    if ((std::abs(b) == a || a == c) && b < 0)
        return false;
    return true;
}

__int128 QuadraticForm::evaluate(i64 x, i64 y) const
{
    i128 X = x, Y = y;
    return a * X * X + b * X * Y + c * Y * Y;
}

std::string QuadraticForm::to_string() const
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

QuadraticForm principal_form(i64 disc)
{
    if (disc >= 0)
        throw Error(ErrorKind::InvalidArgument, "discriminant must be negative");
    i64 r = ((disc % 4) + 4) % 4;
    if (r == 0)
        return {1, 0, -disc / 4};
    if (r == 1)
        return {1, 1, (1 - disc) / 4};
    throw Error(ErrorKind::InvalidArgument, "discriminant must be 0 or 1 mod 4");
}

QuadraticForm reduce(const QuadraticForm& f)
{
    require_valid(f);
    return reduce_wide(WideForm{f.a, f.b, f.c});
}

FormClass::FormClass(const QuadraticForm& f) : rep_(reduce(f)), disc_(f.discriminant()) {}

FormClass FormClass::principal(i64 disc)
{
    return FormClass(principal_form(disc), disc, Trusted{});
}

FormClass FormClass::inverse() const
{
    return FormClass(reduce_wide(WideForm{rep_.a, -rep_.b, rep_.c}), disc_, Trusted{});
}

FormClass compose(const FormClass& f, const FormClass& g)
{
    if (f.disc() != g.disc())
        throw Error(ErrorKind::DiscMismatch, "cannot compose forms of discriminant " +
                                                 std::to_string(f.disc()) + " and " +
                                                 std::to_string(g.disc()));
    const i128 disc = f.disc();
    const QuadraticForm* lo = &f.rep();
    const QuadraticForm* hi = &g.rep();
    if (lo->a > hi->a)
        std::swap(lo, hi);
    const i128 a1 = lo->a, b1 = lo->b;
    const i128 a2 = hi->a, b2 = hi->b, c2 = hi->c;
    const i128 s = (b1 + b2) / 2;
    const i128 n = b2 - s;

    i128 y1, d;
    if (a2 % a1 == 0) {
        y1 = 0;
        d = a1;
    } else {
        Bezout e = xgcd(a2, a1);
        y1 = e.u;
        d = e.g;
    }

    i128 x2, y2, d1;
    if (s % d == 0) {
        x2 = 0;
        y2 = -1;
        d1 = d;
    } else {
        Bezout e = xgcd(s, d);
        x2 = e.u;
        y2 = -e.v;
        d1 = e.g;
    }

    const i128 v1 = a1 / d1;
    const i128 v2 = a2 / d1;
    const i128 r = mod_pos(mod_pos(y1 * y2, v1) * mod_pos(n, v1) - mod_pos(x2 * c2, v1), v1);
    const i128 b3 = b2 + 2 * v2 * r;
    const i128 a3 = v1 * v2;
    const i128 c3 = (b3 * b3 - disc) / (4 * a3);
    return FormClass(reduce_wide(WideForm{a3, b3, c3}), f.disc(), FormClass::Trusted{});
}

FormClass class_pow(const FormClass& f, i64 k)
{
    FormClass base = k < 0 ? f.inverse() : f;
    // |k| without overflow for INT64_MIN.
    u64 e = k < 0 ? static_cast<u64>(-(k + 1)) + 1 : static_cast<u64>(k);
    FormClass result = FormClass::principal(f.disc());
    while (e > 0) {
        if (e & 1)
            result = compose(result, base);
        base = compose(base, base);
        e >>= 1;
    }
    return result;
}

i64 order_of(const FormClass& f, i64 bound)
{
    FormClass x = f;
    for (i64 k = 1; k <= bound; ++k) {
        if (x.is_principal())
            return k;
        x = compose(x, f);
    }
    throw Error(ErrorKind::BoundExceeded, "order of " + f.rep().to_string() + " exceeds bound");
}

std::optional<std::size_t> ClassGroup::index_of(const FormClass& f) const
{
    auto it = std::lower_bound(classes_.begin(), classes_.end(), f);
    if (it == classes_.end() || !(*it == f))
        return std::nullopt;
    return static_cast<std::size_t>(it - classes_.begin());
}

ClassGroup enumerate_classes(i64 disc, i64 bound)
{
    if (disc >= 0 || (((disc % 4) + 4) % 4 > 1))
        throw Error(ErrorKind::InvalidArgument,
                    "discriminant must be negative and 0 or 1 mod 4, got " + std::to_string(disc));
    if (-disc > bound)
        throw Error(ErrorKind::BoundExceeded,
                    "|D| = " + std::to_string(-disc) + " exceeds " + std::to_string(bound));

    const i64 absd = -disc;
    const i64 parity = absd % 2;
    std::vector<FormClass> classes;
    for (i64 a = 1; 3 * a * a <= absd; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (std::abs(b) % 2 != parity)
                continue;
            const i64 num = b * b + absd;
            if (num % (4 * a) != 0)
                continue;
            const i64 c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (gcd(gcd(a, b), c) != 1)
                continue;
            classes.push_back(FormClass(QuadraticForm{a, b, c}));
        }
    }
    std::sort(classes.begin(), classes.end());
    return ClassGroup(disc, std::move(classes));
}

std::vector<i64> group_structure(const ClassGroup& group, i64 bound)
{
    const i64 h = group.class_number();
    if (h > bound)
        throw Error(ErrorKind::BoundExceeded, "class number " + std::to_string(h) +
                                                  " exceeds " + std::to_string(bound));
    if (h == 1)
        return {1};

    std::vector<std::pair<i64, int>> factors;
    {
        i64 m = h;
        for (i64 p = 2; p * p <= m; ++p) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e > 0)
                factors.emplace_back(p, e);
        }
        if (m > 1)
            factors.emplace_back(m, 1);
    }

    std::vector<i64> orders;
    orders.reserve(group.classes().size());
    for (const FormClass& x : group.classes()) {
        i64 ord = h;
        for (auto [p, e] : factors) {
            while (ord % p == 0 && class_pow(x, ord / p).is_principal())
                ord /= p;
        }
        if (!class_pow(x, ord).is_principal())
            throw Error(ErrorKind::StructureError, "element order does not divide h");
        orders.push_back(ord);
    }

    // For each p: #{x : v_p(ord x) <= k} = p^{L_k} * (h / p^emax) with
    // L_k = sum_i min(k, e_i) over the exponents e_i of the p-part.
    std::vector<std::vector<int>> exponents; // per prime, descending
    std::size_t rank = 0;
    for (auto [p, emax] : factors) {
        std::vector<int> logs(emax + 1, 0);
        i64 cofactor = h;
        for (int i = 0; i < emax; ++i)
            cofactor /= p;
        for (int k = 0; k <= emax; ++k) {
            i64 count = 0;
            for (i64 ord : orders) {
                int v = 0;
                for (i64 o = ord; o % p == 0; o /= p)
                    ++v;
                if (v <= k)
                    ++count;
            }
            if (count % cofactor != 0)
                throw Error(ErrorKind::StructureError, "torsion count is not a multiple of h/p^e");
            int l = 0;
            i64 c = count / cofactor;
            while (c % p == 0) {
                c /= p;
                ++l;
            }
            if (c != 1)
                throw Error(ErrorKind::StructureError, "torsion count is not a prime power");
            logs[k] = l;
        }
        std::vector<int> es;
        for (std::size_t i = 0;; ++i) {
            int e = 0;
            for (int k = 1; k <= emax; ++k)
                if (static_cast<std::size_t>(logs[k] - logs[k - 1]) > i)
                    ++e;
            if (e == 0)
                break;
            es.push_back(e);
        }
        rank = std::max(rank, es.size());
        exponents.push_back(std::move(es));
    }

    std::vector<i64> invariants(rank, 1);
    for (std::size_t j = 0; j < factors.size(); ++j) {
        const i64 p = factors[j].first;
        for (std::size_t i = 0; i < exponents[j].size(); ++i)
            for (int e = 0; e < exponents[j][i]; ++e)
                invariants[rank - 1 - i] *= p;
    }
    return invariants;
}

FormClass prime_to_class(u64 l, i64 disc)
{
    if (l < 3 || !is_prime(l))
        throw Error(ErrorKind::InvalidArgument, std::to_string(l) + " is not an odd prime");
    if (reduce_mod(disc, l) == 0)
        throw Error(ErrorKind::Ramified,
                    std::to_string(l) + " divides the discriminant " + std::to_string(disc));
    if (jacobi(disc, static_cast<i64>(l)) != 1)
        throw Error(ErrorKind::NotSplit,
                    std::to_string(l) + " is inert for discriminant " + std::to_string(disc));
    i64 b = static_cast<i64>(sqrt_mod(disc, l));
    const i64 parity = ((disc % 2) + 2) % 2;
    if (b % 2 != parity)
        b = static_cast<i64>(l) - b;
    const i128 c = (static_cast<i128>(b) * b - disc) / (4 * static_cast<i128>(l));
    return FormClass(QuadraticForm{static_cast<i64>(l), b, narrow(c, "c")});
}

std::optional<std::pair<i64, i64>> represents(const QuadraticForm& f, i64 n, Representation kind)
{
    if (!f.is_positive_definite())
        throw Error(ErrorKind::InvalidArgument, f.to_string() + " is not positive definite");
    if (n <= 0)
        throw Error(ErrorKind::InvalidArgument, "represents: n must be positive");
    if (n > kRepresentationBound)
        throw Error(ErrorKind::BoundExceeded, "represents: n exceeds 10^12");

    // 4a f(x,y) = (2ax + by)^2 + |D| y^2.
    const i128 a = f.a, b = f.b;
    const i128 absd = -(static_cast<i128>(f.b) * f.b - 4 * static_cast<i128>(f.a) * f.c);
    const i128 budget = 4 * a * n;
    for (i128 y = 0; absd * y * y <= budget; ++y) {
        const i128 delta = budget - absd * y * y;
        const i128 s = isqrt128(delta);
        if (s * s != delta)
            continue;
        std::optional<i64> best;
        for (i128 num : {-b * y + s, -b * y - s}) {
            if (num % (2 * a) != 0)
                continue;
            const i64 x = static_cast<i64>(num / (2 * a));
            if (kind == Representation::Primitive && gcd(x, static_cast<i64>(y)) != 1)
                continue;
            if (!best || std::abs(x) < std::abs(*best) ||
                (std::abs(x) == std::abs(*best) && x > *best))
                best = x;
        }
        if (best)
            return std::pair<i64, i64>{*best, static_cast<i64>(y)};
    }
    return std::nullopt;
}

} // namespace qrl
