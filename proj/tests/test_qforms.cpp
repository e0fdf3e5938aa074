#include "qrl/qforms.hpp"

#include "oracles.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace qrl;

namespace {

oracle::Form to_oracle(const QuadraticForm& f)
{
    return {f.a, f.b, f.c};
}

QuadraticForm from_oracle(const oracle::Form& f)
{
    return {f.a, f.b, f.c};
}

std::vector<i64> discriminants_up_to(i64 bound)
{
    std::vector<i64> out;
    for (i64 n = 3; n <= bound; ++n)
        if (n % 4 == 0 || n % 4 == 3)
            out.push_back(-n);
    return out;
}

/// Searches unimodular substitutions with entries bounded by `bound` that
/// carry f to g.
bool equivalent_by_search(const QuadraticForm& f, const QuadraticForm& g, i64 bound)
{
    for (i64 x = -bound; x <= bound; ++x)
        for (i64 y = -bound; y <= bound; ++y)
            for (i64 r = -bound; r <= bound; ++r)
                for (i64 s = -bound; s <= bound; ++s)
                    if (x * s - r * y == 1 && oracle::substitute(to_oracle(f), x, y, r, s) == to_oracle(g))
                        return true;
    return false;
}

} // namespace

TEST(QuadraticForm, BasicPredicates)
{
    const QuadraticForm f{3, 2, 6};
    EXPECT_EQ(f.discriminant(), -68);
    EXPECT_TRUE(f.is_positive_definite());
    EXPECT_TRUE(f.is_primitive());
    EXPECT_TRUE(f.is_reduced());
    EXPECT_EQ(f.opposite(), (QuadraticForm{3, -2, 6}));
    EXPECT_EQ(f.to_string(), "(3,2,6)");
    EXPECT_EQ(static_cast<i64>(f.evaluate(1, 1)), 11);
    EXPECT_FALSE((QuadraticForm{2, 2, 2}).is_primitive());
    EXPECT_FALSE((QuadraticForm{1, 5, 1}).is_positive_definite());
    EXPECT_FALSE((QuadraticForm{2, -2, 3}).is_reduced());
    EXPECT_FALSE((QuadraticForm{3, -1, 3}).is_reduced());
    EXPECT_EQ(principal_form(-23), (QuadraticForm{1, 1, 6}));
    EXPECT_EQ(principal_form(-156), (QuadraticForm{1, 0, 39}));
}

TEST(Reduce, Examples)
{
    EXPECT_EQ(reduce({1, 1, 6}), (QuadraticForm{1, 1, 6}));
    EXPECT_EQ(reduce({23, 25, 7}), (QuadraticForm{1, 1, 5}));
    EXPECT_TRUE(equivalent_by_search({23, 25, 7}, {1, 1, 5}, 6));

    int found = 0;
    for (i64 b = 0; b < 2 * 61; b += 2) {
        if ((b * b + 156) % (4 * 61) != 0)
            continue;
        EXPECT_EQ(reduce({61, b, (b * b + 156) / (4 * 61)}), (QuadraticForm{3, 0, 13}));
        ++found;
    }
    EXPECT_EQ(found, 2);
}

TEST(Reduce, RejectsIndefiniteAndImprimitive)
{
    EXPECT_QRL_ERROR(reduce({1, 5, 1}), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(reduce({-1, 1, -6}), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(reduce({2, 2, 2}), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(FormClass({4, 0, 4}), ErrorKind::InvalidArgument);
}

TEST(Reduce, AgreesWithNaiveReductionOnRandomTransforms)
{
    oracle::Rng rng(23);
    for (int i = 0; i < 20000; ++i) {
        const i64 D = -rng.uniform(3, 20000);
        if (D % 4 != 0 && (D % 4 + 4) % 4 != 1)
            continue;
        const ClassGroup G = enumerate_classes(D);
        const QuadraticForm base =
            G.classes()[rng.uniform(0, G.class_number() - 1)].rep();
        // Random unimodular matrix as a product of elementary moves.
        i64 x = 1, y = 0, r = 0, s = 1;
        for (int k = 0; k < 6; ++k) {
            const i64 t = rng.uniform(-3, 3);
            if (rng.uniform(0, 1)) {
                r += t * x;
                s += t * y;
            } else {
                x += t * r;
                y += t * s;
            }
        }
        const QuadraticForm moved = from_oracle(oracle::substitute(to_oracle(base), x, y, r, s));
        ASSERT_EQ(moved.discriminant(), D);
        const QuadraticForm red = reduce(moved);
        ASSERT_EQ(red, base) << moved.to_string();
        ASSERT_EQ(to_oracle(red), oracle::naive_reduce(to_oracle(moved)));
        ASSERT_EQ(reduce(red), red);
        ASSERT_TRUE(red.is_reduced());
        ASSERT_TRUE(red.is_primitive());
    }
}

TEST(Compose, Examples)
{
    for (i64 D : {-23, -39, -68, -111}) {
        const ClassGroup G = enumerate_classes(D);
        for (const FormClass& x : G.classes())
            EXPECT_EQ(compose(FormClass::principal(D), x), x);
        for (const FormClass& x : G.classes())
            EXPECT_TRUE(compose(x, FormClass(x.rep().opposite())).is_principal());
    }
    EXPECT_EQ(compose(FormClass({2, 1, 5}), FormClass({2, 1, 5})).rep(), (QuadraticForm{3, 3, 4}));
}

TEST(Compose, DiscMismatch)
{
    EXPECT_QRL_ERROR(compose(FormClass({1, 1, 6}), FormClass({1, 0, 39})), ErrorKind::DiscMismatch);
}

TEST(Compose, AgreesWithUnitedFormsOracle)
{
    for (i64 D : discriminants_up_to(1500)) {
        const ClassGroup G = enumerate_classes(D);
        for (const FormClass& f : G.classes())
            for (const FormClass& g : G.classes())
                ASSERT_EQ(to_oracle(compose(f, g).rep()),
                          oracle::compose_united(to_oracle(f.rep()), to_oracle(g.rep())))
                    << f.rep().to_string() << " * " << g.rep().to_string();
    }
}

TEST(Compose, GroupLawsExhaustiveSmall)
{
    for (i64 D : discriminants_up_to(1500)) {
        const ClassGroup G = enumerate_classes(D);
        const auto h = static_cast<std::size_t>(G.class_number());
        std::vector<std::size_t> table(h * h);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < h; ++j) {
                const auto k = G.index_of(compose(G.classes()[i], G.classes()[j]));
                ASSERT_TRUE(k.has_value());
                table[i * h + j] = *k;
            }
        for (std::size_t i = 0; i < h; ++i) {
            ASSERT_EQ(table[i], i);
            ASSERT_EQ(table[*G.index_of(G.classes()[i].inverse()) * h + i], 0u);
            for (std::size_t j = 0; j < h; ++j) {
                ASSERT_EQ(table[i * h + j], table[j * h + i]);
                for (std::size_t k = 0; k < h; ++k)
                    ASSERT_EQ(table[table[i * h + j] * h + k], table[i * h + table[j * h + k]]);
            }
        }
    }
}

TEST(ClassPow, Examples)
{
    const FormClass f({3, 2, 6});
    EXPECT_TRUE(class_pow(f, 0).is_principal());
    EXPECT_EQ(class_pow(f, 1), f);
    EXPECT_EQ(class_pow(f, 2).rep(), (QuadraticForm{2, 2, 9}));
    EXPECT_EQ(class_pow(f, -1), f.inverse());
    EXPECT_EQ(class_pow(f, -1).rep(), (QuadraticForm{3, -2, 6}));
    EXPECT_TRUE(class_pow(f, 4).is_principal());
    EXPECT_EQ(class_pow(f, 7), class_pow(f, -1));
}

TEST(EnumerateClasses, Examples)
{
    EXPECT_EQ(enumerate_classes(-23).class_number(), 3);
    EXPECT_EQ(enumerate_classes(-2183).class_number(), 42);
    EXPECT_EQ(enumerate_classes(-3).class_number(), 1);
    EXPECT_EQ(enumerate_classes(-3).classes().front().rep(), (QuadraticForm{1, 1, 1}));
    const ClassGroup G = enumerate_classes(-68);
    EXPECT_TRUE(G.principal().is_principal());
    for (const FormClass& f : G.classes())
        EXPECT_TRUE(f.rep().is_reduced());
}

TEST(EnumerateClasses, Errors)
{
    EXPECT_QRL_ERROR(enumerate_classes(-5), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(enumerate_classes(0), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(enumerate_classes(5), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(enumerate_classes(-1'000'004, 1'000'000), ErrorKind::BoundExceeded);
}

TEST(EnumerateClasses, NonFundamentalDiscriminants)
{
    // h(-12) = 1, h(-16) = 1, h(-27) = 1, h(-28) = 1, h(-44) = 3, h(-75) = 2.
    const std::map<i64, i64> expected{{-12, 1}, {-16, 1}, {-27, 1}, {-28, 1}, {-44, 3}, {-75, 2}};
    for (auto [D, h] : expected)
        EXPECT_EQ(enumerate_classes(D).class_number(), h) << D;
}

TEST(EnumerateClasses, AgreesWithTripleScanAndAnalyticFormula)
{
    for (i64 D : discriminants_up_to(3000)) {
        const i64 h = enumerate_classes(D).class_number();
        ASSERT_EQ(h, oracle::class_number_by_triples(D)) << D;
        ASSERT_EQ(h, oracle::class_number_analytic(D)) << D;
    }
}

TEST(OrderOf, Examples)
{
    EXPECT_EQ(order_of(FormClass::principal(-39)), 1);
    EXPECT_EQ(order_of(FormClass({2, 1, 5})), 4);
    EXPECT_EQ(order_of(FormClass({3, 2, 6})), 4);
}

TEST(OrderOf, DividesClassNumberAndIsMinimal)
{
    for (i64 D : discriminants_up_to(2000)) {
        const ClassGroup G = enumerate_classes(D);
        for (const FormClass& f : G.classes()) {
            const i64 n = order_of(f);
            ASSERT_EQ(G.class_number() % n, 0);
            FormClass acc = f;
            for (i64 k = 1; k < n; ++k) {
                ASSERT_FALSE(acc.is_principal());
                acc = compose(acc, f);
            }
            ASSERT_TRUE(acc.is_principal());
        }
    }
}

TEST(GroupStructure, Examples)
{
    EXPECT_EQ(group_structure(enumerate_classes(-68)), (std::vector<i64>{4}));
    EXPECT_EQ(group_structure(enumerate_classes(-111)), (std::vector<i64>{8}));
    EXPECT_EQ(group_structure(enumerate_classes(-3)), (std::vector<i64>{1}));
    EXPECT_EQ(group_structure(enumerate_classes(-356)), (std::vector<i64>{12}));
    EXPECT_EQ(group_structure(enumerate_classes(-3299)), (std::vector<i64>{3, 9}));
    EXPECT_EQ(group_structure(enumerate_classes(-420)), (std::vector<i64>{2, 2, 2}));
    EXPECT_QRL_ERROR(group_structure(enumerate_classes(-2183), 10), ErrorKind::BoundExceeded);
}

TEST(GroupStructure, InvariantFactorsMatchElementOrders)
{
    for (i64 D : discriminants_up_to(3000)) {
        const ClassGroup G = enumerate_classes(D);
        const std::vector<i64> factors = group_structure(G);
        i64 product = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            product *= factors[i];
            if (i > 0)
                ASSERT_EQ(factors[i] % factors[i - 1], 0) << D;
        }
        ASSERT_EQ(product, G.class_number()) << D;
        i64 exponent = 1;
        std::map<i64, i64> order_counts;
        for (const FormClass& f : G.classes()) {
            const i64 n = order_of(f);
            exponent = std::max(exponent, n);
            ++order_counts[n];
        }
        ASSERT_EQ(exponent, factors.back()) << D;
        // Elements of order dividing 2: 2^{number of even factors}.
        i64 two_torsion = 0;
        for (auto [n, count] : order_counts)
            if (n <= 2)
                two_torsion += count;
        i64 expected = 1;
        for (i64 f : factors)
            if (f % 2 == 0)
                expected *= 2;
        ASSERT_EQ(two_torsion, expected) << D;
    }
}

TEST(PrimeToClass, Examples)
{
    EXPECT_EQ(prime_to_class(61, -156).rep(), (QuadraticForm{3, 0, 13}));
    EXPECT_TRUE(prime_to_class(157, -156).is_principal());
    const QuadraticForm r = prime_to_class(13, -23).rep();
    EXPECT_EQ(r.a, 2);
    EXPECT_EQ(r.c, 3);
    EXPECT_EQ(std::abs(r.b), 1);
}

TEST(PrimeToClass, Errors)
{
    EXPECT_QRL_ERROR(prime_to_class(5, -23), ErrorKind::NotSplit);
    EXPECT_QRL_ERROR(prime_to_class(23, -23), ErrorKind::Ramified);
    EXPECT_QRL_ERROR(prime_to_class(3, -39), ErrorKind::Ramified);
    EXPECT_QRL_ERROR(prime_to_class(2, -23), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(prime_to_class(9, -23), ErrorKind::InvalidArgument);
}

TEST(Represents, Examples)
{
    EXPECT_EQ(represents({1, 0, 39}, 157), (std::pair<i64, i64>{1, 2}));
    EXPECT_EQ(represents({3, 0, 13}, 337), (std::pair<i64, i64>{2, 5}));
    EXPECT_FALSE(represents({1, 0, 39}, 61).has_value());
    EXPECT_EQ(represents({1, 0, 1}, 25), (std::pair<i64, i64>{5, 0}));
    EXPECT_EQ(represents({1, 0, 1}, 25, Representation::Primitive), (std::pair<i64, i64>{4, 3}));
    EXPECT_EQ(represents({4, -1, 7}, 73), (std::pair<i64, i64>{2, 3}));
}

TEST(Represents, Errors)
{
    EXPECT_QRL_ERROR(represents({1, 0, 1}, 0), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(represents({1, 0, 1}, -5), ErrorKind::InvalidArgument);
    EXPECT_QRL_ERROR(represents({1, 0, 1}, 1'000'000'000'001), ErrorKind::BoundExceeded);
    EXPECT_QRL_ERROR(represents({1, 5, 1}, 7), ErrorKind::InvalidArgument);
}

TEST(Represents, FoundCoordinatesEvaluateCorrectly)
{
    for (i64 D : {-23, -68, -111, -156, -444}) {
        const ClassGroup G = enumerate_classes(D);
        for (const FormClass& f : G.classes())
            for (i64 n = 1; n <= 3000; ++n)
                for (auto kind : {Representation::Any, Representation::Primitive})
                    if (auto xy = represents(f.rep(), n, kind)) {
                        ASSERT_EQ(static_cast<i64>(f.rep().evaluate(xy->first, xy->second)), n);
                        if (kind == Representation::Primitive)
                            ASSERT_EQ(std::gcd(xy->first, xy->second), 1);
                    }
    }
}

TEST(Represents, FormAndOppositeRepresentSameIntegers)
{
    for (i64 D : discriminants_up_to(300)) {
        const ClassGroup G = enumerate_classes(D);
        for (const FormClass& f : G.classes())
            for (i64 n = 1; n <= 1000; ++n)
                ASSERT_EQ(represents(f.rep(), n).has_value(),
                          represents(f.rep().opposite(), n).has_value())
                    << f.rep().to_string() << " " << n;
    }
}

TEST(Represents, AgreesWithBoxScan)
{
    for (i64 D : {-23, -39, -68, -111}) {
        const ClassGroup G = enumerate_classes(D);
        for (const FormClass& f : G.classes()) {
            std::set<i64> seen;
            for (i64 x = -80; x <= 80; ++x)
                for (i64 y = -80; y <= 80; ++y)
                    seen.insert(static_cast<i64>(f.rep().evaluate(x, y)));
            for (i64 n = 1; n <= 1000; ++n)
                ASSERT_EQ(represents(f.rep(), n).has_value(), seen.count(n) == 1)
                    << f.rep().to_string() << " " << n;
        }
    }
}

TEST(PrimeToClass, SplitPrimeRepresentedOnlyByItsClassPair)
{
    const auto prime = oracle::sieve(500);
    for (i64 D : discriminants_up_to(499)) {
        const ClassGroup G = enumerate_classes(D);
        for (u64 l = 3; l < 500; ++l) {
            if (!prime[l] || static_cast<i64>(l) == -D || D % static_cast<i64>(l) == 0)
                continue;
            if (oracle::kronecker(D, l) != 1)
                continue;
            const FormClass c = prime_to_class(l, D);
            const QuadraticForm own = c.rep();
            const QuadraticForm inv = c.inverse().rep();
            EXPECT_TRUE(represents(own, static_cast<i64>(l)) || represents(own.opposite(), static_cast<i64>(l)));
            for (const FormClass& f : G.classes()) {
                if (f.rep() == own || f.rep() == inv)
                    continue;
                ASSERT_FALSE(represents(f.rep(), static_cast<i64>(l)).has_value())
                    << l << " by " << f.rep().to_string() << " disc " << D;
            }
        }
    }
}
