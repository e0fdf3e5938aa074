#include "qrl/harness.hpp"

#include "qrl/error.hpp"
#include "qrl/symbols.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qrl {

std::string PropositionId::name() const
{
    switch (kind) {
    case PropositionKind::Dirichlet: return "dirichlet";
    case PropositionKind::Scholz: return "scholz";
    case PropositionKind::Kronecker: return "kronecker";
    case PropositionKind::Quartic: return "quartic";
    }
    return "unknown";
}

namespace {

struct PrimeOutcome {
    enum class Kind { Skipped, Tested, Complement };

    Kind kind = Kind::Skipped;
    OutcomeKey key;
    std::vector<MismatchRecord> mismatches;
    std::vector<Anomaly> anomalies;
    std::vector<std::pair<std::string, bool>> checks;
};

template <class Kernel>
PrimeOutcome guarded(const Kernel& kernel, u64 prime)
{
    try {
        return kernel(prime);
    } catch (const std::exception& e) {
        PrimeOutcome out;
        out.kind = PrimeOutcome::Kind::Tested;
        out.key = {"error", "error"};
        out.anomalies.push_back({prime, std::string("evaluation failed: ") + e.what()});
        return out;
    }
}

template <class Kernel>
std::vector<PrimeOutcome> run_sweep(const std::vector<u64>& primes, const Kernel& kernel,
                                    const SweepOptions& options)
{
    std::vector<PrimeOutcome> out(primes.size());
    const auto n = static_cast<std::ptrdiff_t>(primes.size());
    if (options.execution == Execution::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            out[i] = guarded(kernel, primes[i]);
        return out;
    }
#ifdef _OPENMP
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[i] = guarded(kernel, primes[i]);
    return out;
}

void merge(VerificationReport& report, std::vector<PrimeOutcome>&& outcomes)
{
    for (PrimeOutcome& o : outcomes) {
        switch (o.kind) {
        case PrimeOutcome::Kind::Skipped:
            continue;
        case PrimeOutcome::Kind::Tested:
            ++report.tested;
            ++report.by_class[o.key];
            break;
        case PrimeOutcome::Kind::Complement:
            ++report.complement_tested;
            ++report.complement_by_class[o.key];
            break;
        }
        for (auto& m : o.mismatches)
            report.mismatches.push_back(std::move(m));
        for (auto& a : o.anomalies)
            report.anomalies.push_back(std::move(a));
        for (const auto& [name, passed] : o.checks) {
            CrossCheck& c = report.cross_checks[name];
            ++c.checked;
            if (!passed)
                ++c.failed;
        }
    }
}

std::string sign_label(int s)
{
    return s > 0 ? "+1" : s < 0 ? "-1" : "+-i";
}

MismatchRecord mismatch(u64 prime, std::string symbol, const FormClass& cls, std::string detail)
{
    MismatchRecord r;
    r.prime = prime;
    r.symbol = std::move(symbol);
    r.prime_class = cls.rep();
    r.form = cls.rep();
    r.coords = represents(cls.rep(), static_cast<i64>(prime));
    r.detail = std::move(detail);
    return r;
}

/// base^k when it stays within cap, nullopt otherwise.
std::optional<i64> bounded_pow(u64 base, i64 k, i64 cap)
{
    __int128 v = 1;
    for (i64 i = 0; i < k; ++i) {
        v *= base;
        if (v > cap)
            return std::nullopt;
    }
    return static_cast<i64>(v);
}

/// Exactly one of `yes`/`no` primitively represents n, and it is `yes`.
bool represented_by_exactly(const QuadraticForm& yes, const QuadraticForm& no, i64 n)
{
    return represents(yes, n, Representation::Primitive).has_value() &&
           !represents(no, n, Representation::Primitive).has_value();
}

std::string structure_string(const std::vector<i64>& invariants)
{
    std::string s = "[";
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(invariants[i]);
    }
    return s + "]";
}

void check_cyclic_two_part(VerificationReport& report, const ClassGroup& group)
{
    const std::vector<i64> invariants = group_structure(group);
    report.facts["structure"] = structure_string(invariants);
    const auto even = std::count_if(invariants.begin(), invariants.end(),
                                    [](i64 d) { return d % 2 == 0; });
    if (even > 1)
        report.anomalies.push_back(
            {0, "2-part of Cl(" + std::to_string(group.disc()) + ") is not cyclic"});
}

} // namespace

VerificationReport verify_scholz(u64 p, const SweepOptions& options)
{
    if (!is_prime(p) || p % 4 != 1)
        throw Error(ErrorKind::PreconditionFailed, "scholz: p must be a prime 1 mod 4");
    const QuadraticUnit eps = fundamental_unit(static_cast<i64>(p));
    const i64 disc = -4 * static_cast<i64>(p);

    VerificationReport report;
    report.proposition = {PropositionKind::Scholz, {{"p", static_cast<i64>(p)}}};
    report.range_max = options.range_max;
    report.facts["unit"] = eps.value.to_string();
    report.facts["norm"] = std::to_string(eps.norm);

    auto kernel = [&](u64 q) {
        PrimeOutcome out;
        if (q % 4 != 1 || jacobi(static_cast<i64>(p), static_cast<i64>(q)) != 1)
            return out;
        out.kind = PrimeOutcome::Kind::Tested;
        const int lhs = unit_symbol(eps, q, 2).value.real_sign();
        const int rhs = rational_quartic(static_cast<i64>(q), p) *
                        rational_quartic(static_cast<i64>(p), q);
        out.key = {sign_label(lhs), sign_label(rhs)};
        if (lhs != rhs)
            out.mismatches.push_back(mismatch(q, sign_label(lhs), prime_to_class(q, disc),
                                              "(q/p)_4 (p/q)_4 = " + sign_label(rhs)));
        return out;
    };
    merge(report, run_sweep(primes_up_to(options.range_max), kernel, options));
    return report;
}

VerificationReport verify_dirichlet(u64 p, const SweepOptions& options)
{
    if (!is_prime(p) || p % 8 != 1)
        throw Error(ErrorKind::PreconditionFailed, "dirichlet: p must be a prime 1 mod 8");
    const i64 pp = static_cast<i64>(p);
    const i64 disc = -4 * pp;
    const ClassGroup group = enumerate_classes(disc);
    const i64 h = group.class_number();
    if (h % 4 != 0)
        throw Error(ErrorKind::StructureError,
                    "h(" + std::to_string(disc) + ") = " + std::to_string(h) + " is not 0 mod 4");
    const QuadraticUnit eps = fundamental_unit(pp);
    const QuadraticForm principal{1, 0, pp};
    const QuadraticForm ambiguous{2, 2, (pp + 1) / 2};

    VerificationReport report;
    report.proposition = {PropositionKind::Dirichlet, {{"p", pp}}};
    report.range_max = options.range_max;
    report.facts["disc"] = std::to_string(disc);
    report.facts["h"] = std::to_string(h);
    report.facts["unit"] = eps.value.to_string();
    report.facts["norm"] = std::to_string(eps.norm);
    check_cyclic_two_part(report, group);

    auto kernel = [&](u64 q) {
        PrimeOutcome out;
        if (q % 4 != 1 || jacobi(pp, static_cast<i64>(q)) != 1)
            return out;
        out.kind = PrimeOutcome::Kind::Tested;

        const int symbol = unit_symbol(eps, q, 2).value.real_sign();
        const FormClass cls = prime_to_class(q, disc);
        const FormClass quarter = class_pow(cls, h / 4);
        const bool half_trivial = compose(quarter, quarter).is_principal();
        const std::string outcome =
            quarter.is_principal() ? "principal" : half_trivial ? "order-2" : "order>2";
        out.key = {sign_label(symbol), outcome};
        if (!half_trivial) {
            out.anomalies.push_back({q, "[q]^{h/2} is not principal"});
            return out;
        }
        const int expected = quarter.is_principal() ? 1 : -1;
        if (symbol != expected)
            out.mismatches.push_back(mismatch(q, sign_label(symbol), cls,
                                              "[q]^{h/4} is " + outcome));

        const int scholz = rational_quartic(static_cast<i64>(q), p) *
                           rational_quartic(pp, q);
        out.checks.emplace_back("scholz", scholz == symbol);
        if (scholz != symbol)
            out.mismatches.push_back(mismatch(q, sign_label(symbol), cls,
                                              "(q/p)_4 (p/q)_4 = " + sign_label(scholz)));

        if (auto n = bounded_pow(q, h / 4, options.bruteforce_cap)) {
            const bool ok = expected > 0 ? represented_by_exactly(principal, ambiguous, *n)
                                         : represented_by_exactly(ambiguous, principal, *n);
            out.checks.emplace_back("representation", ok);
            if (!ok)
                out.mismatches.push_back(mismatch(q, sign_label(symbol), cls,
                                                  "q^{h/4} representation disagrees"));
        }
        return out;
    };
    merge(report, run_sweep(primes_up_to(options.range_max), kernel, options));
    return report;
}

VerificationReport verify_kronecker(i64 m, const SweepOptions& options)
{
    if (m != 69 && m != 93)
        throw Error(ErrorKind::PreconditionFailed, "kronecker: m must be 69 or 93");
    const i64 disc = m == 69 ? -23 : -31;
    const CubicPolynomial poly{m == 69 ? 25 : 29};
    const QuadraticUnit eps = fundamental_unit(m);
    const ClassGroup group = enumerate_classes(disc);
    const QuadraticForm principal = principal_form(disc);

    VerificationReport report;
    report.proposition = {PropositionKind::Kronecker, {{"m", m}, {"disc", disc}}};
    report.range_max = options.range_max;
    report.facts["disc"] = std::to_string(disc);
    report.facts["h"] = std::to_string(group.class_number());
    report.facts["unit"] = eps.value.to_string();
    report.facts["polynomial"] = "x^3 - 3x - " + std::to_string(poly.constant_term);
    if (group.class_number() != 3)
        report.anomalies.push_back({0, "h(" + std::to_string(disc) + ") != 3"});

    auto kernel = [&](u64 p) {
        PrimeOutcome out;
        if (p % 3 != 1 || jacobi(disc, static_cast<i64>(p)) != 1)
            return out;
        out.kind = PrimeOutcome::Kind::Tested;

        const bool cube = unit_symbol(eps, p, 3).is_power();
        const FormClass cls = prime_to_class(p, disc);
        const bool principal_class = cls.is_principal();
        const std::string symbol = cube ? "cube" : "non-cube";
        out.key = {symbol, principal_class ? "principal" : "non-principal"};
        if (cube != principal_class)
            out.mismatches.push_back(mismatch(p, symbol, cls, "cubic symbol vs class"));

        const int roots = cubic_root_count(poly, p);
        if (roots != 0 && roots != 3)
            out.anomalies.push_back(
                {p, "cubic has " + std::to_string(roots) + " roots at a split prime"});
        out.checks.emplace_back("cubic-splitting", (roots == 3) == principal_class);
        if ((roots == 3) != principal_class)
            out.mismatches.push_back(mismatch(p, symbol, cls,
                                              "cubic has " + std::to_string(roots) + " roots"));

        if (static_cast<i64>(p) <= options.bruteforce_cap) {
            const bool rep = represents(principal, static_cast<i64>(p)).has_value();
            out.checks.emplace_back("representation", rep == principal_class);
            if (rep != principal_class)
                out.mismatches.push_back(mismatch(p, symbol, cls, "principal form representation"));
        }
        return out;
    };
    merge(report, run_sweep(primes_up_to(options.range_max), kernel, options));
    return report;
}

namespace {

void apply_golden(VerificationReport& report, const std::vector<GoldenEntry>& golden,
                  const QuadraticUnit& eps, int sign, i64 disc)
{
    for (const GoldenEntry& g : golden) {
        int symbol = 0;
        std::string failure;
        try {
            symbol = unit_symbol(eps, g.prime, 4, sign).value.real_sign();
        } catch (const Error& e) {
            failure = e.what();
        }
        const bool ok = failure.empty() && symbol == g.symbol;
        CrossCheck& c = report.cross_checks["golden"];
        ++c.checked;
        if (ok)
            continue;
        ++c.failed;
        MismatchRecord r;
        r.prime = g.prime;
        r.symbol = failure.empty() ? sign_label(symbol) : "error";
        try {
            const FormClass cls = prime_to_class(g.prime, disc);
            r.prime_class = cls.rep();
            r.form = cls.rep();
            r.coords = represents(cls.rep(), static_cast<i64>(g.prime));
        } catch (const Error&) {
        }
        r.detail = "golden value " + sign_label(g.symbol) + (failure.empty() ? "" : ": " + failure);
        report.mismatches.push_back(std::move(r));
    }
}

} // namespace

VerificationReport verify_quartic(u64 p, u64 q, const SweepOptions& options,
                                  const QuarticOptions& quartic)
{
    if (!is_prime(p) || p % 8 != 5)
        throw Error(ErrorKind::PreconditionFailed, "quartic: p must be a prime 5 mod 8");
    if (!is_prime(q) || q % 4 != 3)
        throw Error(ErrorKind::PreconditionFailed, "quartic: q must be a prime 3 mod 4");
    const i64 pp = static_cast<i64>(p), qq = static_cast<i64>(q);
    if (jacobi(pp, qq) != 1)
        throw Error(ErrorKind::PreconditionFailed, "quartic: (p/q) must be +1");

    const i64 pq = pp * qq;
    const i64 disc = -pq;
    const ClassGroup group = enumerate_classes(disc);
    const i64 h = group.class_number();
    if (h % 4 != 0)
        throw Error(ErrorKind::StructureError,
                    "h(" + std::to_string(disc) + ") = " + std::to_string(h) + " is not 0 mod 4");
    const QuadraticUnit eps = fundamental_unit(pq);
    const int s = normalize_sign(eps.value);
    const int sign = quartic.invert_sign ? -s : s;

    // Odd-discriminant forms and their even-discriminant restatements.
    const QuadraticForm q0{1, 1, (pq + 1) / 4};
    const QuadraticForm q1{qq, qq, (pp + qq) / 4};
    const QuadraticForm restated0{1, 0, pq};
    const QuadraticForm restated1{qq, 0, pp};
    // x^2 + xy + m y^2 -> x^2 + pq y^2 needs y even, i.e. m even (q = 3 mod 8).
    const bool restatement_valid = q % 8 == 3;

    VerificationReport report;
    report.proposition = {PropositionKind::Quartic, {{"p", pp}, {"q", qq}}};
    report.range_max = options.range_max;
    report.facts["disc"] = std::to_string(disc);
    report.facts["h"] = std::to_string(h);
    report.facts["unit"] = eps.value.to_string();
    report.facts["s"] = std::to_string(s);
    report.facts["sign_used"] = std::to_string(sign);
    check_cyclic_two_part(report, group);
    if (FormClass(q1).is_principal() || !class_pow(FormClass(q1), 2).is_principal())
        report.anomalies.push_back({0, q1.to_string() + " is not of order 2"});

    auto kernel = [&](u64 l) {
        PrimeOutcome out;
        if (l % 4 != 1 || jacobi(pq, static_cast<i64>(l)) != 1)
            return out;

        const int symbol = unit_symbol(eps, l, 4, sign).value.real_sign();
        const FormClass cls = prime_to_class(l, disc);
        const FormClass quarter = class_pow(cls, h / 4);
        const int order = quarter.is_principal() ? 1
                          : compose(quarter, quarter).is_principal() ? 2
                                                                     : 4;
        const std::string outcome = order == 1 ? "principal" : order == 2 ? "order-2" : "order-4";
        out.key = {sign_label(symbol), outcome};

        if (jacobi(static_cast<i64>(l), pp) != 1) {
            out.kind = PrimeOutcome::Kind::Complement;
            if (symbol != 0 || order != 4)
                out.mismatches.push_back(mismatch(
                    l, sign_label(symbol), cls,
                    "outside the principal genus: expected +-i with [l]^{h/4} of order 4, got " +
                        outcome));
            return out;
        }

        out.kind = PrimeOutcome::Kind::Tested;
        bool structural = true;
        if (symbol == 0) {
            out.anomalies.push_back({l, "(s eps / l)_4 is +-i"});
            structural = false;
        }
        if (order == 4) {
            out.anomalies.push_back({l, "[l]^{h/2} is not principal"});
            structural = false;
        }
        if (!structural)
            return out;

        const int expected = order == 1 ? 1 : -1;
        if (symbol != expected)
            out.mismatches.push_back(mismatch(l, sign_label(symbol), cls,
                                              "[l]^{h/4} is " + outcome));

        if (auto n = bounded_pow(l, h / 4, options.bruteforce_cap)) {
            const bool ok = expected > 0 ? represented_by_exactly(q0, q1, *n)
                                         : represented_by_exactly(q1, q0, *n);
            out.checks.emplace_back("representation", ok);
            if (!ok)
                out.mismatches.push_back(mismatch(l, sign_label(symbol), cls,
                                                  "l^{h/4} representation disagrees"));
            if (restatement_valid) {
                const bool ok2 = expected > 0 ? represented_by_exactly(restated0, restated1, *n)
                                              : represented_by_exactly(restated1, restated0, *n);
                out.checks.emplace_back("restated-forms", ok2);
                if (!ok2)
                    out.mismatches.push_back(mismatch(
                        l, sign_label(symbol), cls,
                        "l^{h/4} representation by x^2 + pq y^2 / q x^2 + p y^2 disagrees"));
            }
        }
        return out;
    };
    merge(report, run_sweep(primes_up_to(options.range_max), kernel, options));
    apply_golden(report, quartic.golden, eps, sign, disc);
    return report;
}

std::vector<ClassTableRow> class_table(ClassFamily family, const std::vector<i64>& b_values)
{
    std::vector<ClassTableRow> rows;
    rows.reserve(b_values.size());
    for (i64 b : b_values) {
        ClassTableRow row;
        row.b = b;
        row.m = 27 * b * b + (family == ClassFamily::Minus4 ? -4 : 4);
        row.disc = -row.m;
        if (row.m <= 1 || !is_squarefree(row.m))
            row.note = "m = " + std::to_string(row.m) + " is not squarefree; skipped";
        else
            row.class_number = enumerate_classes(row.disc).class_number();
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

struct NamedForm {
    std::string name;
    QuadraticForm form;
};

struct ExampleDefinition {
    u64 p, q;
    std::vector<NamedForm> forms;
};

ExampleDefinition example_definition(WorkedExample which)
{
    if (which == WorkedExample::Example1)
        return {13, 3, {{"Q1", {1, 0, 39}}, {"Q2", {3, 0, 13}}}};
    return {37, 3, {{"Q1", {1, 0, 111}}, {"Q2", {3, 0, 37}}, {"Q4", {4, 1, 7}}, {"Q4'", {4, -1, 7}}}};
}

} // namespace

std::vector<GoldenEntry> default_golden(WorkedExample which)
{
    if (which == WorkedExample::Example1)
        return {{61, -1}, {157, 1}, {181, 1}, {277, 1}, {313, -1}, {337, -1}};
    return {{73, -1}, {157, -1}, {181, -1}, {229, 1}, {337, 1}};
}

bool ExampleTable::verified() const
{
    return std::all_of(rows.begin(), rows.end(), [](const ExampleTableRow& r) { return r.matches(); });
}

ExampleTable example_table_for(WorkedExample which, const std::vector<GoldenEntry>& golden)
{
    const ExampleDefinition def = example_definition(which);
    const i64 pq = static_cast<i64>(def.p * def.q);
    const QuadraticUnit eps = fundamental_unit(pq);

    ExampleTable table;
    table.which = which;
    table.p = def.p;
    table.q = def.q;
    table.sign = normalize_sign(eps.value);
    table.unit = eps.value.to_string();

    for (const GoldenEntry& g : golden.empty() ? default_golden(which) : golden) {
        ExampleTableRow row;
        row.prime = g.prime;
        row.expected = g.symbol;
        for (const NamedForm& nf : def.forms) {
            auto rep = represents(nf.form, static_cast<i64>(g.prime));
            if (!rep)
                continue;
            if (!row.form || (row.coords->first < 0 && rep->first >= 0)) {
                row.form_name = nf.name;
                row.form = nf.form;
                row.coords = rep;
            }
            if (rep->first >= 0)
                break;
        }
        try {
            row.symbol = unit_symbol(eps, g.prime, 4, table.sign).value.real_sign();
        } catch (const Error&) {
            row.symbol = 0;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace qrl
