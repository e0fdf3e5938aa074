#pragma once

// Two-sided verification sweeps. Every criterion compares an analytic side
// (a power residue symbol of a unit) with an arithmetic side (the class of a
// prime in a form class group), plus a third witness where one exists
// (polynomial splitting, brute-force representation, rational quartic
// symbols). No side is trusted over another: any disagreement is recorded.

#include "qrl/pell.hpp"
#include "qrl/qforms.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qrl {

enum class Execution {
    /// Plain loop; the reference the parallel driver is tested against.
    Serial,
    /// OpenMP over primes, merged in ascending prime order.
    Parallel,
};

struct SweepOptions {
    u64 range_max = 50'000;
    /// Representation cross-checks are skipped when the target exceeds this.
    i64 bruteforce_cap = 100'000'000;
    Execution execution = Execution::Parallel;
    /// 0 keeps the OpenMP default.
    int threads = 0;
};

enum class PropositionKind { Dirichlet, Scholz, Kronecker, Quartic };

struct PropositionId {
    PropositionKind kind;
    std::map<std::string, i64> params;

    std::string name() const;

    friend bool operator==(const PropositionId&, const PropositionId&) = default;
};

struct MismatchRecord {
    u64 prime = 0;
    std::string symbol;
    /// Reduced representative of the class attached to the prime.
    QuadraticForm prime_class;
    std::optional<QuadraticForm> form;
    std::optional<std::pair<i64, i64>> coords;
    std::string detail;

    friend bool operator==(const MismatchRecord&, const MismatchRecord&) = default;
};

struct Anomaly {
    /// 0 for structural facts that are not tied to one prime.
    u64 prime = 0;
    std::string description;

    friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

struct CrossCheck {
    u64 checked = 0;
    u64 failed = 0;

    friend bool operator==(const CrossCheck&, const CrossCheck&) = default;
};

using OutcomeKey = std::pair<std::string, std::string>;

struct VerificationReport {
    PropositionId proposition;
    u64 range_max = 0;
    /// Primes satisfying the proposition's hypothesis.
    u64 tested = 0;
    /// (symbol value, class outcome) -> count; sums to `tested`.
    std::map<OutcomeKey, u64> by_class;
    std::vector<MismatchRecord> mismatches;
    std::vector<Anomaly> anomalies;
    std::map<std::string, CrossCheck> cross_checks;
    /// Split primes outside the hypothesis, checked against the full
    /// correspondence instead (quartic sweep only).
    u64 complement_tested = 0;
    std::map<OutcomeKey, u64> complement_by_class;
    /// Structural data: class number, unit, sign normalization, ...
    std::map<std::string, std::string> facts;

    bool verified() const { return mismatches.empty() && anomalies.empty(); }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct GoldenEntry {
    u64 prime = 0;
    int symbol = 1;
};

/// Dirichlet: (eps_p / q) = +1 iff [q]^{h/4} is principal in disc -4p, for
/// primes q = 1 mod 4 with (p/q) = 1. Also checks Scholz's identity at every
/// tested q. Requires p = 1 mod 8 prime (PreconditionFailed) and 4 | h(-4p)
/// (StructureError).
VerificationReport verify_dirichlet(u64 p, const SweepOptions& options = {});

/// Scholz: (eps_p / q) = (q/p)_4 (p/q)_4 for primes q = 1 mod 4, (p/q) = 1.
/// Requires p = 1 mod 4 prime.
VerificationReport verify_scholz(u64 p, const SweepOptions& options = {});

/// Kronecker, m in {69, 93}: eps_m is a cube at p iff p is represented by
/// the principal form of disc -23 / -31 iff x^3 - 3x - C splits completely
/// mod p (C = 25 / 29), for primes p = 1 mod 3 with (disc/p) = 1.
VerificationReport verify_kronecker(i64 m, const SweepOptions& options = {});

struct QuarticOptions {
    /// Negative control: use -s instead of the normalizing sign s.
    bool invert_sign = false;
    /// Expected (s eps / l)_4 values; a disagreement is a mismatch.
    std::vector<GoldenEntry> golden;
};

/// Quartic: (s eps_pq / l)_4 = +1 iff [l]^{h/4} principal in disc -pq, -1 iff
/// it is the class of order 2. Tested primes: l = 1 mod 4, (pq/l) = 1 and
/// (l/p) = 1. The remaining split primes form the complement, where the
/// symbol must be +-i exactly when [l]^{h/4} has order 4.
/// Requires p = 5 mod 8, q = 3 mod 4 primes with (p/q) = 1 (PreconditionFailed)
/// and 4 | h(-pq) (StructureError).
VerificationReport verify_quartic(u64 p, u64 q, const SweepOptions& options = {},
                                  const QuarticOptions& quartic = {});

enum class ClassFamily { Minus4, Plus4 };

struct ClassTableRow {
    i64 b = 0;
    i64 m = 0;
    /// -m; the discriminant whose class number is listed.
    i64 disc = 0;
    std::optional<i64> class_number;
    std::string note;
};

/// m = 27 b^2 - 4 (Minus4) or 27 b^2 + 4 (Plus4), h = h(-m). Rows with m not
/// squarefree are kept with a note and no class number.
std::vector<ClassTableRow> class_table(ClassFamily family, const std::vector<i64>& b_values);

enum class WorkedExample { Example1, Example2 };

struct ExampleTableRow {
    u64 prime = 0;
    std::string form_name;
    std::optional<QuadraticForm> form;
    std::optional<std::pair<i64, i64>> coords;
    int symbol = 0;
    int expected = 0;

    bool matches() const { return form.has_value() && symbol == expected; }
};

struct ExampleTable {
    WorkedExample which;
    u64 p = 0;
    u64 q = 0;
    int sign = 1;
    std::string unit;
    std::vector<ExampleTableRow> rows;

    bool verified() const;
};

/// The built-in expected symbol values for the two worked examples.
std::vector<GoldenEntry> default_golden(WorkedExample which);

/// Recomputes each row: the first listed form (or its opposite) representing
/// l, preferring x >= 0, and (s eps / l)_4. `golden` overrides the expected
/// column when non-empty.
ExampleTable example_table_for(WorkedExample which, const std::vector<GoldenEntry>& golden = {});

} // namespace qrl
