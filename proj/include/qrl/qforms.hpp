#pragma once

// Positive definite binary quadratic forms ax^2 + bxy + cy^2 of negative
// discriminant D = b^2 - 4ac, their reduction, Dirichlet composition and
// the finite group of classes for a fixed D.

#include "qrl/modarith.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qrl {

struct QuadraticForm {
    i64 a = 1;
    i64 b = 0;
    i64 c = 1;

    /// b^2 - 4ac; throws BoundExceeded if it does not fit in 64 bits.
    i64 discriminant() const;
    bool is_positive_definite() const;
    bool is_primitive() const;
    bool is_reduced() const;
    /// (a, -b, c): the inverse class.
    QuadraticForm opposite() const { return {a, -b, c}; }
    /// f(x, y) evaluated exactly.
    __int128 evaluate(i64 x, i64 y) const;

    std::string to_string() const;

    friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Principal form of discriminant D: x^2 - (D/4)y^2 or x^2 + xy + ((1-D)/4)y^2.
QuadraticForm principal_form(i64 disc);

/// The unique reduced form equivalent to f: |b| <= a <= c, with b >= 0 when
/// |b| = a or a = c. Rejects non-positive-definite or imprimitive input.
QuadraticForm reduce(const QuadraticForm& f);

/// An equivalence class of forms, held by its reduced representative.
class FormClass {
public:
    /// Reduces f; the class is determined by the input's equivalence class.
    explicit FormClass(const QuadraticForm& f);

    static FormClass principal(i64 disc);

    const QuadraticForm& rep() const { return rep_; }
    i64 disc() const { return disc_; }
    bool is_principal() const { return rep_.a == 1; }
    FormClass inverse() const;

    friend bool operator==(const FormClass& x, const FormClass& y) { return x.rep_ == y.rep_; }
    friend auto operator<=>(const FormClass& x, const FormClass& y) { return x.rep_ <=> y.rep_; }

private:
    struct Trusted {};
    FormClass(const QuadraticForm& reduced, i64 disc, Trusted) : rep_(reduced), disc_(disc) {}

    QuadraticForm rep_;
    i64 disc_;

    friend FormClass compose(const FormClass&, const FormClass&);
};

/// Gauss/Dirichlet composition followed by reduction. Throws DiscMismatch
/// when the discriminants differ.
FormClass compose(const FormClass& f, const FormClass& g);

/// k-fold composition; negative k composes the inverse.
FormClass class_pow(const FormClass& f, i64 k);

/// Least k >= 1 with f^k principal. `bound` caps the search (throws
/// BoundExceeded past it); the class number is always a valid bound.
i64 order_of(const FormClass& f, i64 bound = 10'000'000);

inline constexpr i64 kDefaultEnumerationBound = 10'000'000;

class ClassGroup {
public:
    i64 disc() const { return disc_; }
    /// Reduced representatives, sorted; the principal class comes first.
    const std::vector<FormClass>& classes() const { return classes_; }
    i64 class_number() const { return static_cast<i64>(classes_.size()); }
    const FormClass& principal() const { return classes_.front(); }
    /// Position of a class in classes(), or nullopt if it is foreign.
    std::optional<std::size_t> index_of(const FormClass& f) const;

private:
    ClassGroup(i64 disc, std::vector<FormClass> classes)
        : disc_(disc), classes_(std::move(classes))
    {
    }

    i64 disc_;
    std::vector<FormClass> classes_;

    friend ClassGroup enumerate_classes(i64, i64);
};

/// All reduced primitive forms of discriminant D < 0, D = 0, 1 mod 4.
/// Throws BoundExceeded when |D| > bound.
ClassGroup enumerate_classes(i64 disc, i64 bound = kDefaultEnumerationBound);

/// Invariant factors d_1 | d_2 | ... | d_r of the group, ascending; [1] for
/// the trivial group. Throws BoundExceeded for class numbers above `bound`.
std::vector<i64> group_structure(const ClassGroup& group, i64 bound = 10'000);

/// The class of (l, b, (b^2 - D)/(4l)) with b the smaller square root of D
/// mod l adjusted to b = D mod 2. This is [p] or its inverse for a prime p
/// above l; callers only test inversion-invariant properties.
/// Throws Ramified when l | D and NotSplit when (D/l) = -1.
FormClass prime_to_class(u64 l, i64 disc);

inline constexpr i64 kRepresentationBound = 1'000'000'000'000;

enum class Representation { Any, Primitive };

/// A solution of f(x, y) = n ordered by increasing y >= 0, then increasing
/// |x| with x >= 0 first. Primitive restricts to gcd(x, y) = 1. Throws
/// BoundExceeded for n > 10^12.
std::optional<std::pair<i64, i64>> represents(const QuadraticForm& f, i64 n,
                                              Representation kind = Representation::Any);

} // namespace qrl
