#pragma once

// Unambiguous products, alternative codes and strong alternative codes.
//
// Every verdict here is computed along two independent routes that must
// agree; a disagreement is a defect in the library and raises
// std::logic_error.

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "altcodes/code_check.hpp"
#include "altcodes/errors.hpp"
#include "altcodes/language.hpp"

namespace altcodes {

/// An ordered pair (X, Y) put forward as an unambiguous factorization Z = XY.
struct Decomposition {
    FiniteLanguage x;
    FiniteLanguage y;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline bool canonical_less(const Decomposition& a, const Decomposition& b) {
    if (canonical_less(a.x, b.x)) return true;
    if (canonical_less(b.x, a.x)) return false;
    return canonical_less(a.y, b.y);
}

/// XY = Z with |X|.|Y| = |Z| and neither factor empty or containing ε.
inline bool is_valid_decomposition(const Decomposition& d, const FiniteLanguage& z) {
    if (d.x.empty() || d.y.empty() || d.x.contains_empty_word() || d.y.contains_empty_word()) return false;
    return d.x.size() * d.y.size() == z.size() && product(d.x, d.y) == z;
}

struct ProductVerdict {
    bool unambiguous = false;
    /// X^-1 X ∩ Y Y^-1 \ {ε}
    FiniteLanguage overlap_set;
    /// (|XY|, |X|.|Y|)
    std::pair<std::size_t, std::size_t> cardinality_check{0, 0};
};

inline ProductVerdict check_unambiguous(const FiniteLanguage& x, const FiniteLanguage& y) {
    detail::require_nonempty_proper(x, "check_unambiguous");
    detail::require_nonempty_proper(y, "check_unambiguous");
    ProductVerdict v;
    v.overlap_set = without_empty_word(intersect(left_quotient(x, x), right_quotient(y, y)));
    v.cardinality_check = {product(x, y).size(), x.size() * y.size()};
    v.unambiguous = v.overlap_set.empty();
    if (v.unambiguous != (v.cardinality_check.first == v.cardinality_check.second))
        throw std::logic_error("check_unambiguous: quotient and cardinality criteria disagree for X = " +
                               to_string(x) + ", Y = " + to_string(y));
    return v;
}

struct AltVerdict {
    bool is_alternative = false;
    SpTrace product_code;
    ProductVerdict product_unambiguous;
};

/// (X, Y) is an alternative code iff XY is a code and the product is
/// unambiguous.
inline AltVerdict check_alternative(const FiniteLanguage& x, const FiniteLanguage& y) {
    AltVerdict v;
    v.product_unambiguous = check_unambiguous(x, y);
    v.product_code = sardinas_patterson(product(x, y));
    v.is_alternative = v.product_code.is_code() && v.product_unambiguous.unambiguous;
    return v;
}

struct StrongCharacterization {
    bool x_prefix = false;
    bool y_suffix = false;
    bool product_code = false;

    bool holds() const noexcept { return x_prefix && y_suffix && product_code; }
};

struct StrongVerdict {
    bool is_strong = false;
    /// X^-1(XY) \ Y
    FiniteLanguage condition1_violations;
    /// (XY)Y^-1 \ X
    FiniteLanguage condition2_violations;
    StrongCharacterization char_route;
    AltVerdict alternative;
};

/// Strong alternative code check. Evaluates the defining inclusions
/// X^-1(XY) ⊆ Y and (XY)Y^-1 ⊆ X on top of alternativeness, and separately
/// the characterization "X prefix, Y suffix, XY a code"; both must agree.
inline StrongVerdict check_strong(const FiniteLanguage& x, const FiniteLanguage& y) {
    StrongVerdict v;
    v.alternative = check_alternative(x, y);
    const FiniteLanguage xy = product(x, y);
    v.condition1_violations = difference(left_quotient(x, xy), y);
    v.condition2_violations = difference(right_quotient(xy, y), x);
    v.is_strong =
        v.alternative.is_alternative && v.condition1_violations.empty() && v.condition2_violations.empty();
    v.char_route = {is_prefix_code(x), is_suffix_code(y), v.alternative.product_code.is_code()};
    if (v.is_strong != v.char_route.holds())
        throw std::logic_error("check_strong: definition and characterization disagree for X = " + to_string(x) +
                               ", Y = " + to_string(y));
    return v;
}

/// Truth values of the three equivalent phrasings of the strong conditions:
/// inclusions, equalities, and per-element equalities.
struct StrongForms {
    bool inclusions = false;
    bool equalities = false;
    bool per_element = false;

    friend bool operator==(const StrongForms&, const StrongForms&) = default;
};

inline StrongForms strong_condition_forms(const FiniteLanguage& x, const FiniteLanguage& y) {
    if (!check_alternative(x, y).is_alternative)
        throw contract_violation("strong_condition_forms: (X, Y) is not an alternative code");
    const FiniteLanguage xy = product(x, y);
    const FiniteLanguage left = left_quotient(x, xy);
    const FiniteLanguage right = right_quotient(xy, y);

    StrongForms f;
    f.inclusions = is_subset(left, y) && is_subset(right, x);
    f.equalities = left == y && right == x;
    f.per_element = true;
    for (const auto& w : x) f.per_element = f.per_element && left_quotient(w, xy) == y;
    for (const auto& w : y) f.per_element = f.per_element && right_quotient(xy, w) == x;
    return f;
}

/// Cheap certificate that Z = XY is alt-induced: X prefix or Y suffix
/// forces the product to be unambiguous.
inline bool induced_by_sufficiency(const FiniteLanguage& z, const FiniteLanguage& x, const FiniteLanguage& y) {
    detail::require_nonempty_proper(x, "induced_by_sufficiency");
    detail::require_nonempty_proper(y, "induced_by_sufficiency");
    if (product(x, y) != z) throw contract_violation("induced_by_sufficiency: Z is not the product XY");
    if (!is_code(z)) throw contract_violation("induced_by_sufficiency: Z is not a code");
    return is_prefix_code(x) || is_suffix_code(y);
}

/// For an alt-induced Z, the pair (Z^(n-1), Z) induces Z^n.
inline Decomposition power_alt_induced(const FiniteLanguage& z, std::size_t n) {
    if (n < 2) throw contract_violation("power_alt_induced: exponent must be at least 2");
    detail::require_nonempty_proper(z, "power_alt_induced");
    return {power(z, n - 1), z};
}

}  // namespace altcodes
