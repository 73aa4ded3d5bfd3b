#ifndef RSTFT_PICARD_HPP
#define RSTFT_PICARD_HPP

#include "rstft/abelian.hpp"
#include "rstft/rspin.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rstft {

/// First homotopy group of a Picard groupoid: a finitely generated group, the
/// divisible circle group C* (kept symbolic), or a product of both.
struct Pi1Group {
    enum class Kind { finitely, circle, circle_times };

    Kind kind = Kind::finitely;
    FgAbGroup finite_part;  // trivial for a pure circle

    static Pi1Group finitely(FgAbGroup g) { return {Kind::finitely, std::move(g)}; }
    static Pi1Group circle() { return {Kind::circle, {}}; }
    static Pi1Group circle_times(FgAbGroup g) { return {Kind::circle_times, std::move(g)}; }

    bool has_circle() const { return kind != Kind::finitely; }
    bool operator==(const Pi1Group&) const = default;
};

/// Element of a Pi1Group: a sign in the circle factor (only +-1 can appear as
/// a k-invariant value) and coordinates in the finite part.
struct Pi1Elem {
    int sign = +1;
    GroupVec coords;

    static Pi1Elem circle_value(int sign) { return {sign, {}}; }
    static Pi1Elem finite_value(GroupVec v) { return {+1, std::move(v)}; }
};

bool pi1_elem_is_zero(const Pi1Group& g, const Pi1Elem& e);
Pi1Elem pi1_elem_add(const Pi1Group& g, const Pi1Elem& a, const Pi1Elem& b);
/// Order divides 2 (k-invariants factor through pi0 (x) Z/2).
bool pi1_elem_order_divides_2(const Pi1Group& g, const Pi1Elem& e);

struct KInvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedClassificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Classifying data (pi0, pi1, k) of a Picard groupoid. k is recorded by its
/// values on the canonical generators of pi0 (x) Z/2.
struct PicardData {
    FgAbGroup pi0;
    Pi1Group pi1;
    std::vector<Pi1Elem> k;
};

/// Validates lengths and that every k value is 2-torsion.
PicardData make_picard_data(FgAbGroup pi0, Pi1Group pi1, std::vector<Pi1Elem> k);

/// Classifying data of the bordism groupoid of circles:
/// r = 0:       (Z/2, Z/2, id)
/// r > 0 even:  (Z/2, Z x Z/2, x -> (0,x))
/// r odd:       (0, Z, 0)
PicardData bord_picard_data(const RParam& r);

/// Super lines: pi0 = Z/2, pi1 = C*, k(odd line) = -1.
PicardData sline();
/// Plain graded lines: same homotopy groups, trivial k.
PicardData line();

/// Canonical product of a finitely generated group and copies of C*; the
/// finite part is kept in invariant-factor form and circle factors sort last,
/// e.g. "Z/2 x C*".
struct FormalGroupExpr {
    FgAbGroup finite;
    std::size_t circle_factors = 0;

    bool operator==(const FormalGroupExpr&) const = default;
    std::string to_string() const;
    std::vector<std::string> factor_strings() const;
};

FormalGroupExpr expr_from_group(FgAbGroup g);
FormalGroupExpr expr_circle(std::size_t count = 1);
FormalGroupExpr expr_product(const FormalGroupExpr& a, const FormalGroupExpr& b);

/// Group of isomorphism classes of symmetric monoidal functors source ->
/// target: pairs (f0, f1) commuting with the k-invariants, times
/// Ext(pi0(source), pi1(target)). Computed by exhaustive enumeration when
/// both target homotopy groups give finite Hom groups, and by the structural
/// reduction (f1 determined on the image of k, free elsewhere) when the
/// target pi1 contains the circle group. Sources must have finite pi0 and
/// finitely generated pi1.
FormalGroupExpr classify_functors(const PicardData& source, const PicardData& target);

/// The closed-form classification table:
/// r = 0:       Hom(Z/2, pi0) x Ext(Z/2, pi1)
/// r > 0 even:  Hom(Z/2, pi0) x Ext(Z/2, pi1) x pi1
/// r odd:       pi1
FormalGroupExpr classify_rspin_tfts(const RParam& r, const PicardData& target);

}  // namespace rstft

#endif
