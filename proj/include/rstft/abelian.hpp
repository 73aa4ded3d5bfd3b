#ifndef RSTFT_ABELIAN_HPP
#define RSTFT_ABELIAN_HPP

#include "rstft/types.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rstft {

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// 0xn and nx0 matrices are valid.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix multiplied(const IntMatrix& rhs) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Diagonal of the Smith normal form only (no transform tracking).
std::vector<Int> invariant_factors(const IntMatrix& a);

/// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix& a);

/// Finitely generated abelian group in canonical invariant-factor form:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
/// Two groups are equal iff the fields are identical.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup free_group(std::size_t rank) { return {rank, {}}; }
    static FgAbGroup cyclic(const Int& d);

    std::size_t gen_count() const { return free_rank + torsion.size(); }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    bool operator==(const FgAbGroup&) const = default;
    std::string to_string() const;  // e.g. "Z x Z/2", "0"
};

/// Canonical form of a direct sum of cyclic groups; factor 0 denotes Z,
/// factors 1 are dropped.
FgAbGroup group_from_cyclic_factors(const std::vector<Int>& factors);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

/// Order of the group; 0 if infinite.
Int group_order(const FgAbGroup& g);

/// Z^rows / (column span of `relations`), in canonical form.
FgAbGroup cokernel(const IntMatrix& relations);

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup ext_group(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tensor_z2(const FgAbGroup& a);

/// Indices of the canonical generators of `a` that survive in a (x) Z/2
/// (free generators and generators of even order), in increasing order.
std::vector<std::size_t> tensor_z2_generators(const FgAbGroup& a);

/// Element of a group: coordinate vector over the canonical generators,
/// free coordinates first, torsion coordinates reduced mod the factors.
using GroupVec = std::vector<Int>;

GroupVec zero_element(const FgAbGroup& g);
GroupVec reduce_element(const FgAbGroup& g, GroupVec v);
GroupVec add_elements(const FgAbGroup& g, const GroupVec& a, const GroupVec& b);
GroupVec scale_element(const FgAbGroup& g, const Int& c, const GroupVec& v);
bool is_zero_element(const FgAbGroup& g, const GroupVec& v);
/// Order of v in g; 0 if infinite.
Int element_order(const FgAbGroup& g, const GroupVec& v);
/// All elements of a finite group (throws std::invalid_argument if infinite).
std::vector<GroupVec> all_elements(const FgAbGroup& g);
/// { v : n*v = 0 }, finite for every f.g. group and n != 0.
std::vector<GroupVec> elements_killed_by(const FgAbGroup& g, const Int& n);

struct InfiniteHomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Homomorphism between groups in canonical coordinates; matrix is
/// target.gen_count() x source.gen_count(), image of source generator j
/// is the j-th column.
struct GroupHom {
    FgAbGroup source;
    FgAbGroup target;
    IntMatrix matrix;
};

GroupHom hom_zero(const FgAbGroup& source, const FgAbGroup& target);
GroupHom hom_identity(const FgAbGroup& g);
/// The image of a generator of order d must have order dividing d.
bool hom_valid(const GroupHom& h);
GroupHom hom_compose(const GroupHom& g, const GroupHom& f);
/// Equality as maps: matrices congruent modulo the target torsion.
bool hom_equal(const GroupHom& f, const GroupHom& g);
GroupVec apply_hom(const GroupHom& h, const GroupVec& v);
/// Exhaustive, duplicate-free; throws InfiniteHomError when Hom(a,b) is
/// infinite.
std::vector<GroupHom> enumerate_homs(const FgAbGroup& a, const FgAbGroup& b);

/// Incremental integer column lattice: relations are fed in as sparse
/// columns and reduced on the fly into a triangular basis, so quotients of
/// large presentations stay cheap. Final quotients do not depend on the
/// insertion order.
class RelationLattice {
public:
    explicit RelationLattice(std::size_t generator_count);

    std::size_t generator_count() const { return n_; }

    /// Indices may repeat; coefficients are summed. Out-of-range indices throw.
    void add_relation(const std::vector<std::pair<std::size_t, long long>>& terms);
    void add_relation_big(std::vector<std::pair<std::size_t, Int>> terms);

    /// Z^generator_count / (accumulated column lattice).
    FgAbGroup quotient() const;

private:
    using Column = std::vector<std::pair<std::size_t, Int>>;
    void incorporate(Column col);

    std::size_t n_ = 0;
    std::vector<Column> basis_;  // basis_[p] has its topmost entry at row p
};

}  // namespace rstft

#endif
