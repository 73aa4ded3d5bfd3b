#include "rstft/picard.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rstft {

bool pi1_elem_is_zero(const Pi1Group& g, const Pi1Elem& e) {
    if (g.has_circle() && e.sign != +1) return false;
    return is_zero_element(g.finite_part, e.coords);
}

Pi1Elem pi1_elem_add(const Pi1Group& g, const Pi1Elem& a, const Pi1Elem& b) {
    Pi1Elem out;
    out.sign = g.has_circle() ? a.sign * b.sign : +1;
    out.coords = add_elements(g.finite_part, a.coords, b.coords);
    return out;
}

bool pi1_elem_order_divides_2(const Pi1Group& g, const Pi1Elem& e) {
    if (e.sign != +1 && e.sign != -1) return false;
    return is_zero_element(g.finite_part, scale_element(g.finite_part, 2, e.coords));
}

PicardData make_picard_data(FgAbGroup pi0, Pi1Group pi1, std::vector<Pi1Elem> k) {
    const std::size_t m = tensor_z2_generators(pi0).size();
    if (k.size() != m)
        throw KInvariantError("k-invariant: expected one value per generator of pi0 (x) Z/2");
    for (Pi1Elem& e : k) {
        if (e.coords.size() != pi1.finite_part.gen_count())
            throw KInvariantError("k-invariant: value has wrong coordinate length");
        if (!pi1.has_circle() && e.sign != +1)
            throw KInvariantError("k-invariant: sign in a group without circle factor");
        if (!pi1_elem_order_divides_2(pi1, e))
            throw KInvariantError("k-invariant: value of order > 2");
        e.coords = reduce_element(pi1.finite_part, std::move(e.coords));
    }
    return PicardData{std::move(pi0), std::move(pi1), std::move(k)};
}

PicardData bord_picard_data(const RParam& r) {
    if (r.value == 0)
        return make_picard_data(FgAbGroup::cyclic(2), Pi1Group::finitely(FgAbGroup::cyclic(2)),
                                {Pi1Elem::finite_value({1})});
    if (r.is_even())
        return make_picard_data(FgAbGroup::cyclic(2), Pi1Group::finitely(FgAbGroup{1, {2}}),
                                {Pi1Elem::finite_value({0, 1})});
    return make_picard_data(FgAbGroup::trivial(), Pi1Group::finitely(FgAbGroup::free_group(1)),
                            {});
}

PicardData sline() {
    return make_picard_data(FgAbGroup::cyclic(2), Pi1Group::circle(),
                            {Pi1Elem::circle_value(-1)});
}

PicardData line() {
    return make_picard_data(FgAbGroup::cyclic(2), Pi1Group::circle(),
                            {Pi1Elem::circle_value(+1)});
}

// --------------------------------------------------------- expressions

std::vector<std::string> FormalGroupExpr::factor_strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < finite.free_rank; ++i) out.emplace_back("Z");
    for (const Int& d : finite.torsion) {
        std::ostringstream os;
        os << "Z/" << d;
        out.push_back(os.str());
    }
    for (std::size_t i = 0; i < circle_factors; ++i) out.emplace_back("C*");
    return out;
}

std::string FormalGroupExpr::to_string() const {
    auto factors = factor_strings();
    if (factors.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i];
    }
    return out;
}

FormalGroupExpr expr_from_group(FgAbGroup g) { return {std::move(g), 0}; }

FormalGroupExpr expr_circle(std::size_t count) { return {FgAbGroup::trivial(), count}; }

FormalGroupExpr expr_product(const FormalGroupExpr& a, const FormalGroupExpr& b) {
    return {direct_sum(a.finite, b.finite), a.circle_factors + b.circle_factors};
}

// ------------------------------------------- finite structure recovery

namespace {

// Isomorphism type of a finite abelian group given as an explicit list of
// elements (coordinates with per-coordinate moduli, 0 meaning a free
// coordinate). Uses the order statistics: the number of elements killed by
// p^k determines the partition of each p-part.
FgAbGroup structure_from_order_counts(const std::vector<std::vector<Int>>& elems,
                                      const std::vector<Int>& moduli) {
    const long long n = static_cast<long long>(elems.size());
    if (n <= 1) return FgAbGroup::trivial();

    auto killed_by = [&](long long m) {
        long long count = 0;
        for (const auto& e : elems) {
            bool zero = true;
            for (std::size_t i = 0; i < e.size() && zero; ++i) {
                Int v = m * e[i];
                if (moduli[i] == 0) {
                    if (v != 0) zero = false;
                } else if (v % moduli[i] != 0) {
                    zero = false;
                }
            }
            if (zero) ++count;
        }
        return count;
    };

    // prime factorisation of |S| by trial division; |S| is desk-scale
    std::vector<std::pair<long long, int>> primes;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        primes.emplace_back(p, e);
    }
    if (rest > 1) primes.emplace_back(rest, 1);

    // lambda[p] = partition of the p-part, largest first
    std::vector<std::vector<int>> partitions;
    for (auto [p, e] : primes) {
        std::vector<int> m_k;  // m_k = #parts >= k
        long long prev = 1, pk = 1;
        for (int k = 1; k <= e && prev < n; ++k) {
            pk *= p;
            long long cnt = killed_by(pk);
            long long ratio = cnt / prev;
            int mk = 0;
            while (ratio > 1) {
                ratio /= p;
                ++mk;
            }
            m_k.push_back(mk);
            prev = cnt;
        }
        std::vector<int> lambda;
        for (int i = 1; !m_k.empty() && i <= m_k[0]; ++i) {
            int parts = 0;
            for (std::size_t k = 0; k < m_k.size(); ++k)
                if (m_k[k] >= i) ++parts;
            lambda.push_back(parts);
        }
        partitions.push_back(std::move(lambda));
    }

    std::size_t max_parts = 0;
    for (const auto& l : partitions) max_parts = std::max(max_parts, l.size());
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < max_parts; ++i) {
        Int d = 1;
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            if (i >= partitions[pi].size()) continue;
            for (int rep = 0; rep < partitions[pi][i]; ++rep) d *= primes[pi].first;
        }
        torsion.push_back(d);
    }
    std::reverse(torsion.begin(), torsion.end());  // ascending divisibility
    return FgAbGroup{0, std::move(torsion)};
}

std::vector<Int> hom_moduli(const GroupHom& h) {
    std::vector<Int> moduli;
    moduli.reserve(h.matrix.rows() * h.matrix.cols());
    for (std::size_t i = 0; i < h.matrix.rows(); ++i) {
        Int m = i < h.target.free_rank ? Int(0) : h.target.torsion[i - h.target.free_rank];
        for (std::size_t j = 0; j < h.matrix.cols(); ++j) moduli.push_back(m);
    }
    return moduli;
}

std::vector<Int> flatten_hom(const GroupHom& h) {
    std::vector<Int> flat;
    flat.reserve(h.matrix.rows() * h.matrix.cols());
    GroupVec col(h.matrix.rows());
    IntMatrix m = h.matrix;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool torsion_row = i >= h.target.free_rank;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int v = m.at(i, j);
            if (torsion_row) {
                const Int& d = h.target.torsion[i - h.target.free_rank];
                v %= d;
                if (v < 0) v += d;
            }
            flat.push_back(std::move(v));
        }
    }
    return flat;
}

// Matrix of f0 (x) Z/2 over the surviving generators, as bits.
std::vector<std::vector<int>> tensor_bits(const GroupHom& f0) {
    auto src_idx = tensor_z2_generators(f0.source);
    auto tgt_idx = tensor_z2_generators(f0.target);
    std::vector<std::vector<int>> bits(src_idx.size(), std::vector<int>(tgt_idx.size(), 0));
    for (std::size_t x = 0; x < src_idx.size(); ++x)
        for (std::size_t y = 0; y < tgt_idx.size(); ++y) {
            Int v = f0.matrix.at(tgt_idx[y], src_idx[x]) % 2;
            bits[x][y] = v == 0 ? 0 : 1;
        }
    return bits;
}

// k_target composed with f0 (x) Z/2, evaluated on source tensor generator x.
Pi1Elem k_after_tensor(const PicardData& target, const GroupHom& f0,
                       const std::vector<std::vector<int>>& bits, std::size_t x) {
    Pi1Elem acc{+1, zero_element(target.pi1.finite_part)};
    for (std::size_t y = 0; y < bits[x].size(); ++y)
        if (bits[x][y]) acc = pi1_elem_add(target.pi1, acc, target.k[y]);
    return acc;
}

FormalGroupExpr classify_by_enumeration(const PicardData& src, const PicardData& tgt) {
    auto f0s = enumerate_homs(src.pi0, tgt.pi0);
    auto f1s = enumerate_homs(src.pi1.finite_part, tgt.pi1.finite_part);

    const std::size_t m = src.k.size();
    std::vector<std::vector<Int>> members;
    std::vector<Int> moduli;
    for (const GroupHom& f0 : f0s) {
        auto bits = tensor_bits(f0);
        std::vector<GroupVec> rhs;
        rhs.reserve(m);
        for (std::size_t x = 0; x < m; ++x) rhs.push_back(k_after_tensor(tgt, f0, bits, x).coords);
        for (const GroupHom& f1 : f1s) {
            bool ok = true;
            for (std::size_t x = 0; x < m && ok; ++x) {
                GroupVec lhs = apply_hom(f1, src.k[x].coords);
                ok = lhs == reduce_element(tgt.pi1.finite_part, rhs[x]);
            }
            if (!ok) continue;
            std::vector<Int> flat = flatten_hom(f0);
            std::vector<Int> f1flat = flatten_hom(f1);
            flat.insert(flat.end(), f1flat.begin(), f1flat.end());
            if (members.empty()) {
                moduli = hom_moduli(f0);
                std::vector<Int> m1 = hom_moduli(f1);
                moduli.insert(moduli.end(), m1.begin(), m1.end());
            }
            members.push_back(std::move(flat));
        }
    }
    FgAbGroup pairs = structure_from_order_counts(members, moduli);
    return expr_product(expr_from_group(pairs),
                        expr_from_group(ext_group(src.pi0, tgt.pi1.finite_part)));
}

FormalGroupExpr classify_by_structure(const PicardData& src, const PicardData& tgt) {
    const FgAbGroup& pi1c = src.pi1.finite_part;
    const std::size_t m = src.k.size();

    // split the source k-map: generators with zero image constrain f0;
    // nonzero images must each hit a distinct Z/2 summand of pi1(source),
    // where the constraint determines f1 and is always solvable
    std::vector<std::size_t> zero_gens;
    std::set<std::size_t> used_torsion;
    for (std::size_t x = 0; x < m; ++x) {
        const GroupVec v = reduce_element(pi1c, src.k[x].coords);
        std::size_t nonzero = 0, where = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                ++nonzero;
                where = i;
            }
        if (nonzero == 0) {
            zero_gens.push_back(x);
            continue;
        }
        bool summand = nonzero == 1 && where >= pi1c.free_rank &&
                       pi1c.torsion[where - pi1c.free_rank] == 2 && v[where] == 1 &&
                       used_torsion.insert(where - pi1c.free_rank).second;
        if (!summand)
            throw UnsupportedClassificationError(
                "classify_functors: source k-invariant does not split off Z/2 summands");
    }

    // complement of the split-off summands
    FgAbGroup complement{pi1c.free_rank, {}};
    for (std::size_t i = 0; i < pi1c.torsion.size(); ++i)
        if (!used_torsion.count(i)) complement.torsion.push_back(pi1c.torsion[i]);

    // f0 must kill the target k on the zero-image generators
    auto f0s = enumerate_homs(src.pi0, tgt.pi0);
    std::vector<std::vector<Int>> members;
    std::vector<Int> moduli;
    for (const GroupHom& f0 : f0s) {
        auto bits = tensor_bits(f0);
        bool ok = true;
        for (std::size_t x : zero_gens)
            if (!pi1_elem_is_zero(tgt.pi1, k_after_tensor(tgt, f0, bits, x))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (members.empty()) moduli = hom_moduli(f0);
        members.push_back(flatten_hom(f0));
    }
    FormalGroupExpr out = expr_from_group(structure_from_order_counts(members, moduli));

    // Hom(complement, C*) = C*^rank x torsion(complement)
    out = expr_product(out, expr_circle(complement.free_rank));
    out = expr_product(out, expr_from_group(FgAbGroup{0, complement.torsion}));
    // Hom(complement, finite factor of pi1(target))
    out = expr_product(out, expr_from_group(hom_group(complement, tgt.pi1.finite_part)));
    // Ext into C* vanishes by divisibility; the finite factor contributes
    out = expr_product(out, expr_from_group(ext_group(src.pi0, tgt.pi1.finite_part)));
    return out;
}

}  // namespace

FormalGroupExpr classify_functors(const PicardData& source, const PicardData& target) {
    if (source.pi1.has_circle())
        throw UnsupportedClassificationError("classify_functors: symbolic source pi1");
    if (!source.pi0.is_finite())
        throw UnsupportedClassificationError("classify_functors: source pi0 has free rank");

    if (target.pi1.has_circle()) return classify_by_structure(source, target);

    if (hom_group(source.pi1.finite_part, target.pi1.finite_part).is_finite())
        return classify_by_enumeration(source, target);

    throw UnsupportedClassificationError(
        "classify_functors: target pi1 gives an infinite Hom group and has no circle factor");
}

FormalGroupExpr classify_rspin_tfts(const RParam& r, const PicardData& target) {
    const FgAbGroup z2 = FgAbGroup::cyclic(2);

    FormalGroupExpr pi1_expr = expr_from_group(target.pi1.finite_part);
    if (target.pi1.has_circle()) pi1_expr = expr_product(pi1_expr, expr_circle());

    if (r.value > 0 && !r.is_even()) return pi1_expr;

    // Ext(Z/2, pi1): the circle factor is divisible and drops out
    FormalGroupExpr out = expr_from_group(hom_group(z2, target.pi0));
    out = expr_product(out, expr_from_group(ext_group(z2, target.pi1.finite_part)));
    if (r.value == 0) return out;
    return expr_product(out, pi1_expr);
}

}  // namespace rstft
