#include "rstft/abelian.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace rstft {

void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

Rational rational_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    unsigned long long n;
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("rational_pow: zero base with negative exponent");
        b = Rational(1) / base;
        n = static_cast<unsigned long long>(-(e + 1)) + 1;
    } else {
        n = static_cast<unsigned long long>(e);
    }
    Rational acc(1);
    while (n != 0) {
        if (n & 1) acc *= b;
        n >>= 1;
        if (n != 0) b *= b;
    }
    return acc;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    if (denominator(q) == 1)
        os << numerator(q);
    else
        os << numerator(q) << "/" << denominator(q);
    return os.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Int& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

// ------------------------------------------------------------- Smith form

namespace {

// Quotient rounded to nearest so remainders satisfy |rem| <= |b|/2.
Int nearest_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && 2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

// In-place SNF of b; u/v (optional) accumulate the row/column operations.
void snf_run(IntMatrix& b, IntMatrix* u, IntMatrix* v) {
    const std::size_t m = b.rows(), n = b.cols();
    std::size_t t = 0;
    while (t < std::min(m, n)) {
        // pivot: nonzero entry of minimal absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& e = b.at(i, j);
                if (e == 0) continue;
                if (!found || abs(e) < abs(b.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) {
            b.swap_rows(t, pi);
            if (u) u->swap_rows(t, pi);
        }
        if (pj != t) {
            b.swap_cols(t, pj);
            if (v) v->swap_cols(t, pj);
        }

        bool stable = false;
        while (!stable) {
            stable = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (b.at(i, t) == 0) continue;
                Int q = nearest_div(b.at(i, t), b.at(t, t));
                if (q != 0) {
                    b.add_row_multiple(i, t, -q);
                    if (u) u->add_row_multiple(i, t, -q);
                }
                if (b.at(i, t) != 0) {
                    // remainder is strictly smaller: promote it to pivot
                    b.swap_rows(t, i);
                    if (u) u->swap_rows(t, i);
                    stable = false;
                }
            }
            if (!stable) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (b.at(t, j) == 0) continue;
                Int q = nearest_div(b.at(t, j), b.at(t, t));
                if (q != 0) {
                    b.add_col_multiple(j, t, -q);
                    if (v) v->add_col_multiple(j, t, -q);
                }
                if (b.at(t, j) != 0) {
                    b.swap_cols(t, j);
                    if (v) v->swap_cols(t, j);
                    stable = false;
                }
            }
        }

        // divisibility: the pivot must divide the whole trailing block
        bool restart = false;
        for (std::size_t i = t + 1; i < m && !restart; ++i)
            for (std::size_t j = t + 1; j < n && !restart; ++j)
                if (b.at(i, j) % b.at(t, t) != 0) {
                    b.add_row_multiple(t, i, 1);
                    if (u) u->add_row_multiple(t, i, 1);
                    restart = true;
                }
        if (restart) continue;

        if (b.at(t, t) < 0) {
            b.negate_row(t);
            if (u) u->negate_row(t);
        }
        ++t;
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition s{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    snf_run(s.d, &s.u, &s.v);
    return s;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
    IntMatrix b = a;
    snf_run(b, nullptr, nullptr);
    std::vector<Int> diag(std::min(b.rows(), b.cols()));
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = b.at(i, i);
    return diag;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m.at(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// -------------------------------------------------------------- FgAbGroup

FgAbGroup FgAbGroup::cyclic(const Int& d) {
    if (d < 0) throw std::invalid_argument("FgAbGroup::cyclic: negative order");
    if (d == 0) return {1, {}};
    if (d == 1) return {};
    return {0, {d}};
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < free_rank; ++i) {
        if (!first) os << " x ";
        os << "Z";
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " x ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbGroup group_from_cyclic_factors(const std::vector<Int>& factors) {
    FgAbGroup g;
    std::vector<Int> t;
    for (const Int& f : factors) {
        if (f < 0) throw std::invalid_argument("group_from_cyclic_factors: negative factor");
        if (f == 0)
            ++g.free_rank;
        else if (f > 1)
            t.push_back(f);
    }
    // smooth to a divisibility chain: replacing (a,b) by (gcd,lcm) preserves
    // the group and terminates because the multiset of gcds only refines
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (t[j] % t[i] == 0 || t[i] % t[j] == 0) continue;
                Int g2 = boost::integer::gcd(t[i], t[j]);
                Int l2 = t[i] / g2 * t[j];
                t[i] = g2;
                t[j] = l2;
                changed = true;
            }
    }
    t.erase(std::remove(t.begin(), t.end(), Int(1)), t.end());
    std::sort(t.begin(), t.end());
    g.torsion = std::move(t);
    return g;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> factors(a.free_rank + b.free_rank, Int(0));
    factors.insert(factors.end(), a.torsion.begin(), a.torsion.end());
    factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
    return group_from_cyclic_factors(factors);
}

Int group_order(const FgAbGroup& g) {
    if (g.free_rank > 0) return 0;
    Int n = 1;
    for (const Int& d : g.torsion) n *= d;
    return n;
}

FgAbGroup cokernel(const IntMatrix& relations) {
    RelationLattice lat(relations.rows());
    for (std::size_t j = 0; j < relations.cols(); ++j) {
        std::vector<std::pair<std::size_t, Int>> col;
        for (std::size_t i = 0; i < relations.rows(); ++i)
            if (relations.at(i, j) != 0) col.emplace_back(i, relations.at(i, j));
        lat.add_relation_big(std::move(col));
    }
    return lat.quotient();
}

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> factors;
    for (std::size_t i = 0; i < a.free_rank; ++i) {
        // Hom(Z, B) = B
        factors.insert(factors.end(), b.free_rank, Int(0));
        factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
    }
    // Hom(Z/d, Z) = 0, Hom(Z/d, Z/e) = Z/gcd(d,e)
    for (const Int& d : a.torsion)
        for (const Int& e : b.torsion) factors.push_back(boost::integer::gcd(d, e));
    return group_from_cyclic_factors(factors);
}

FgAbGroup ext_group(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> factors;
    // Ext(Z, B) = 0; Ext(Z/d, B) = B/dB
    for (const Int& d : a.torsion) {
        factors.insert(factors.end(), b.free_rank, d);
        for (const Int& e : b.torsion) factors.push_back(boost::integer::gcd(d, e));
    }
    return group_from_cyclic_factors(factors);
}

FgAbGroup tensor_z2(const FgAbGroup& a) {
    FgAbGroup g;
    g.torsion.assign(tensor_z2_generators(a).size(), Int(2));
    return g;
}

std::vector<std::size_t> tensor_z2_generators(const FgAbGroup& a) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.free_rank; ++i) idx.push_back(i);
    for (std::size_t i = 0; i < a.torsion.size(); ++i)
        if (a.torsion[i] % 2 == 0) idx.push_back(a.free_rank + i);
    return idx;
}

// --------------------------------------------------------------- elements

GroupVec zero_element(const FgAbGroup& g) { return GroupVec(g.gen_count()); }

GroupVec reduce_element(const FgAbGroup& g, GroupVec v) {
    if (v.size() != g.gen_count()) throw std::invalid_argument("reduce_element: wrong length");
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        Int& x = v[g.free_rank + i];
        x %= g.torsion[i];
        if (x < 0) x += g.torsion[i];
    }
    return v;
}

GroupVec add_elements(const FgAbGroup& g, const GroupVec& a, const GroupVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add_elements: length mismatch");
    GroupVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return reduce_element(g, std::move(out));
}

GroupVec scale_element(const FgAbGroup& g, const Int& c, const GroupVec& v) {
    GroupVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return reduce_element(g, std::move(out));
}

bool is_zero_element(const FgAbGroup& g, const GroupVec& v) {
    GroupVec r = reduce_element(g, v);
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

Int element_order(const FgAbGroup& g, const GroupVec& v) {
    GroupVec r = reduce_element(g, v);
    for (std::size_t i = 0; i < g.free_rank; ++i)
        if (r[i] != 0) return 0;
    Int ord = 1;
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        const Int& d = g.torsion[i];
        Int o = d / boost::integer::gcd(d, r[g.free_rank + i]);
        ord = boost::integer::lcm(ord, o);
    }
    return ord;
}

namespace {

constexpr long long kEnumerationCap = 2'000'000;

std::vector<GroupVec> cartesian_elements(const FgAbGroup& g,
                                         const std::vector<std::vector<Int>>& per_coord) {
    Int total = 1;
    for (const auto& c : per_coord) {
        total *= static_cast<long long>(c.size());
        if (total > kEnumerationCap)
            throw std::invalid_argument("element enumeration exceeds cap");
    }
    std::vector<GroupVec> out;
    out.reserve(static_cast<std::size_t>(total));
    GroupVec cur(g.gen_count());
    std::vector<std::size_t> pos(per_coord.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < per_coord.size(); ++i) cur[i] = per_coord[i][pos[i]];
        out.push_back(cur);
        std::size_t k = per_coord.size();
        while (k > 0) {
            --k;
            if (++pos[k] < per_coord[k].size()) break;
            pos[k] = 0;
            if (k == 0) return out;
        }
        if (per_coord.empty()) return out;
    }
}

}  // namespace

std::vector<GroupVec> all_elements(const FgAbGroup& g) {
    if (!g.is_finite()) throw std::invalid_argument("all_elements: infinite group");
    std::vector<std::vector<Int>> per_coord;
    for (const Int& d : g.torsion) {
        std::vector<Int> vals;
        for (Int x = 0; x < d; ++x) vals.push_back(x);
        per_coord.push_back(std::move(vals));
    }
    return cartesian_elements(g, per_coord);
}

std::vector<GroupVec> elements_killed_by(const FgAbGroup& g, const Int& n) {
    if (n == 0) throw std::invalid_argument("elements_killed_by: n must be nonzero");
    std::vector<std::vector<Int>> per_coord;
    // free coordinates admit only 0
    for (std::size_t i = 0; i < g.free_rank; ++i) per_coord.push_back({Int(0)});
    for (const Int& d : g.torsion) {
        Int cnt = boost::integer::gcd(abs(n), d);
        Int step = d / cnt;
        std::vector<Int> vals;
        for (Int k = 0; k < cnt; ++k) vals.push_back(k * step);
        per_coord.push_back(std::move(vals));
    }
    return cartesian_elements(g, per_coord);
}

// ------------------------------------------------------------------- homs

GroupHom hom_zero(const FgAbGroup& source, const FgAbGroup& target) {
    return {source, target, IntMatrix(target.gen_count(), source.gen_count())};
}

GroupHom hom_identity(const FgAbGroup& g) {
    return {g, g, IntMatrix::identity(g.gen_count())};
}

namespace {

IntMatrix reduced_hom_matrix(const GroupHom& h) {
    IntMatrix m = h.matrix;
    for (std::size_t i = 0; i < h.target.torsion.size(); ++i) {
        const Int& d = h.target.torsion[i];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int& x = m.at(h.target.free_rank + i, j);
            x %= d;
            if (x < 0) x += d;
        }
    }
    return m;
}

}  // namespace

bool hom_valid(const GroupHom& h) {
    if (h.matrix.rows() != h.target.gen_count() || h.matrix.cols() != h.source.gen_count())
        return false;
    for (std::size_t i = 0; i < h.source.torsion.size(); ++i) {
        std::size_t j = h.source.free_rank + i;
        GroupVec img(h.matrix.rows());
        for (std::size_t r = 0; r < h.matrix.rows(); ++r) img[r] = h.matrix.at(r, j);
        if (!is_zero_element(h.target, scale_element(h.target, h.source.torsion[i], img)))
            return false;
    }
    return true;
}

GroupHom hom_compose(const GroupHom& g, const GroupHom& f) {
    if (f.target != g.source) throw std::invalid_argument("hom_compose: middle groups differ");
    GroupHom out{f.source, g.target, g.matrix.multiplied(f.matrix)};
    out.matrix = reduced_hom_matrix(out);
    return out;
}

bool hom_equal(const GroupHom& f, const GroupHom& g) {
    if (f.source != g.source || f.target != g.target) return false;
    return reduced_hom_matrix(f) == reduced_hom_matrix(g);
}

GroupVec apply_hom(const GroupHom& h, const GroupVec& v) {
    if (v.size() != h.source.gen_count()) throw std::invalid_argument("apply_hom: wrong length");
    GroupVec out(h.target.gen_count());
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += h.matrix.at(i, j) * v[j];
    return reduce_element(h.target, std::move(out));
}

std::vector<GroupHom> enumerate_homs(const FgAbGroup& a, const FgAbGroup& b) {
    FgAbGroup h = hom_group(a, b);
    if (!h.is_finite()) throw InfiniteHomError("enumerate_homs: Hom(" + a.to_string() + ", " +
                                               b.to_string() + ") is infinite");
    // candidate images per source generator
    std::vector<std::vector<GroupVec>> cand;
    for (std::size_t i = 0; i < a.free_rank; ++i) cand.push_back(all_elements(b));
    for (const Int& d : a.torsion) cand.push_back(elements_killed_by(b, d));

    Int total = 1;
    for (const auto& c : cand) {
        total *= static_cast<long long>(c.size());
        if (total > kEnumerationCap) throw std::invalid_argument("enumerate_homs exceeds cap");
    }
    std::vector<GroupHom> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::size_t> pos(cand.size(), 0);
    while (true) {
        GroupHom hom{a, b, IntMatrix(b.gen_count(), a.gen_count())};
        for (std::size_t j = 0; j < cand.size(); ++j)
            for (std::size_t i = 0; i < b.gen_count(); ++i) hom.matrix.at(i, j) = cand[j][pos[j]][i];
        out.push_back(std::move(hom));
        std::size_t k = cand.size();
        bool done = cand.empty();
        while (k > 0) {
            --k;
            if (++pos[k] < cand[k].size()) break;
            pos[k] = 0;
            if (k == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

// -------------------------------------------------------- RelationLattice

RelationLattice::RelationLattice(std::size_t generator_count)
    : n_(generator_count), basis_(generator_count) {}

void RelationLattice::add_relation(const std::vector<std::pair<std::size_t, long long>>& terms) {
    std::vector<std::pair<std::size_t, Int>> big;
    big.reserve(terms.size());
    for (const auto& [idx, c] : terms) big.emplace_back(idx, Int(c));
    add_relation_big(std::move(big));
}

void RelationLattice::add_relation_big(std::vector<std::pair<std::size_t, Int>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Column col;
    for (auto& [idx, c] : terms) {
        if (idx >= n_) throw std::invalid_argument("RelationLattice: generator index out of range");
        if (!col.empty() && col.back().first == idx)
            col.back().second += c;
        else
            col.emplace_back(idx, std::move(c));
        if (col.back().second == 0) col.pop_back();
    }
    if (!col.empty()) incorporate(std::move(col));
}

namespace detail {

using SparseCol = std::vector<std::pair<std::size_t, Int>>;

// ca*a + cb*b over sparse columns sorted by row; zero entries dropped.
SparseCol axpy(const SparseCol& a, const Int& ca, const SparseCol& b, const Int& cb) {
    SparseCol out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            Int v = ca * a[i].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            Int v = cb * b[j].second;
            if (v != 0) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Int v = ca * a[i].second + cb * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace detail

void RelationLattice::incorporate(Column col) {
    using detail::axpy;
    while (!col.empty()) {
        const std::size_t p = col.front().first;
        Column& b = basis_[p];
        if (b.empty()) {
            if (col.front().second < 0)
                for (auto& [idx, c] : col) c = -c;
            b = std::move(col);
            return;
        }
        const Int bp = b.front().second;
        const Int vp = col.front().second;
        if (vp % bp == 0) {
            col = axpy(col, Int(1), b, -(vp / bp));
        } else {
            Int g, x, y;
            xgcd(bp, vp, g, x, y);
            Column new_b = axpy(b, x, col, y);
            Column new_col = axpy(col, bp / g, b, -(vp / g));
            b = std::move(new_b);
            col = std::move(new_col);
        }
    }
}

FgAbGroup RelationLattice::quotient() const {
    // working copy of the nonempty basis columns
    std::vector<Column> cols;
    cols.reserve(n_);
    for (const Column& c : basis_)
        if (!c.empty()) cols.push_back(c);

    std::vector<bool> dead_row(n_, false);

    // eliminate generators with a +-1 pivot (Tietze substitution); this keeps
    // the final dense SNF tiny even for windowed presentations
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            Column& c = cols[ci];
            if (c.empty()) continue;
            const Int& piv = c.front().second;
            if (piv != 1 && piv != -1) continue;
            const std::size_t p = c.front().first;
            if (piv == -1)
                for (auto& [idx, v] : c) v = -v;
            Column subst = c;  // e_p + tail, expresses generator p
            for (std::size_t cj = 0; cj < cols.size(); ++cj) {
                if (cj == ci) continue;
                Column& o = cols[cj];
                auto it = std::lower_bound(
                    o.begin(), o.end(), p,
                    [](const auto& e, std::size_t row) { return e.first < row; });
                if (it == o.end() || it->first != p) continue;
                o = detail::axpy(o, Int(1), subst, -it->second);
            }
            dead_row[p] = true;
            c.clear();
            changed = true;
        }
    }

    std::vector<std::size_t> row_map(n_, SIZE_MAX);
    std::size_t alive = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (!dead_row[i]) row_map[i] = alive++;

    std::vector<Column> live_cols;
    for (Column& c : cols)
        if (!c.empty()) live_cols.push_back(std::move(c));

    IntMatrix m(alive, live_cols.size());
    for (std::size_t j = 0; j < live_cols.size(); ++j)
        for (const auto& [row, v] : live_cols[j]) m.at(row_map[row], j) = v;

    std::vector<Int> diag = invariant_factors(m);
    FgAbGroup g;
    std::size_t rank = 0;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) g.torsion.push_back(d);
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    g.free_rank = alive - rank;
    return g;
}

}  // namespace rstft
