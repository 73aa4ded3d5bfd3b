#include "rstft/skk.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rstft {

SkkClass& SkkClass::operator+=(const SkkClass& other) {
    if (r != other.r) throw std::invalid_argument("SkkClass: mismatched r");
    j += other.j;
    eps = (eps + other.eps) & 1;
    if (!has_torsion_part()) eps = 0;
    return *this;
}

SkkClass scale_class(long long c, const SkkClass& x) {
    SkkClass out = x;
    out.j = c * x.j;
    out.eps = x.has_torsion_part() ? static_cast<int>(((c % 2) + 2) % 2) * x.eps : 0;
    return out;
}

void FormalSurfaceSum::add(const ClosedRSpinSurface& s, long long coeff) {
    if (coeff == 0) return;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it->first == s) {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
            return;
        }
    }
    terms.emplace_back(s, coeff);
}

FormalSurfaceSum& FormalSurfaceSum::operator+=(const FormalSurfaceSum& other) {
    for (const auto& [s, c] : other.terms) add(s, c);
    return *this;
}

FgAbGroup skk_group(const RParam& r) {
    if (r.value == 0) return FgAbGroup::cyclic(2);
    if (r.is_even()) return FgAbGroup{1, {2}};
    return FgAbGroup::free_group(1);
}

namespace {

// Four-term relation column: T(k,u1) + T(k,u2) + T(k,u3) + T(k,u4)
// = T(k,u1+u2) + T(k,u3+u4), as a sparse vector over generator indices.
template <typename IndexFn>
std::vector<std::pair<std::size_t, long long>> four_term_column(
    IndexFn&& index, long long kappa, long long u1, long long u2, long long u3, long long u4,
    long long s12, long long s34) {
    return {{index(kappa, u1), 1},   {index(kappa, u2), 1},   {index(kappa, u3), 1},
            {index(kappa, u4), 1},   {index(kappa, s12), -1}, {index(kappa, s34), -1}};
}

FgAbGroup torus_oracle_positive(const RParam& r, std::uint64_t seed) {
    const long long n = r.value;
    auto index = [n](long long kappa, long long u) {
        kappa %= n;
        if (kappa < 0) kappa += n;
        u %= n;
        if (u < 0) u += n;
        return static_cast<std::size_t>(kappa * n + u);
    };
    RelationLattice lat(static_cast<std::size_t>(n * n));

    for (long long u = 0; u < n; ++u) lat.add_relation({{index(1, u), 1}});

    for (long long s = 0; s < n; ++s)
        for (long long t = 0; t < n; ++t) {
            long long d = sl2_canonical(TorusSpin{s, t}, r);
            if (index(s, t) == index(d, 0)) continue;
            lat.add_relation({{index(s, t), 1}, {index(d, 0), -1}});
        }

    if (n <= 8) {
        for (long long k = 0; k < n; ++k)
            for (long long u1 = 0; u1 < n; ++u1)
                for (long long u2 = 0; u2 < n; ++u2)
                    for (long long u3 = 0; u3 < n; ++u3)
                        for (long long u4 = 0; u4 < n; ++u4)
                            lat.add_relation(
                                four_term_column(index, k, u1, u2, u3, u4, u1 + u2, u3 + u4));
    } else {
        // instances grow as r^5; a seeded subsample already pins the quotient
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long long> pick(0, n - 1);
        const long long samples = 10 * n * n * n;
        for (long long i = 0; i < samples; ++i) {
            long long k = pick(rng), u1 = pick(rng), u2 = pick(rng), u3 = pick(rng),
                      u4 = pick(rng);
            lat.add_relation(four_term_column(index, k, u1, u2, u3, u4, u1 + u2, u3 + u4));
        }
    }
    return lat.quotient();
}

FgAbGroup torus_oracle_framed(long long window) {
    if (window < 1) throw std::invalid_argument("torus_subgroup_oracle: window must be >= 1");
    const long long w = window, side = 2 * w + 1;
    auto in_window = [w](long long v) { return -w <= v && v <= w; };
    auto index = [w, side](long long kappa, long long u) {
        return static_cast<std::size_t>((kappa + w) * side + (u + w));
    };
    RelationLattice lat(static_cast<std::size_t>(side * side));

    for (long long u = -w; u <= w; ++u) lat.add_relation({{index(1, u), 1}});

    for (long long s = -w; s <= w; ++s)
        for (long long t = -w; t <= w; ++t) {
            long long d = sl2_canonical(TorusSpin{s, t}, RParam(0));
            if (index(s, t) == index(d, 0)) continue;
            lat.add_relation({{index(s, t), 1}, {index(d, 0), -1}});
        }

    for (long long k = -w; k <= w; ++k)
        for (long long u1 = -w; u1 <= w; ++u1)
            for (long long u2 = -w; u2 <= w; ++u2) {
                if (!in_window(u1 + u2)) continue;
                for (long long u3 = -w; u3 <= w; ++u3)
                    for (long long u4 = -w; u4 <= w; ++u4) {
                        if (!in_window(u3 + u4)) continue;
                        lat.add_relation(
                            four_term_column(index, k, u1, u2, u3, u4, u1 + u2, u3 + u4));
                    }
            }
    return lat.quotient();
}

}  // namespace

FgAbGroup torus_subgroup_oracle(const RParam& r, long long window, std::uint64_t seed) {
    return r.value == 0 ? torus_oracle_framed(window) : torus_oracle_positive(r, seed);
}

SkkClass skk_class(const ClosedRSpinSurface& s, const RParam& r) {
    require_valid_surface(s, r);
    SkkClass out{r, 0, 0};
    switch (s.kind) {
        case ClosedRSpinSurface::Kind::sphere:
            out.j = 1;
            break;
        case ClosedRSpinSurface::Kind::torus:
            if (r.is_even()) out.eps = sl2_canonical(s.spin, r) % 2 == 0 ? 1 : 0;
            break;
        case ClosedRSpinSurface::Kind::higher_genus:
            out.j = -s.genus_param;
            if (r.is_even()) out.eps = (*s.arf == ArfSign::minus) ? 1 : 0;
            break;
        case ClosedRSpinSurface::Kind::low_genus:
            out.j = 1 - s.genus_param;
            if (r.is_even()) out.eps = (*s.arf == ArfSign::minus) ? 1 : 0;
            break;
    }
    if (r.value == 0) out.j = 0;
    return out;
}

SkkClass skk_class(const FormalSurfaceSum& x, const RParam& r) {
    SkkClass out{r, 0, 0};
    for (const auto& [s, c] : x.terms) out += scale_class(c, skk_class(s, r));
    return out;
}

long long euler_hom(const SkkClass& c) {
    if (c.r.value == 0)
        throw std::invalid_argument("euler_hom: chi vanishes identically for r = 0");
    return 2 * c.r.r_tilde() * c.j;
}

FormalSurfaceSum section_phi(long long j, const RParam& r) {
    if (r.value == 0) throw std::invalid_argument("section_phi: undefined for r = 0");
    FormalSurfaceSum out;
    if (j == 0) return out;
    if (r.value <= 2) {
        out.add(ClosedRSpinSurface::sphere(), j);
    } else if (!r.is_even()) {
        // U_{|j|} has chi/(2r~) = -|j|, so the section carries sign -sign(j)
        out.add(ClosedRSpinSurface::higher_genus(std::abs(j)), j > 0 ? -1 : 1);
    } else {
        out.add(ClosedRSpinSurface::higher_genus(std::abs(j), ArfSign::plus), j > 0 ? -1 : 1);
    }
    return out;
}

SkkClass k_invariant_circle(long long kappa, const RParam& r) {
    return skk_class(ClosedRSpinSurface::torus(kappa, 0), r);
}

}  // namespace rstft
