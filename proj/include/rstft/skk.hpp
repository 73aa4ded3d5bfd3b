#ifndef RSTFT_SKK_HPP
#define RSTFT_SKK_HPP

#include "rstft/abelian.hpp"
#include "rstft/rspin.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rstft {

/// Normal form of a class of closed surfaces modulo cut-and-reglue:
/// j = chi/(2*r~) (free coordinate, identically 0 for r = 0) and
/// eps in Z/2 (torsion coordinate, present exactly for even r, including 0).
struct SkkClass {
    RParam r;
    long long j = 0;
    int eps = 0;

    bool has_free_part() const { return r.value > 0; }
    bool has_torsion_part() const { return r.is_even(); }
    bool is_zero() const { return j == 0 && eps == 0; }

    SkkClass& operator+=(const SkkClass& other);
    friend SkkClass operator+(SkkClass a, const SkkClass& b) { return a += b; }
    bool operator==(const SkkClass&) const = default;
};

SkkClass scale_class(long long c, const SkkClass& x);

/// Formal Z-linear combination of closed surfaces (group completion under
/// disjoint union). Equal descriptors are merged; zero coefficients dropped.
struct FormalSurfaceSum {
    std::vector<std::pair<ClosedRSpinSurface, long long>> terms;

    void add(const ClosedRSpinSurface& s, long long coeff = 1);
    FormalSurfaceSum& operator+=(const FormalSurfaceSum& other);
    bool empty() const { return terms.empty(); }
};

/// Closed form of the surface cut-and-reglue group:
/// Z/2 for r = 0, Z x Z/2 for even r > 0, Z for odd r.
FgAbGroup skk_group(const RParam& r);

/// Brute-force quotient of the subgroup generated by tori, computed from the
/// torus relations alone via Smith normal form. Generators are the labels
/// T(kappa, u); relations are the four-term relations (exhaustive for
/// 0 < r <= 8, a seeded subsample of 10*r^3 instances above), T(1, u) = 0,
/// and the orbit identifications T(s,t) = T(gcd,0). For r = 0 the generator
/// labels are truncated to the window [-window, window]^2 with every
/// relation among in-window labels included.
FgAbGroup torus_subgroup_oracle(const RParam& r, long long window = 6,
                                std::uint64_t seed = 1);

SkkClass skk_class(const ClosedRSpinSurface& s, const RParam& r);
SkkClass skk_class(const FormalSurfaceSum& x, const RParam& r);

/// Euler characteristic of a class: 2 * r~ * j. Rejects r = 0 (chi vanishes
/// identically for framings).
long long euler_hom(const SkkClass& c);

/// Section of chi/(2*r~): j spheres for r in {1,2}, sign(j) U_{|j|} for odd
/// r > 2, sign(j) U_{|j|}^(+) for even r > 2. Rejects r = 0.
FormalSurfaceSum section_phi(long long j, const RParam& r);

/// Class of the self-braiding loop of the circle of type kappa: T(kappa, 0).
SkkClass k_invariant_circle(long long kappa, const RParam& r);

}  // namespace rstft

#endif
