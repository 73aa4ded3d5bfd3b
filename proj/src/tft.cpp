#include "rstft/tft.hpp"

#include <random>
#include <stdexcept>

namespace rstft {

InvertibleTft arf_tft(const RParam& r) {
    if (!r.is_even()) throw std::invalid_argument("arf_tft: r must be even");
    InvertibleTft z{r, {}, -1};
    if (r.value > 0) z.lambda = rational_pow(Rational(2), r.r_tilde());
    return z;
}

InvertibleTft euler_tft(const RParam& r, const Rational& lambda) {
    if (r.value == 0) throw std::invalid_argument("euler_tft: trivial for r = 0");
    if (lambda == 0) throw std::invalid_argument("euler_tft: lambda must be nonzero");
    InvertibleTft z{r, lambda, {}};
    if (r.is_even()) z.rho = +1;
    return z;
}

Rational evaluate(const InvertibleTft& z, const SkkClass& c) {
    if (c.r != z.r) throw std::invalid_argument("evaluate: mismatched r");
    Rational value(1);
    if (c.has_free_part()) value = rational_pow(*z.lambda, c.j);
    if (c.has_torsion_part() && c.eps == 1 && *z.rho == -1) value = -value;
    return value;
}

Rational evaluate(const InvertibleTft& z, const FormalSurfaceSum& x) {
    return evaluate(z, skk_class(x, z.r));
}

namespace {

void run_trial(const InvertibleTft& z, const std::string& family, const FormalSurfaceSum& lhs,
               const FormalSurfaceSum& rhs, SkkInvarianceReport& report) {
    ++report.trials;
    ++report.family_trials[family];
    if (evaluate(z, lhs) != evaluate(z, rhs)) ++report.mismatches;
}

}  // namespace

SkkInvarianceReport verify_skk_invariance(const InvertibleTft& z, long long trials,
                                          std::uint64_t seed) {
    SkkInvarianceReport report;
    if (trials <= 0) return report;

    const long long r = z.r.value;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> residue(r == 0 ? -8 : 0, r == 0 ? 8 : r - 1);
    std::uniform_int_distribution<long long> genus_l(1, 5);
    std::uniform_int_distribution<long long> genus_g(2, 8);
    std::uniform_int_distribution<int> coin(0, 1);

    const bool has_u = r > 2;
    const bool has_sphere = r == 1 || r == 2;
    const bool even = z.r.is_even();

    while (report.trials < trials) {
        // four-term torus relation
        long long k = residue(rng), u1 = residue(rng), u2 = residue(rng), u3 = residue(rng),
                  u4 = residue(rng);
        FormalSurfaceSum lhs, rhs;
        lhs.add(ClosedRSpinSurface::torus(k, u1));
        lhs.add(ClosedRSpinSurface::torus(k, u2));
        lhs.add(ClosedRSpinSurface::torus(k, u3));
        lhs.add(ClosedRSpinSurface::torus(k, u4));
        rhs.add(ClosedRSpinSurface::torus(k, u1 + u2));
        rhs.add(ClosedRSpinSurface::torus(k, u3 + u4));
        run_trial(z, "four_term_torus", lhs, rhs, report);

        if (has_u && report.trials < trials) {
            // genus addition: U_l + U_j = U_{l+j} (plus labels for even r)
            long long l = genus_l(rng), j = genus_l(rng);
            auto arf = even ? std::optional<ArfSign>(ArfSign::plus) : std::nullopt;
            FormalSurfaceSum a, b;
            a.add(ClosedRSpinSurface::higher_genus(l, arf));
            a.add(ClosedRSpinSurface::higher_genus(j, arf));
            b.add(ClosedRSpinSurface::higher_genus(l + j, arf));
            run_trial(z, "genus_addition", a, b, report);
        }
        if (has_u && even && report.trials < trials) {
            // Arf flip: U_l^(+) + T(0,0) = U_l^(-)
            long long l = genus_l(rng);
            FormalSurfaceSum a, b;
            a.add(ClosedRSpinSurface::higher_genus(l, ArfSign::plus));
            a.add(ClosedRSpinSurface::torus(0, 0));
            b.add(ClosedRSpinSurface::higher_genus(l, ArfSign::minus));
            run_trial(z, "arf_flip", a, b, report);
        }
        if (has_sphere && report.trials < trials) {
            // sphere stabilisation: S_{g+1} + S^2 = S_g
            long long g = genus_g(rng);
            auto arf = r == 2 ? std::optional<ArfSign>(coin(rng) ? ArfSign::plus : ArfSign::minus)
                              : std::nullopt;
            FormalSurfaceSum a, b;
            a.add(ClosedRSpinSurface::low_genus(g + 1, arf));
            a.add(ClosedRSpinSurface::sphere());
            b.add(ClosedRSpinSurface::low_genus(g, arf));
            run_trial(z, "sphere_stabilisation", a, b, report);
        }
    }
    return report;
}

}  // namespace rstft
