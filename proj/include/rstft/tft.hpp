#ifndef RSTFT_TFT_HPP
#define RSTFT_TFT_HPP

#include "rstft/skk.hpp"
#include "rstft/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace rstft {

/// Invertible theory determined by its cut-and-reglue invariant: the value
/// lambda on the section generator (absent for r = 0, where chi vanishes)
/// and the sign rho on the torsion generator T(0,0) (present for even r,
/// including 0). A class (j, eps) evaluates to lambda^j * rho^eps.
struct InvertibleTft {
    RParam r;
    std::optional<Rational> lambda;
    std::optional<int> rho;
};

/// The Arf theory: rho = -1 and lambda = 2^{r~}, so closed surfaces get
/// 2^{chi/2} times the Arf sign. Even r only (including 0).
InvertibleTft arf_tft(const RParam& r);

/// The Euler theory with value lambda on the section generator; a function
/// of chi alone (rho = +1). Rejects r = 0 and lambda = 0.
InvertibleTft euler_tft(const RParam& r, const Rational& lambda);

Rational evaluate(const InvertibleTft& z, const SkkClass& c);
Rational evaluate(const InvertibleTft& z, const FormalSurfaceSum& x);

/// Outcome of sampling cut-and-reglue relation instances and comparing both
/// sides under a theory.
struct SkkInvarianceReport {
    long long trials = 0;
    long long mismatches = 0;
    std::map<std::string, long long> family_trials;

    bool passed() const { return mismatches == 0; }
};

/// Samples relation instances appropriate for z.r with a seeded generator:
/// four-term torus relations always; genus-addition and Arf-flip relations
/// for r > 2; sphere-stabilisation relations for r in {1,2}.
SkkInvarianceReport verify_skk_invariance(const InvertibleTft& z, long long trials,
                                          std::uint64_t seed);

}  // namespace rstft

#endif
