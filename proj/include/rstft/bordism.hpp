#ifndef RSTFT_BORDISM_HPP
#define RSTFT_BORDISM_HPP

#include "rstft/abelian.hpp"
#include "rstft/rspin.hpp"

namespace rstft {

/// First bordism group of circles, computed from an enumerated presentation:
/// one generator per boundary type kappa, one relation
/// sum(outputs) - sum(inputs) = 0 for every connected bordism with at most
/// n_max boundary circles and genus at most g_max admitted by the existence
/// congruence (this includes both disc orientations). For r = 0 the types
/// are truncated to [-window, window]. The result saturates at
/// (g_max, n_max) = (2, 4): Z/2 for even r (generated by the type-0 circle),
/// trivial for odd r.
FgAbGroup pi0_presentation(const RParam& r, long long g_max = 2, long long n_max = 4,
                           long long window = 6);

/// Class of the type-kappa circle in the bordism group Z/2 (even r,
/// including 0): 1 iff kappa is even, since the disc kills the type-1
/// circle and a bordism shifts kappa by 2. Identically 0 for odd r.
int circle_class(long long kappa, const RParam& r);

}  // namespace rstft

#endif
