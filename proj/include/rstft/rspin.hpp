#ifndef RSTFT_RSPIN_HPP
#define RSTFT_RSPIN_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rstft {

/// Covering parameter: r-fold cover of SO(2) for r > 0, universal cover
/// (framings) for r = 0.
struct RParam {
    long long value = 1;

    RParam() = default;
    explicit RParam(long long r) : value(r) {
        if (r < 0) throw std::invalid_argument("RParam: r must be >= 0");
    }

    bool is_framing() const { return value == 0; }
    bool is_even() const { return value % 2 == 0; }
    /// r / gcd(r,2); only defined for r > 0.
    long long r_tilde() const;

    bool operator==(const RParam&) const = default;
};

/// Boundary type: an element of Z/r, stored in [0, r); an arbitrary
/// integer when r = 0.
long long reduce_residue(long long v, const RParam& r);

/// Isomorphism class label (s,t) of a spin structure on the torus.
struct TorusSpin {
    long long s = 0;
    long long t = 0;
    auto operator<=>(const TorusSpin&) const = default;
};

enum class ArfSign { plus = +1, minus = -1 };

struct SurfaceValidityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Descriptor of a closed connected surface with an isomorphism class of
/// spin structure:
///   sphere        -- admits a structure only for r in {1,2}
///   torus         -- T(s,t), any r
///   higher_genus  -- U_l, genus 1 + l*r~ for r > 2; Arf label iff r even
///   low_genus     -- genus g >= 2 for r in {1,2}; Arf label iff r = 2
struct ClosedRSpinSurface {
    enum class Kind { sphere, torus, higher_genus, low_genus };

    Kind kind = Kind::sphere;
    TorusSpin spin{};
    long long genus_param = 0;  // l for higher_genus, g for low_genus
    std::optional<ArfSign> arf;

    static ClosedRSpinSurface sphere();
    static ClosedRSpinSurface torus(long long s, long long t);
    static ClosedRSpinSurface higher_genus(long long l, std::optional<ArfSign> arf = {});
    static ClosedRSpinSurface low_genus(long long g, std::optional<ArfSign> arf = {});

    auto operator<=>(const ClosedRSpinSurface&) const = default;
};

bool surface_valid(const ClosedRSpinSurface& s, const RParam& r);
void require_valid_surface(const ClosedRSpinSurface& s, const RParam& r);

/// Existence of structures on a connected bordism of genus g with the given
/// ingoing/outgoing boundary types: 2 - 2g - b_in - b_out must equal
/// sum(kappa_out) - sum(kappa_in) mod r (exact equality when r = 0).
bool exists_rspin(long long genus, const std::vector<long long>& kappa_in,
                  const std::vector<long long>& kappa_out, const RParam& r);

/// Closed genus-g surfaces: g = 1 mod r~ for r > 0; for r = 0 only g = 1.
bool genus_admissible(long long genus, const RParam& r);

/// Complete SL(2,Z)-orbit invariant of (s,t): gcd(s, t, r) with
/// gcd(0,0,r) = r, so the value is a divisor of r; plain gcd(s,t) >= 0 for
/// r = 0. The orbit representative is (d, 0).
long long sl2_canonical(const TorusSpin& x, const RParam& r);

/// Sorted divisors of r, one per torus diffeomorphism class; r = 0 is
/// rejected (infinitely many orbits).
std::vector<long long> torus_orbits(const RParam& r);

/// 1 iff s and t are both even; defined for even r (including 0).
int arf_torus(const TorusSpin& x, const RParam& r);

long long euler_char(const ClosedRSpinSurface& s, const RParam& r);

}  // namespace rstft

#endif
