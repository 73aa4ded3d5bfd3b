#include "rstft/rspin.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rstft {

long long RParam::r_tilde() const {
    if (value == 0) throw std::invalid_argument("r_tilde: undefined for r = 0");
    return value / std::gcd(value, 2LL);
}

long long reduce_residue(long long v, const RParam& r) {
    if (r.value == 0) return v;
    long long m = v % r.value;
    return m < 0 ? m + r.value : m;
}

ClosedRSpinSurface ClosedRSpinSurface::sphere() { return {Kind::sphere, {}, 0, {}}; }

ClosedRSpinSurface ClosedRSpinSurface::torus(long long s, long long t) {
    return {Kind::torus, TorusSpin{s, t}, 0, {}};
}

ClosedRSpinSurface ClosedRSpinSurface::higher_genus(long long l, std::optional<ArfSign> arf) {
    return {Kind::higher_genus, {}, l, arf};
}

ClosedRSpinSurface ClosedRSpinSurface::low_genus(long long g, std::optional<ArfSign> arf) {
    return {Kind::low_genus, {}, g, arf};
}

bool surface_valid(const ClosedRSpinSurface& s, const RParam& r) {
    switch (s.kind) {
        case ClosedRSpinSurface::Kind::sphere:
            return (r.value == 1 || r.value == 2) && !s.arf;
        case ClosedRSpinSurface::Kind::torus:
            return !s.arf;
        case ClosedRSpinSurface::Kind::higher_genus:
            return r.value > 2 && s.genus_param >= 1 && s.arf.has_value() == r.is_even();
        case ClosedRSpinSurface::Kind::low_genus:
            return (r.value == 1 || r.value == 2) && s.genus_param >= 2 &&
                   s.arf.has_value() == (r.value == 2);
    }
    return false;
}

void require_valid_surface(const ClosedRSpinSurface& s, const RParam& r) {
    if (!surface_valid(s, r))
        throw SurfaceValidityError("surface descriptor invalid for r = " +
                                   std::to_string(r.value));
}

bool exists_rspin(long long genus, const std::vector<long long>& kappa_in,
                  const std::vector<long long>& kappa_out, const RParam& r) {
    if (genus < 0) throw std::invalid_argument("exists_rspin: negative genus");
    long long chi = 2 - 2 * genus - static_cast<long long>(kappa_in.size()) -
                    static_cast<long long>(kappa_out.size());
    long long rhs = 0;
    for (long long k : kappa_out) rhs += k;
    for (long long k : kappa_in) rhs -= k;
    if (r.value == 0) return chi == rhs;
    return (chi - rhs) % r.value == 0;
}

bool genus_admissible(long long genus, const RParam& r) {
    if (genus < 0) throw std::invalid_argument("genus_admissible: negative genus");
    if (r.value == 0) return genus == 1;  // chi must vanish for framings
    return (genus - 1) % r.r_tilde() == 0;
}

long long sl2_canonical(const TorusSpin& x, const RParam& r) {
    if (r.value == 0) return std::gcd(std::llabs(x.s), std::llabs(x.t));
    long long s = reduce_residue(x.s, r);
    long long t = reduce_residue(x.t, r);
    return std::gcd(std::gcd(s, t), r.value);  // gcd(0,0,r) = r
}

std::vector<long long> torus_orbits(const RParam& r) {
    if (r.value == 0)
        throw std::invalid_argument("torus_orbits: infinitely many orbits for r = 0");
    std::vector<long long> divs;
    for (long long d = 1; d * d <= r.value; ++d) {
        if (r.value % d != 0) continue;
        divs.push_back(d);
        if (d != r.value / d) divs.push_back(r.value / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int arf_torus(const TorusSpin& x, const RParam& r) {
    if (!r.is_even()) throw std::invalid_argument("arf_torus: r must be even");
    return (x.s % 2 == 0 && x.t % 2 == 0) ? 1 : 0;
}

long long euler_char(const ClosedRSpinSurface& s, const RParam& r) {
    require_valid_surface(s, r);
    switch (s.kind) {
        case ClosedRSpinSurface::Kind::sphere:
            return 2;
        case ClosedRSpinSurface::Kind::torus:
            return 0;
        case ClosedRSpinSurface::Kind::higher_genus:
            return -2 * s.genus_param * r.r_tilde();
        case ClosedRSpinSurface::Kind::low_genus:
            return 2 - 2 * s.genus_param;
    }
    return 0;
}

}  // namespace rstft
