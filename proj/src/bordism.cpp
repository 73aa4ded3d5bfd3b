#include "rstft/bordism.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rstft {

namespace {

// Multisets of the given size over `values`, as nondecreasing index tuples.
std::vector<std::vector<long long>> multisets(const std::vector<long long>& values,
                                              long long size) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, std::size_t start, long long remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < values.size(); ++i) {
            cur.push_back(values[i]);
            self(self, i, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, size);
    return out;
}

}  // namespace

FgAbGroup pi0_presentation(const RParam& r, long long g_max, long long n_max, long long window) {
    if (g_max < 1) throw std::invalid_argument("pi0_presentation: g_max must be >= 1");
    if (n_max < 3) throw std::invalid_argument("pi0_presentation: n_max must be >= 3");
    if (r.value == 0 && window < 1)
        throw std::invalid_argument("pi0_presentation: window must be >= 1");

    std::vector<long long> types;
    if (r.value == 0) {
        for (long long k = -window; k <= window; ++k) types.push_back(k);
    } else {
        for (long long k = 0; k < r.value; ++k) types.push_back(k);
    }
    auto index = [&](long long kappa) {
        return static_cast<std::size_t>(std::lower_bound(types.begin(), types.end(), kappa) -
                                        types.begin());
    };

    RelationLattice lat(types.size());

    // per-size multiset cache
    std::vector<std::vector<std::vector<long long>>> by_size;
    for (long long b = 0; b <= n_max; ++b) by_size.push_back(multisets(types, b));

    for (long long b_total = 1; b_total <= n_max; ++b_total)
        for (long long b_in = 0; b_in <= b_total; ++b_in) {
            long long b_out = b_total - b_in;
            for (const auto& in : by_size[b_in])
                for (const auto& out : by_size[b_out])
                    for (long long g = 0; g <= g_max; ++g) {
                        if (!exists_rspin(g, in, out, r)) continue;
                        std::vector<std::pair<std::size_t, long long>> col;
                        for (long long k : out) col.emplace_back(index(k), 1);
                        for (long long k : in) col.emplace_back(index(k), -1);
                        lat.add_relation(col);
                    }
        }
    return lat.quotient();
}

int circle_class(long long kappa, const RParam& r) {
    if (!r.is_even()) return 0;
    return ((kappa % 2) + 2) % 2 == 0 ? 1 : 0;
}

}  // namespace rstft
