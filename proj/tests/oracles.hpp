#pragma once

// Test-only oracles, deliberately independent of the library's
// Littlewood-Richardson tableau enumeration: Schur products are computed via
// the Jacobi-Trudi determinant expanded into iterated Pieri (h_k)
// multiplications in the full ring of symmetric functions.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "fanocone/numeric.hpp"
#include "fanocone/partition.hpp"

namespace oracles {

using fanocone::Int;
using fanocone::Partition;

using SchurExpansion = std::map<Partition, Int>;

/// All partitions of n, no box restriction.
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// Multiply an expansion by the complete homogeneous h_k: add horizontal
/// k-strips in every possible way.
inline SchurExpansion pieri_h(const SchurExpansion& in, int k) {
    if (k == 0) return in;
    SchurExpansion out;
    for (const auto& [lam, coeff] : in) {
        const int rows = static_cast<int>(lam.length()) + 1;
        std::vector<int> nu(rows);
        auto rec = [&](auto&& self, int row, int remaining) -> void {
            if (row == rows) {
                if (remaining != 0) return;
                std::vector<int> parts(nu.begin(), nu.end());
                Int& c = out[Partition(parts)];
                c += coeff;
                return;
            }
            const int base = lam.part(row + 1);
            const int cap = row == 0 ? remaining : lam.part(row) - base;
            for (int add = 0; add <= std::min(cap, remaining); ++add) {
                nu[row] = base + add;
                self(self, row + 1, remaining - add);
            }
        };
        rec(rec, 0, k);
    }
    return out;
}

/// s_lam * s_mu via Jacobi-Trudi: s_mu = det(h_{mu_i - i + j}).
inline SchurExpansion schur_product(const Partition& lam, const Partition& mu) {
    SchurExpansion result;
    const int l = static_cast<int>(mu.length());
    if (l == 0) {
        result[lam] = 1;
        return result;
    }
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        bool dead = false;
        std::vector<int> hs;
        for (int i = 0; i < l; ++i) {
            const int k = mu.part(i + 1) - (i + 1) + (perm[i] + 1);
            if (k < 0) dead = true;
            hs.push_back(k);
        }
        if (dead) continue;
        SchurExpansion term;
        term[lam] = (inversions % 2 == 0) ? 1 : -1;
        for (int k : hs) term = pieri_h(term, k);
        for (const auto& [nu, c] : term) result[nu] += c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto it = result.begin(); it != result.end();)
        it = (it->second == 0) ? result.erase(it) : std::next(it);
    return result;
}

/// Independent c^{nu}_{lam,mu}.
inline Int lr_via_jacobi_trudi(const Partition& lam, const Partition& mu, const Partition& nu) {
    auto prod = schur_product(lam, mu);
    auto it = prod.find(nu);
    return it == prod.end() ? Int(0) : it->second;
}

}  // namespace oracles
