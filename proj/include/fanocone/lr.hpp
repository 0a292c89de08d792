#pragma once

#include <vector>

#include "fanocone/numeric.hpp"
#include "fanocone/partition.hpp"

namespace fanocone {

namespace detail {

// Cells of nu/lam in reverse reading order: rows top to bottom, each row
// right to left.  Filling in this order makes the ballot condition on the
// reverse reading word checkable as each entry is placed.
struct LrCell {
    int row;   // 0-based
    int col;   // 0-based
    bool has_up;    // the cell directly above belongs to the skew shape
    bool has_right; // the cell to the right belongs to the skew shape
};

inline std::vector<LrCell> skew_cells(const Partition& nu, const Partition& lam) {
    std::vector<LrCell> cells;
    for (std::size_t i = 0; i < nu.length(); ++i) {
        const int lo = lam.part(i + 1);
        const int hi = nu.part(i + 1);
        for (int j = hi - 1; j >= lo; --j) {
            LrCell c;
            c.row = static_cast<int>(i);
            c.col = j;
            c.has_right = j + 1 < hi;
            c.has_up = i > 0 && j >= lam.part(i) && j < nu.part(i);
            cells.push_back(c);
        }
    }
    return cells;
}

}  // namespace detail

/// Littlewood-Richardson coefficient c^{nu}_{lam,mu}: the number of
/// semistandard skew tableaux of shape nu/lam and content mu whose reverse
/// reading word is a ballot sequence.  Zero unless |nu| = |lam| + |mu| and
/// lam is contained in nu.
inline Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (nu.weight() != lam.weight() + mu.weight()) return 0;
    if (!nu.contains(lam)) return 0;
    if (mu.empty()) return 1;

    const auto cells = detail::skew_cells(nu, lam);
    const int n_values = static_cast<int>(mu.length());

    // entry[r][c] for the skew cells only; 0 = unfilled
    std::vector<std::vector<int>> entry(nu.length(), std::vector<int>());
    for (std::size_t i = 0; i < nu.length(); ++i) entry[i].assign(nu.part(i + 1), 0);

    std::vector<int> used(n_values + 1, 0);  // content placed so far per value
    Int count = 0;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto& c = cells[idx];
        const int right = c.has_right ? entry[c.row][c.col + 1] : n_values;
        const int up = c.has_up ? entry[c.row - 1][c.col] : 0;
        for (int v = up + 1; v <= right; ++v) {
            if (used[v] >= mu.part(v)) continue;
            // ballot: in the reverse reading word every prefix has at least
            // as many (v-1)s as vs
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;
            used[v]++;
            entry[c.row][c.col] = v;
            self(self, idx + 1);
            entry[c.row][c.col] = 0;
            used[v]--;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace fanocone
