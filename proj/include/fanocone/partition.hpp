#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "fanocone/errors.hpp"

namespace fanocone {

/// Ambient rectangle for Schubert indices: r rows by (s-r) columns.
struct BoxShape {
    int rows;
    int cols;

    BoxShape(int rows_, int cols_) : rows(rows_), cols(cols_) {
        if (rows < 1 || cols < 1) throw domain_error("BoxShape: rows and cols must be >= 1");
    }
};

/// Integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros stored.  The empty partition is the zero partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw domain_error("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw domain_error("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Part at 1-based row i, zero beyond the last row.
    int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    /// Diagram inclusion mu <= *this row by row.
    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (std::size_t i = 0; i < mu.parts_.size(); ++i)
            if (mu.parts_[i] > parts_[i]) return false;
        return true;
    }

    bool fits(const BoxShape& box) const {
        return static_cast<int>(length()) <= box.rows && (empty() || parts_[0] <= box.cols);
    }

    /// Transposed Young diagram; involutive.
    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> t(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++t[j];
        return Partition(std::move(t));
    }

    /// The complement partition in the box, rotated 180 degrees; this is the
    /// Poincare-dual index on G(rows, rows+cols).
    Partition complement_in(const BoxShape& box) const {
        if (!fits(box)) throw domain_error("complement_in: partition does not fit the box");
        std::vector<int> c(box.rows);
        for (int i = 0; i < box.rows; ++i) c[i] = box.cols - part(box.rows - i);
        return Partition(std::move(c));
    }

    int addable_corner_count() const {
        int corners = 1;  // a new first row can always grow
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] < parts_[i - 1]) ++corners;
        if (!parts_.empty()) ++corners;  // new bottom row
        return corners;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of k with at most box.rows parts, each part at most
/// box.cols, in lexicographically decreasing order.
inline std::vector<Partition> partitions_in_box(int k, const BoxShape& box) {
    std::vector<Partition> out;
    if (k < 0 || k > box.rows * box.cols) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part, int rows_left) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (rows_left == 0) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            if (p * rows_left < remaining) break;
            cur.push_back(p);
            self(self, remaining - p, p, rows_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, k, box.cols, box.rows);
    return out;
}

/// Number of partitions of k inside the box, i.e. b_{2k}(G(rows, rows+cols)).
inline long long count_partitions_in_box(int k, const BoxShape& box) {
    return static_cast<long long>(partitions_in_box(k, box).size());
}

}  // namespace fanocone
