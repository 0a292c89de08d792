#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fanocone/errors.hpp"

namespace fanocone {

enum class CoxType { A, B, C, D, G2 };

inline std::string cox_type_name(CoxType t) {
    switch (t) {
        case CoxType::A: return "A";
        case CoxType::B: return "B";
        case CoxType::C: return "C";
        case CoxType::D: return "D";
        case CoxType::G2: return "G2";
    }
    return "?";
}

/// Root vector in simple-root coordinates.
using RootVec = std::vector<int>;

/// Weyl group element as the integer matrix sending each simple root to its
/// image (columns, simple-root coordinates).  This canonical form makes
/// equality exact and length a count of sign flips on the positive roots.
struct WeylElement {
    int rank;
    std::vector<int> m;  // rank x rank, row-major: m[i*rank+j] = coord i of w(alpha_j)

    bool operator==(const WeylElement& o) const { return m == o.m; }
    bool operator<(const WeylElement& o) const { return m < o.m; }
};

/// Finite crystallographic Coxeter system of type A/B/C/D/G2.  B and C carry
/// their own Cartan matrices but generate the same group, so every census
/// below agrees between them.
class CoxeterSystem {
public:
    CoxeterSystem(CoxType type, int rank) : type_(type), rank_(rank) {
        if (type == CoxType::G2) {
            if (rank != 2) throw domain_error("CoxeterSystem: G2 has rank 2");
        } else if (type == CoxType::A) {
            if (rank < 1) throw domain_error("CoxeterSystem: rank must be >= 1");
        } else {
            if (rank < 2) throw domain_error("CoxeterSystem: rank must be >= 2 for B/C/D");
        }
        build_cartan();
        build_positive_roots();
    }

    CoxType type() const { return type_; }
    int rank() const { return rank_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    std::string label() const {
        return type_ == CoxType::G2 ? "G2" : cox_type_name(type_) + std::to_string(rank_);
    }

    WeylElement identity() const {
        WeylElement w;
        w.rank = rank_;
        w.m.assign(rank_ * rank_, 0);
        for (int i = 0; i < rank_; ++i) w.m[i * rank_ + i] = 1;
        return w;
    }

    WeylElement simple_reflection(int i) const {
        check_node(i);
        WeylElement s = identity();
        // s_i(alpha_j) = alpha_j - a[j][i] alpha_i
        for (int j = 0; j < rank_; ++j) s.m[(i)*rank_ + j] -= cartan_[j][i];
        return s;
    }

    RootVec apply(const WeylElement& w, const RootVec& v) const {
        RootVec out(rank_, 0);
        for (int j = 0; j < rank_; ++j) {
            if (v[j] == 0) continue;
            for (int i = 0; i < rank_; ++i) out[i] += w.m[i * rank_ + j] * v[j];
        }
        return out;
    }

    /// Group product u.v acting as the composite u after v.
    WeylElement mult(const WeylElement& u, const WeylElement& v) const {
        WeylElement out;
        out.rank = rank_;
        out.m.assign(rank_ * rank_, 0);
        for (int i = 0; i < rank_; ++i)
            for (int k = 0; k < rank_; ++k) {
                const int a = u.m[i * rank_ + k];
                if (a == 0) continue;
                for (int j = 0; j < rank_; ++j) out.m[i * rank_ + j] += a * v.m[k * rank_ + j];
            }
        return out;
    }

    static bool is_negative(const RootVec& v) {
        for (int c : v)
            if (c != 0) return c < 0;
        return false;
    }

    /// Number of positive roots sent to negative roots.
    int length(const WeylElement& w) const {
        int l = 0;
        for (const auto& beta : positive_)
            if (is_negative(apply(w, beta))) ++l;
        return l;
    }

    /// l(w s_i) > l(w)  iff  w(alpha_i) > 0.
    bool ascends_right(const WeylElement& w, int i) const {
        check_node(i);
        RootVec col(rank_);
        for (int k = 0; k < rank_; ++k) col[k] = w.m[k * rank_ + i];
        return !is_negative(col);
    }

    /// Longest element of the standard parabolic subgroup generated by the
    /// given simple reflections (the whole group if all nodes are passed).
    WeylElement longest_element(const std::vector<int>& nodes) const {
        WeylElement w = identity();
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i : nodes) {
                if (ascends_right(w, i)) {
                    w = mult(w, simple_reflection(i));
                    moved = true;
                }
            }
        }
        return w;
    }

    std::vector<int> all_nodes() const {
        std::vector<int> v(rank_);
        for (int i = 0; i < rank_; ++i) v[i] = i;
        return v;
    }

    /// Full group by BFS; intended for small ranks only.
    std::vector<WeylElement> enumerate_group(const std::vector<int>& nodes) const {
        std::vector<WeylElement> out;
        std::set<WeylElement> seen;
        std::vector<WeylElement> frontier{identity()};
        seen.insert(frontier[0]);
        while (!frontier.empty()) {
            std::vector<WeylElement> next;
            for (const auto& w : frontier) {
                out.push_back(w);
                for (int i : nodes) {
                    WeylElement ws = mult(w, simple_reflection(i));
                    if (seen.insert(ws).second) next.push_back(ws);
                }
            }
            frontier = std::move(next);
        }
        return out;
    }

    void check_node(int i) const {
        if (i < 0 || i >= rank_) throw domain_error("CoxeterSystem: node out of range");
    }

private:
    void build_cartan() {
        cartan_.assign(rank_, std::vector<int>(rank_, 0));
        for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;
        auto bond = [&](int i, int j, int aij, int aji) {
            cartan_[i][j] = aij;
            cartan_[j][i] = aji;
        };
        switch (type_) {
            case CoxType::A:
                for (int i = 0; i + 1 < rank_; ++i) bond(i, i + 1, -1, -1);
                break;
            case CoxType::B:  // last simple root short
                for (int i = 0; i + 2 < rank_; ++i) bond(i, i + 1, -1, -1);
                bond(rank_ - 2, rank_ - 1, -2, -1);
                break;
            case CoxType::C:  // last simple root long
                for (int i = 0; i + 2 < rank_; ++i) bond(i, i + 1, -1, -1);
                bond(rank_ - 2, rank_ - 1, -1, -2);
                break;
            case CoxType::D:
                for (int i = 0; i + 2 < rank_; ++i) bond(i, i + 1, -1, -1);
                if (rank_ >= 3) bond(rank_ - 3, rank_ - 1, -1, -1);
                break;
            case CoxType::G2:
                bond(0, 1, -1, -3);
                break;
        }
    }

    // closure of the simple roots under the simple reflections
    void build_positive_roots() {
        std::set<RootVec> roots;
        std::vector<RootVec> frontier;
        for (int i = 0; i < rank_; ++i) {
            RootVec e(rank_, 0);
            e[i] = 1;
            roots.insert(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<RootVec> next;
            for (const auto& v : frontier) {
                for (int i = 0; i < rank_; ++i) {
                    RootVec w = v;
                    int c = 0;
                    for (int j = 0; j < rank_; ++j) c += v[j] * cartan_[j][i];
                    w[i] -= c;
                    if (roots.insert(w).second) next.push_back(w);
                }
            }
            frontier = std::move(next);
        }
        for (const auto& v : roots)
            if (!is_negative(v)) positive_.push_back(v);
        std::sort(positive_.begin(), positive_.end());
    }

    CoxType type_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<RootVec> positive_;
};

/// Coxeter system together with a subset Theta of the simple reflections;
/// models G/P with dim = l(w_0) - l(w_theta).
class ParabolicQuotient {
public:
    ParabolicQuotient(CoxeterSystem system, std::vector<int> theta)
        : system_(std::move(system)), theta_(std::move(theta)) {
        std::sort(theta_.begin(), theta_.end());
        theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
        for (int i : theta_) system_.check_node(i);
        w0_ = system_.longest_element(system_.all_nodes());
        w_theta_ = system_.longest_element(theta_);
        len_w0_ = system_.length(w0_);
        len_w_theta_ = system_.length(w_theta_);
    }

    const CoxeterSystem& system() const { return system_; }
    const std::vector<int>& theta() const { return theta_; }
    const WeylElement& w0() const { return w0_; }
    const WeylElement& w_theta() const { return w_theta_; }
    int dim() const { return len_w0_ - len_w_theta_; }

    /// w has no right descent inside Theta.
    bool in_quotient(const WeylElement& w) const {
        for (int i : theta_)
            if (!system_.ascends_right(w, i)) return false;
        return true;
    }

    /// All minimal coset representatives, found by left-multiplication BFS
    /// from the identity (if w in W^Theta and s w < w then s w in W^Theta).
    std::vector<WeylElement> minimal_coset_rep_elements() const {
        std::vector<WeylElement> out;
        std::set<WeylElement> seen;
        std::vector<WeylElement> frontier{system_.identity()};
        seen.insert(frontier[0]);
        int len = 0;
        while (!frontier.empty()) {
            std::vector<WeylElement> next;
            for (const auto& w : frontier) {
                out.push_back(w);
                for (int i = 0; i < system_.rank(); ++i) {
                    WeylElement sw = system_.mult(system_.simple_reflection(i), w);
                    if (system_.length(sw) != len + 1) continue;
                    if (!in_quotient(sw)) continue;
                    if (seen.insert(sw).second) next.push_back(sw);
                }
            }
            frontier = std::move(next);
            ++len;
        }
        return out;
    }

    /// Census of W^Theta by length; the Poincare polynomial of G/P.
    std::map<int, long long> minimal_coset_reps() const {
        std::map<int, long long> census;
        for (const auto& w : minimal_coset_rep_elements()) ++census[system_.length(w)];
        return census;
    }

    /// Returns w0 . w . w_theta and whether it lands back in W^Theta with
    /// complementary length, as Poincare duality requires.
    std::pair<WeylElement, bool> duality_check(const WeylElement& w) const {
        if (!in_quotient(w)) throw domain_error("duality_check: element is not in W^Theta");
        WeylElement img = system_.mult(system_.mult(w0_, w), w_theta_);
        const bool ok = system_.length(img) == dim() - system_.length(w) && in_quotient(img);
        return {img, ok};
    }

    /// Verifies l(w wbar) = l(w) + l(wbar) over W^Theta x W_Theta, stopping
    /// after pair_cap pairs.
    bool additivity_check(long long pair_cap = 200000) const {
        const auto reps = minimal_coset_rep_elements();
        const auto subgroup = system_.enumerate_group(theta_);
        long long pairs = 0;
        for (const auto& w : reps) {
            const int lw = system_.length(w);
            for (const auto& wb : subgroup) {
                if (++pairs > pair_cap) return true;
                if (system_.length(system_.mult(w, wb)) != lw + system_.length(wb)) return false;
            }
        }
        return true;
    }

private:
    CoxeterSystem system_;
    std::vector<int> theta_;
    WeylElement w0_;
    WeylElement w_theta_;
    int len_w0_;
    int len_w_theta_;
};

/// Quotient for G/P_node with Theta = S minus the given 1-based node.
inline ParabolicQuotient node_quotient(CoxType type, int rank, int node) {
    CoxeterSystem sys(type, rank);
    if (node < 1 || node > rank) throw domain_error("node_quotient: node out of range");
    std::vector<int> theta;
    for (int i = 0; i < rank; ++i)
        if (i != node - 1) theta.push_back(i);
    return ParabolicQuotient(std::move(sys), std::move(theta));
}

}  // namespace fanocone
