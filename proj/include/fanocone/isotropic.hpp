#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fanocone/errors.hpp"
#include "fanocone/weyl.hpp"

namespace fanocone {

enum class IsotropicFamily { orthogonal, symplectic };

/// OG(r,s) or SG(r,s): isotropic r-planes for a symmetric or symplectic
/// form on C^s.  Writing s = 2m+1-eps with eps in {0,1}, the index bounds
/// and the Schubert parametrization below depend only on (family, m, eps).
/// For the orthogonal family with s = 2r the variety splits into two
/// isomorphic components and a single one (plus_component) is enumerated.
class IsotropicSpace {
public:
    IsotropicSpace(IsotropicFamily family, int r, int s, bool plus_component = false)
        : family_(family), r_(r), s_(s), plus_(plus_component) {
        m_ = s_ / 2;
        eps_ = (s_ % 2 == 0) ? 1 : 0;
        if (family_ == IsotropicFamily::symplectic && s_ % 2 != 0)
            throw domain_error("IsotropicSpace: SG requires even s");
        if (r_ < 2 || r_ > m_)
            throw domain_error("IsotropicSpace: need 2 <= r <= floor(s/2), got r=" +
                               std::to_string(r_) + ", s=" + std::to_string(s_));
        if (is_spinor_component()) plus_ = true;  // only one component is modeled
    }

    IsotropicFamily family() const { return family_; }
    int r() const { return r_; }
    int s() const { return s_; }
    int m() const { return m_; }
    int eps() const { return eps_; }
    bool plus_component() const { return plus_; }
    bool is_spinor_component() const {
        return family_ == IsotropicFamily::orthogonal && s_ == 2 * r_;
    }

    /// Component dimension (for OG(r,2r) the formula already gives the
    /// dimension of a single component).
    int dim() const {
        return family_ == IsotropicFamily::orthogonal ? r_ * (2 * s_ - 3 * r_ - 1) / 2
                                                      : r_ * (2 * s_ - 3 * r_ + 1) / 2;
    }

    std::string label() const {
        std::string name = family_ == IsotropicFamily::orthogonal ? "OG" : "SG";
        if (plus_ && family_ == IsotropicFamily::orthogonal) name += "+";
        return name + "(" + std::to_string(r_) + "," + std::to_string(s_) + ")";
    }

    /// Weyl quotient with matching length census: B_m/C_m/D_m with Theta the
    /// complement of node r, except that OG(r,2m) needs both spinor nodes
    /// removed when r = m-1 and maps to a single spinor node when r = m.
    ParabolicQuotient weyl_quotient() const {
        CoxType type;
        if (family_ == IsotropicFamily::symplectic) {
            type = CoxType::C;
        } else {
            type = (eps_ == 1) ? CoxType::D : CoxType::B;
        }
        CoxeterSystem sys(type, m_);
        std::vector<int> removed;
        if (type == CoxType::D && r_ == m_ - 1)
            removed = {m_ - 2, m_ - 1};  // 0-based fork nodes
        else if (type == CoxType::D && r_ == m_)
            removed = {m_ - 1};
        else
            removed = {r_ - 1};
        std::vector<int> theta;
        for (int i = 0; i < m_; ++i)
            if (std::find(removed.begin(), removed.end(), i) == removed.end()) theta.push_back(i);
        return ParabolicQuotient(std::move(sys), std::move(theta));
    }

private:
    IsotropicFamily family_;
    int r_;
    int s_;
    bool plus_;
    int m_;
    int eps_;
};

/// The unique strictly decreasing complement of lam: values in [0, m-1]
/// avoiding excluded_sum - lam_i for every i, largest first.
/// excluded_sum is m-eps for OG and m for SG.
inline std::vector<int> lambda_tilde_for_sum(const std::vector<int>& lam, int m,
                                             int excluded_sum) {
    std::vector<bool> banned(m, false);
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (i + 1 < lam.size() && lam[i] <= lam[i + 1])
            throw invalid_index_error("lambda_tilde: lambda must be strictly decreasing");
        const int b = excluded_sum - lam[i];
        if (b < 0 || b >= m || banned[b])
            throw invalid_index_error("lambda_tilde: no valid complement for lambda");
        banned[b] = true;
    }
    std::vector<int> tilde;
    for (int v = m - 1; v >= 0; --v)
        if (!banned[v]) tilde.push_back(v);
    if (tilde.size() + lam.size() != static_cast<std::size_t>(m))
        throw invalid_index_error("lambda_tilde: complement has wrong length");
    return tilde;
}

/// Orthogonal-family complement rule: lambda_tilde_j + lambda_i != m - eps.
inline std::vector<int> lambda_tilde(const std::vector<int>& lam, int m, int eps) {
    return lambda_tilde_for_sum(lam, m, m - eps);
}

/// lambda' = lambda except in the odd orthogonal-parity case (eps = 1 and
/// t not congruent to m mod 2), where the minimal admissible value b with
/// b not in lambda and b + mu_j != m-1 is inserted.
inline std::vector<int> lambda_prime(const std::vector<int>& lam, const std::vector<int>& mu,
                                     const IsotropicSpace& space) {
    const int m = space.m();
    if (space.family() == IsotropicFamily::symplectic || space.eps() == 0 ||
        (static_cast<int>(lam.size()) % 2 == m % 2))
        return lam;
    for (int b = 0; b <= m - 1; ++b) {
        if (std::find(lam.begin(), lam.end(), b) != lam.end()) continue;
        bool ok = true;
        for (int mj : mu)
            if (b + mj == m - 1) ok = false;
        if (!ok) continue;
        std::vector<int> ext = lam;
        ext.push_back(b);
        std::sort(ext.begin(), ext.end(), std::greater<int>());
        return ext;
    }
    throw invalid_index_error("lambda_prime: no admissible insertion value");
}

/// A Schubert index (lambda, mu) of OG/SG with all derived data: the
/// complements, the embedding positions of (lambda, mu) inside
/// (lambda', lambda_tilde'), the discrepancy and the codimension.
struct IsotropicIndex {
    std::vector<int> lam;
    std::vector<int> mu;
    std::vector<int> lam_tilde;
    std::vector<int> lam_prime;
    std::vector<int> positions;  // i_1 < ... < i_r, 1-based in (lam', lam_tilde')
    int discrepancy = 0;
    int codim = 0;

    std::string str() const {
        auto seq = [](const std::vector<int>& v) {
            std::string out = "(";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(v[i]);
            }
            return out + ")";
        };
        return seq(lam) + "|" + seq(mu);
    }
};

namespace detail {

inline int excluded_sum(const IsotropicSpace& space) {
    return space.family() == IsotropicFamily::orthogonal ? space.m() - space.eps() : space.m();
}

/// Builds the full index from (lam, mu); throws invalid_index_error when the
/// pair violates the parametrization.
inline IsotropicIndex make_index(const IsotropicSpace& space, std::vector<int> lam,
                                 std::vector<int> mu) {
    const int m = space.m();
    const int r = space.r();
    IsotropicIndex ix;
    ix.lam = std::move(lam);
    ix.mu = std::move(mu);
    const int t = static_cast<int>(ix.lam.size());
    if (t > r || static_cast<int>(ix.mu.size()) != r - t)
        throw invalid_index_error("isotropic index: wrong lengths");

    const int lo = (space.family() == IsotropicFamily::orthogonal && space.eps() == 1) ? 0 : 1;
    const int hi = space.family() == IsotropicFamily::orthogonal ? m - space.eps() : m;
    for (int v : ix.lam)
        if (v < lo || v > hi) throw invalid_index_error("isotropic index: lambda out of bounds");
    if (space.is_spinor_component() && (t % 2) != (m % 2))
        throw invalid_index_error("isotropic index: parity constraint t = m (mod 2) violated");

    ix.lam_tilde = lambda_tilde_for_sum(ix.lam, m, excluded_sum(space));
    // mu must be a subsequence of lam_tilde
    {
        std::size_t pos = 0;
        for (int v : ix.mu) {
            while (pos < ix.lam_tilde.size() && ix.lam_tilde[pos] != v) ++pos;
            if (pos == ix.lam_tilde.size())
                throw invalid_index_error("isotropic index: mu is not a subsequence of the complement");
            ++pos;
        }
    }

    ix.lam_prime = lambda_prime(ix.lam, ix.mu, space);
    const auto tilde_prime = lambda_tilde_for_sum(ix.lam_prime, m, excluded_sum(space));
    const int t_prime = static_cast<int>(ix.lam_prime.size());

    // embedding positions: lambda inside lambda' (1..t'), mu inside
    // lambda_tilde' (t'+1..m); all values are distinct so each position is
    // forced
    ix.positions.clear();
    for (int v : ix.lam) {
        auto it = std::find(ix.lam_prime.begin(), ix.lam_prime.end(), v);
        if (it == ix.lam_prime.end())
            throw invalid_index_error("isotropic index: lambda does not embed in lambda'");
        ix.positions.push_back(static_cast<int>(it - ix.lam_prime.begin()) + 1);
    }
    for (int v : ix.mu) {
        auto it = std::find(tilde_prime.begin(), tilde_prime.end(), v);
        if (it == tilde_prime.end())
            throw invalid_index_error("isotropic index: mu does not embed in lambda_tilde'");
        ix.positions.push_back(t_prime + static_cast<int>(it - tilde_prime.begin()) + 1);
    }
    for (std::size_t j = 1; j < ix.positions.size(); ++j)
        if (ix.positions[j] <= ix.positions[j - 1])
            throw invalid_index_error("isotropic index: embedding positions not increasing");

    ix.discrepancy = 0;
    for (int j = 1; j <= r; ++j) ix.discrepancy += m - r + j - ix.positions[j - 1];
    if (ix.discrepancy < 0)
        throw invalid_index_error("isotropic index: negative discrepancy");

    int sum_prime = 0;
    for (int v : ix.lam_prime) sum_prime += v;
    ix.codim = sum_prime + ix.discrepancy;
    return ix;
}

inline void strict_sequences(int lo, int hi, int len, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(cur);
        return;
    }
    const int start = cur.empty() ? hi : cur.back() - 1;
    for (int v = start; v >= lo + len - 1; --v) {
        cur.push_back(v);
        strict_sequences(lo, hi, len - 1, cur, out);
        cur.pop_back();
    }
}

inline void subsequences(const std::vector<int>& seq, int len, std::size_t from,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < seq.size() && seq.size() - i >= static_cast<std::size_t>(len);
         ++i) {
        cur.push_back(seq[i]);
        subsequences(seq, len - 1, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// Every Schubert index of the space, unsorted.
inline std::vector<IsotropicIndex> enumerate_all_classes(const IsotropicSpace& space) {
    const int m = space.m();
    const int r = space.r();
    const int lo = (space.family() == IsotropicFamily::orthogonal && space.eps() == 1) ? 0 : 1;
    const int hi = space.family() == IsotropicFamily::orthogonal ? m - space.eps() : m;

    std::vector<IsotropicIndex> out;
    for (int t = 0; t <= r; ++t) {
        if (space.is_spinor_component() && (t % 2) != (m % 2)) continue;
        std::vector<std::vector<int>> lams;
        std::vector<int> cur;
        detail::strict_sequences(lo, hi, t, cur, lams);
        for (const auto& lam : lams) {
            const auto tilde = lambda_tilde_for_sum(lam, m, detail::excluded_sum(space));
            std::vector<std::vector<int>> mus;
            std::vector<int> mcur;
            detail::subsequences(tilde, r - t, 0, mcur, mus);
            for (const auto& mu : mus) out.push_back(detail::make_index(space, lam, mu));
        }
    }
    return out;
}

/// All Schubert indices of the space with the given codimension, sorted by
/// (lambda, mu) lexicographically.
inline std::vector<IsotropicIndex> enumerate_classes(const IsotropicSpace& space, int k) {
    std::vector<IsotropicIndex> out;
    for (auto& ix : enumerate_all_classes(space))
        if (ix.codim == k) out.push_back(std::move(ix));
    std::sort(out.begin(), out.end(), [](const IsotropicIndex& a, const IsotropicIndex& b) {
        if (a.lam != b.lam) return a.lam < b.lam;
        return a.mu < b.mu;
    });
    return out;
}

/// Betti numbers b_{2k} for all k at once.
inline std::map<int, long long> betti_census(const IsotropicSpace& space) {
    std::map<int, long long> census;
    for (const auto& ix : enumerate_all_classes(space)) ++census[ix.codim];
    return census;
}

/// b_{2k} of the space: the size of the codimension-k Schubert basis.
inline long long betti(const IsotropicSpace& space, int k) {
    if (k < 0 || k > space.dim()) return 0;
    return static_cast<long long>(enumerate_classes(space, k).size());
}

}  // namespace fanocone
