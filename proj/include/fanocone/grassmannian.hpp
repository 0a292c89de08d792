#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fanocone/errors.hpp"
#include "fanocone/lr.hpp"
#include "fanocone/numeric.hpp"
#include "fanocone/partition.hpp"

namespace fanocone {

/// G(r,s): r-dimensional subspaces of C^s.  Constructed canonically with
/// 2 <= r <= s-2; an r > s/2 input is normalized to G(s-r, s).
class GrassmannSpace {
public:
    GrassmannSpace(int r, int s) : r_(r), s_(s) {
        if (2 * r_ > s_) r_ = s_ - r_;
        if (r_ < 2 || r_ > s_ - 2)
            throw domain_error("GrassmannSpace: need 2 <= r <= s-2, got G(" +
                               std::to_string(r) + "," + std::to_string(s) + ")");
    }

    int r() const { return r_; }
    int s() const { return s_; }
    int dim() const { return r_ * (s_ - r_); }
    BoxShape box() const { return BoxShape(r_, s_ - r_); }
    Partition point_class() const { return Partition(std::vector<int>(r_, s_ - r_)); }
    std::string label() const { return "G(" + std::to_string(r_) + "," + std::to_string(s_) + ")"; }

    bool operator==(const GrassmannSpace& o) const { return r_ == o.r_ && s_ == o.s_; }

private:
    int r_;
    int s_;
};

/// Sparse rational combination of Schubert classes of one codimension.
/// Keys fit in the r x (s-r) box, weigh exactly codim, and zero coefficients
/// are never stored.  Iteration order is lexicographically decreasing.
class CohomologyClass {
public:
    using CoeffMap = std::map<Partition, Rat, std::greater<Partition>>;

    // codim beyond dim is allowed and forces the zero class (nothing fits)
    CohomologyClass(GrassmannSpace space, int codim) : space_(space), codim_(codim) {
        if (codim < 0) throw domain_error("CohomologyClass: negative codim");
    }

    /// sigma_lam
    static CohomologyClass schubert(GrassmannSpace space, const Partition& lam) {
        if (!lam.fits(space.box()))
            throw domain_error("schubert: " + lam.str() + " does not fit in " + space.label());
        CohomologyClass c(space, lam.weight());
        c.coeffs_[lam] = 1;
        return c;
    }

    const GrassmannSpace& space() const { return space_; }
    int codim() const { return codim_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rat coefficient(const Partition& lam) const {
        auto it = coeffs_.find(lam);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void add_term(const Partition& lam, const Rat& coeff) {
        if (sgn(coeff) == 0) return;
        if (lam.weight() != codim_ || !lam.fits(space_.box()))
            throw domain_error("add_term: index " + lam.str() + " invalid for this class");
        Rat& c = coeffs_[lam];
        c += coeff;
        if (sgn(c) == 0) coeffs_.erase(lam);
    }

    CohomologyClass& operator*=(const Rat& k) {
        if (sgn(k) == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [lam, c] : coeffs_) c *= k;
        return *this;
    }

    CohomologyClass operator+(const CohomologyClass& o) const {
        if (!(space_ == o.space_) || codim_ != o.codim_)
            throw domain_error("class addition: mismatched space or codimension");
        CohomologyClass out = *this;
        for (const auto& [lam, c] : o.coeffs_) out.add_term(lam, c);
        return out;
    }

    bool operator==(const CohomologyClass& o) const {
        return space_ == o.space_ && codim_ == o.codim_ && coeffs_ == o.coeffs_;
    }

private:
    GrassmannSpace space_;
    int codim_;
    CoeffMap coeffs_;
};

/// Cup product by bilinear extension of sigma_lam . sigma_mu =
/// sum_nu c^nu_{lam,mu} sigma_nu, indices outside the box dropped.
inline CohomologyClass product(const CohomologyClass& a, const CohomologyClass& b) {
    if (!(a.space() == b.space())) throw domain_error("product: classes live on different spaces");
    const auto box = a.space().box();
    CohomologyClass out(a.space(), a.codim() + b.codim());
    const auto candidates = partitions_in_box(a.codim() + b.codim(), box);
    for (const auto& [lam, ca] : a.coeffs()) {
        for (const auto& [mu, cb] : b.coeffs()) {
            const Rat cab = ca * cb;
            for (const auto& nu : candidates) {
                Int c = lr_coefficient(lam, mu, nu);
                if (c != 0) out.add_term(nu, cab * Rat(c));
            }
        }
    }
    return out;
}

inline CohomologyClass product(const std::vector<CohomologyClass>& classes) {
    if (classes.empty()) throw domain_error("product: empty factor list");
    CohomologyClass acc = classes.front();
    for (std::size_t i = 1; i < classes.size(); ++i) acc = product(acc, classes[i]);
    return acc;
}

/// Coefficient of the point class (the full-box partition) in the product;
/// the factors must share one space and their codimensions must sum to dim.
inline Rat intersection_number(const std::vector<CohomologyClass>& classes) {
    if (classes.empty()) throw domain_error("intersection_number: empty factor list");
    const auto& space = classes.front().space();
    int total = 0;
    for (const auto& c : classes) {
        if (!(c.space() == space))
            throw domain_error("intersection_number: classes live on different spaces");
        total += c.codim();
    }
    if (total != space.dim())
        throw domain_error("intersection_number: codimensions sum to " + std::to_string(total) +
                           ", expected dim = " + std::to_string(space.dim()));
    return product(classes).coefficient(space.point_class());
}

/// The unique nu with <sigma_lam, sigma_nu> = 1: the rotated box complement.
inline Partition poincare_dual(const Partition& lam, const GrassmannSpace& space) {
    if (!lam.fits(space.box()))
        throw domain_error("poincare_dual: " + lam.str() + " does not fit in " + space.label());
    return lam.complement_in(space.box());
}

/// One pairing constraint: the restricted class pairs to the given value.
struct PairingConstraint {
    CohomologyClass against;
    Rat value;
};

/// Solves for the class S = sum x_i sigma_{basis_i} (codim basis_codim) with
/// <S, C_j>_X = v_j for every constraint, where X is the complete
/// intersection of multidegree ci_degrees and all pairings are evaluated
/// upstairs as intersection numbers with the factor prod d_i sigma_1
/// appended.  An empty basis means every box partition of weight basis_codim.
inline CohomologyClass solve_class_from_pairings(const GrassmannSpace& space, int basis_codim,
                                                 const std::vector<int>& ci_degrees,
                                                 const std::vector<PairingConstraint>& constraints,
                                                 std::vector<Partition> basis = {}) {
    if (basis.empty()) basis = partitions_in_box(basis_codim, space.box());
    const std::size_t n = basis.size();
    if (constraints.size() != n)
        throw underdetermined_error("solve_class_from_pairings: " + std::to_string(n) +
                                    " basis classes vs " + std::to_string(constraints.size()) +
                                    " constraints: Gram matrix is not square");
    for (const auto& lam : basis)
        if (lam.weight() != basis_codim || !lam.fits(space.box()))
            throw domain_error("solve_class_from_pairings: invalid basis index " + lam.str());

    std::vector<CohomologyClass> ci_factors;
    for (int d : ci_degrees) {
        if (d <= 0) throw domain_error("solve_class_from_pairings: degrees must be positive");
        auto f = CohomologyClass::schubert(space, Partition{1});
        f *= Rat(d);
        ci_factors.push_back(f);
    }

    // augmented system: row j is sum_i x_i <basis_i, C_j> = v_j
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<CohomologyClass> factors{CohomologyClass::schubert(space, basis[i]),
                                                 constraints[j].against};
            factors.insert(factors.end(), ci_factors.begin(), ci_factors.end());
            m[j][i] = intersection_number(factors);
        }
        m[j][n] = constraints[j].value;
    }

    // exact Gaussian elimination
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == rank || sgn(m[row][col]) == 0) continue;
            const Rat f = m[row][col] / m[rank][col];
            for (std::size_t k = col; k <= n; ++k) m[row][k] -= f * m[rank][k];
        }
        ++rank;
    }
    if (rank < n) {
        for (std::size_t row = 0; row < n; ++row) {
            bool all_zero = true;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(m[row][k]) != 0) all_zero = false;
            if (all_zero && sgn(m[row][n]) != 0)
                throw no_solution_error("solve_class_from_pairings: inconsistent constraints");
        }
        throw underdetermined_error("solve_class_from_pairings: singular Gram matrix");
    }

    CohomologyClass out(space, basis_codim);
    for (std::size_t row = 0; row < n; ++row) {
        std::size_t col = 0;
        while (col < n && sgn(m[row][col]) == 0) ++col;
        out.add_term(basis[col], m[row][n] / m[row][col]);
    }
    return out;
}

}  // namespace fanocone
