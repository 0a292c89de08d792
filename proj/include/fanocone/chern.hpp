#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanocone/errors.hpp"
#include "fanocone/grassmannian.hpp"
#include "fanocone/isotropic.hpp"
#include "fanocone/numeric.hpp"

namespace fanocone {

/// Ambient space of a complete intersection.  The hyperplane class is H for
/// the projective families and sigma_1 (Pluecker) for the Grassmann ones.
class AmbientSpace {
public:
    enum class Kind { projective, weighted_projective, grassmann, orthogonal, symplectic };

    static AmbientSpace projective(int n) {
        if (n < 1) throw domain_error("AmbientSpace: projective dimension must be >= 1");
        AmbientSpace a;
        a.kind_ = Kind::projective;
        a.n_ = n;
        return a;
    }

    static AmbientSpace weighted(std::vector<int> weights) {
        if (weights.size() < 2) throw domain_error("AmbientSpace: need at least two weights");
        for (int w : weights)
            if (w <= 0) throw domain_error("AmbientSpace: weights must be positive");
        AmbientSpace a;
        a.kind_ = Kind::weighted_projective;
        a.weights_ = std::move(weights);
        return a;
    }

    static AmbientSpace grassmann(int r, int s) {
        AmbientSpace a;
        a.kind_ = Kind::grassmann;
        a.grassmann_.emplace(r, s);
        return a;
    }

    static AmbientSpace isotropic(IsotropicFamily family, int r, int s, bool plus = false) {
        AmbientSpace a;
        a.kind_ = family == IsotropicFamily::orthogonal ? Kind::orthogonal : Kind::symplectic;
        a.isotropic_.emplace(family, r, s, plus);
        return a;
    }

    Kind kind() const { return kind_; }
    const GrassmannSpace& grassmann_space() const {
        if (!grassmann_) throw domain_error("AmbientSpace: not a Grassmannian");
        return *grassmann_;
    }
    const IsotropicSpace& isotropic_space() const {
        if (!isotropic_) throw domain_error("AmbientSpace: not an isotropic Grassmannian");
        return *isotropic_;
    }
    const std::vector<int>& weights() const { return weights_; }

    int dim() const {
        switch (kind_) {
            case Kind::projective: return n_;
            case Kind::weighted_projective: return static_cast<int>(weights_.size()) - 1;
            case Kind::grassmann: return grassmann_->dim();
            case Kind::orthogonal:
            case Kind::symplectic: return isotropic_->dim();
        }
        return 0;
    }

    /// Coefficient of the hyperplane class in c_1 of the tangent bundle.
    int c1_coefficient() const {
        switch (kind_) {
            case Kind::projective: return n_ + 1;
            case Kind::weighted_projective: {
                int sum = 0;
                for (int w : weights_) sum += w;
                return sum;
            }
            case Kind::grassmann: return grassmann_->s();
            case Kind::orthogonal: return isotropic_->s() - isotropic_->r() - 1;
            case Kind::symplectic: return isotropic_->s() - isotropic_->r() + 1;
        }
        return 0;
    }

    std::string label() const {
        switch (kind_) {
            case Kind::projective: return "P(" + std::to_string(n_) + ")";
            case Kind::weighted_projective: {
                std::string out = "P(";
                for (std::size_t i = 0; i < weights_.size(); ++i) {
                    if (i) out += ',';
                    out += std::to_string(weights_[i]);
                }
                return out + ")";
            }
            case Kind::grassmann: return grassmann_->label();
            case Kind::orthogonal:
            case Kind::symplectic: return isotropic_->label();
        }
        return "?";
    }

private:
    Kind kind_ = Kind::projective;
    int n_ = 0;
    std::vector<int> weights_;
    std::optional<GrassmannSpace> grassmann_;
    std::optional<IsotropicSpace> isotropic_;
};

/// Complete intersection of the given multidegree in its ambient space.
struct CIVariety {
    AmbientSpace ambient;
    std::vector<int> degrees;

    CIVariety(AmbientSpace amb, std::vector<int> degs)
        : ambient(std::move(amb)), degrees(std::move(degs)) {
        for (int d : degrees)
            if (d <= 0) throw domain_error("CIVariety: degrees must be positive");
        if (dim() < 1) throw domain_error("CIVariety: dimension must be >= 1");
    }

    int codim() const { return static_cast<int>(degrees.size()); }
    int dim() const { return ambient.dim() - codim(); }

    /// Coefficient of the hyperplane class in c_1(X); positive iff Fano (for
    /// the families modeled here).
    int c1_coefficient() const {
        int sum = 0;
        for (int d : degrees) sum += d;
        return ambient.c1_coefficient() - sum;
    }

    std::string label() const {
        std::string out = ambient.label() + ":(";
        for (std::size_t i = 0; i < degrees.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(degrees[i]);
        }
        return out + ")";
    }
};

/// Chern character components up to degree 3.  Grassmann ambients carry
/// Schubert-class components; projective families carry rational multiples
/// of powers of H.
struct ChernVector {
    int up_to = 0;
    std::vector<CohomologyClass> schubert;  // [s-1] = ch_s, when Grassmann
    std::vector<Rat> hyperplane;            // [s-1] = coefficient of H^s, otherwise
    bool uses_schubert = false;
};

namespace detail {

inline CohomologyClass grassmann_ch2(const GrassmannSpace& g) {
    // ch_2 of S^dual tensor Q: ((s-2r)/2)(sigma_2 - sigma_{1,1}) + sigma_2 + sigma_{1,1}
    CohomologyClass out(g, 2);
    const Rat half_diff = make_rat(g.s() - 2 * g.r(), 2);
    out.add_term(Partition{2}, half_diff + 1);
    out.add_term(Partition{1, 1}, Rat(1) - half_diff);
    return out;
}

}  // namespace detail

/// Chern character of the tangent bundle of the ambient space, degrees 1..up_to.
/// Supported: Grassmann up to 2, projective up to 3, weighted projective up
/// to 2, OG/SG up to 1 (the c_1 coefficients quoted above).
inline ChernVector chern_character_ambient(const AmbientSpace& space, int up_to) {
    if (up_to < 1) throw domain_error("chern_character_ambient: need up_to >= 1");
    ChernVector ch;
    ch.up_to = up_to;
    switch (space.kind()) {
        case AmbientSpace::Kind::grassmann: {
            if (up_to > 2)
                throw not_implemented_error("ch_" + std::to_string(up_to) +
                                            " not implemented for Grassmann ambients");
            ch.uses_schubert = true;
            const auto& g = space.grassmann_space();
            auto c1 = CohomologyClass::schubert(g, Partition{1});
            c1 *= Rat(space.c1_coefficient());
            ch.schubert.push_back(c1);
            if (up_to >= 2) ch.schubert.push_back(detail::grassmann_ch2(g));
            return ch;
        }
        case AmbientSpace::Kind::projective: {
            if (up_to > 3)
                throw not_implemented_error("ch beyond degree 3 not implemented");
            // ch_s = (n+1)/s! H^s
            const int n1 = space.c1_coefficient();
            ch.hyperplane.push_back(Rat(n1));
            if (up_to >= 2) ch.hyperplane.push_back(make_rat(n1, 2));
            if (up_to >= 3) ch.hyperplane.push_back(make_rat(n1, 6));
            return ch;
        }
        case AmbientSpace::Kind::weighted_projective: {
            if (up_to > 2)
                throw not_implemented_error(
                    "ch beyond degree 2 not implemented for weighted projective spaces");
            ch.hyperplane.push_back(Rat(space.c1_coefficient()));
            if (up_to >= 2) {
                Int sq = 0;
                for (int w : space.weights()) sq += Int(w) * w;
                ch.hyperplane.push_back(make_rat(sq, Int(2)));
            }
            return ch;
        }
        case AmbientSpace::Kind::orthogonal:
        case AmbientSpace::Kind::symplectic: {
            if (up_to > 1)
                throw not_implemented_error(
                    "only ch_1 is implemented for OG/SG ambients");
            // OG/SG classes are not modeled as ring elements, so c_1 is kept
            // as a bare sigma_1 coefficient
            ch.hyperplane.push_back(Rat(space.c1_coefficient()));
            return ch;
        }
    }
    throw not_implemented_error("chern_character_ambient: unsupported ambient");
}

/// ch_s(X) = ch_s(ambient) - sum_i d_i^s / s! H^s, kept upstairs.
inline ChernVector chern_character_ci(const CIVariety& X, int up_to) {
    ChernVector ch = chern_character_ambient(X.ambient, up_to);
    static const long factorial[4] = {1, 1, 2, 6};
    for (int s = 1; s <= up_to; ++s) {
        Int power_sum = 0;
        for (int d : X.degrees) {
            Int p = 1;
            for (int k = 0; k < s; ++k) p *= d;
            power_sum += p;
        }
        const Rat corr = make_rat(power_sum, Int(factorial[s]));
        if (ch.uses_schubert) {
            const auto& g = X.ambient.grassmann_space();
            // H^s as a Schubert class: sigma_1^s
            auto h_pow = CohomologyClass::schubert(g, Partition{});
            for (int k = 0; k < s; ++k)
                h_pow = product(h_pow, CohomologyClass::schubert(g, Partition{1}));
            h_pow *= -corr;
            ch.schubert[s - 1] = ch.schubert[s - 1] + h_pow;
        } else {
            ch.hyperplane[s - 1] -= corr;
        }
    }
    return ch;
}

/// Pairs ch_2(X) against an effective-surface class, both kept upstairs:
/// intersection_number([ch_2 terms, surface, d_1 sigma_1, ..., d_c sigma_1]).
/// A negative value certifies that X is not weak 2-Fano.
inline Rat pair_ch2_with_surface(const CIVariety& X, const CohomologyClass& surface) {
    if (X.ambient.kind() != AmbientSpace::Kind::grassmann)
        throw domain_error("pair_ch2_with_surface: ambient must be a Grassmannian");
    const auto& g = X.ambient.grassmann_space();
    if (!(surface.space() == g))
        throw domain_error("pair_ch2_with_surface: surface lives on the wrong space");
    const auto ch2 = chern_character_ci(X, 2).schubert[1];
    std::vector<CohomologyClass> factors{ch2, surface};
    for (int d : X.degrees) {
        auto f = CohomologyClass::schubert(g, Partition{1});
        f *= Rat(d);
        factors.push_back(f);
    }
    return intersection_number(factors);
}

enum class KFanoVerdict { positive, nef_not_positive, fails };

inline std::string kfano_verdict_str(KFanoVerdict v) {
    switch (v) {
        case KFanoVerdict::positive: return "positive";
        case KFanoVerdict::nef_not_positive: return "nef-not-positive";
        case KFanoVerdict::fails: return "fails";
    }
    return "?";
}

/// Nefness/positivity of ch_k for a complete intersection of the given
/// multidegree and dimension n in P^{n+c}: compares sum d_i^k with n+c+1.
inline KFanoVerdict projective_weak_kfano_test(int n, const std::vector<int>& degrees, int k) {
    if (n < 1 || k < 1) throw domain_error("projective_weak_kfano_test: need n, k >= 1");
    const int c = static_cast<int>(degrees.size());
    Int power_sum = 0;
    for (int d : degrees) {
        if (d <= 0) throw domain_error("projective_weak_kfano_test: degrees must be positive");
        Int p = 1;
        for (int i = 0; i < k; ++i) p *= d;
        power_sum += p;
    }
    const Int bound = n + c + 1;
    if (power_sum < bound) return KFanoVerdict::positive;
    if (power_sum == bound) return KFanoVerdict::nef_not_positive;
    return KFanoVerdict::fails;
}

/// Coefficient of H^2 in ch_2 of a complete intersection in P(w):
/// (sum w_i^2 - sum d_j^2) / 2.
inline Rat weighted_ch2(const std::vector<int>& weights, const std::vector<int>& degrees) {
    Int acc = 0;
    for (int w : weights) {
        if (w <= 0) throw domain_error("weighted_ch2: weights must be positive");
        acc += Int(w) * w;
    }
    for (int d : degrees) {
        if (d <= 0) throw domain_error("weighted_ch2: degrees must be positive");
        acc -= Int(d) * d;
    }
    return make_rat(acc, Int(2));
}

}  // namespace fanocone
