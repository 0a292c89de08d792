#pragma once

#include <string>

#include "fanocone/isotropic.hpp"
#include "fanocone/partition.hpp"
#include "fanocone/weyl.hpp"

namespace fanocone {

enum class ConeVerdict { half_line, at_most_two_rays, simplicial, unknown };

inline std::string cone_verdict_str(const ConeVerdict v, long long rays = 0) {
    switch (v) {
        case ConeVerdict::half_line: return "half-line";
        case ConeVerdict::at_most_two_rays: return "at-most-two-rays";
        case ConeVerdict::simplicial: return "simplicial-with-" + std::to_string(rays) + "-rays";
        case ConeVerdict::unknown: return "unknown";
    }
    return "unknown";
}

/// Shape of the pseudoeffective cone of k-cycles, with the citation chain
/// that justifies it.  All statements are modulo torsion: N_k is identified
/// with the free part of H_{2k}.
struct ConeReport {
    long long rank_bound = 0;
    ConeVerdict verdict = ConeVerdict::unknown;
    long long rays = 0;
    std::string justification;

    std::string verdict_str() const { return cone_verdict_str(verdict, rays); }
};

/// What cone_report can be asked about: a modeled homogeneous family, or
/// bare Betti-rank data for anything else.
struct SpaceDescriptor {
    enum class Kind { grassmann, orthogonal, symplectic, g2_p2, projective, quadric, betti_rank,
                      unknown };
    Kind kind = Kind::unknown;
    int r = 0;
    int s = 0;
    bool plus = false;
    int n = 0;           // projective / quadric dimension
    long long rank = 0;  // for Kind::betti_rank: a known bound on b_{2k}

    static SpaceDescriptor grassmann(int r, int s) {
        SpaceDescriptor d;
        d.kind = Kind::grassmann;
        d.r = r;
        d.s = s;
        return d;
    }
    static SpaceDescriptor orthogonal(int r, int s, bool plus = false) {
        SpaceDescriptor d;
        d.kind = Kind::orthogonal;
        d.r = r;
        d.s = s;
        d.plus = plus;
        return d;
    }
    static SpaceDescriptor symplectic(int r, int s) {
        SpaceDescriptor d;
        d.kind = Kind::symplectic;
        d.r = r;
        d.s = s;
        return d;
    }
    static SpaceDescriptor g2_p2() {
        SpaceDescriptor d;
        d.kind = Kind::g2_p2;
        return d;
    }
    static SpaceDescriptor projective(int n) {
        SpaceDescriptor d;
        d.kind = Kind::projective;
        d.n = n;
        return d;
    }
    static SpaceDescriptor quadric(int n) {
        SpaceDescriptor d;
        d.kind = Kind::quadric;
        d.n = n;
        return d;
    }
    static SpaceDescriptor betti_rank(long long rank) {
        SpaceDescriptor d;
        d.kind = Kind::betti_rank;
        d.rank = rank;
        return d;
    }
};

namespace detail {

inline ConeReport homogeneous_report(long long schubert_classes, const std::string& what) {
    ConeReport rep;
    rep.rank_bound = schubert_classes;
    rep.rays = schubert_classes;
    rep.justification = what + "; nef = eff, spanned by the " +
                        std::to_string(schubert_classes) +
                        " Schubert classes of that dimension; torsion-free N_k assumed";
    if (schubert_classes == 1) {
        rep.verdict = ConeVerdict::half_line;
    } else {
        rep.verdict = ConeVerdict::simplicial;
    }
    return rep;
}

}  // namespace detail

/// Cone of k-cycles.  For the modeled homogeneous families the cone is
/// simplicial on the Schubert classes of dimension k; for bare Betti data
/// ranks 1 and 2 give a half-line resp. at most two rays.
inline ConeReport cone_report(const SpaceDescriptor& d, int k) {
    switch (d.kind) {
        case SpaceDescriptor::Kind::grassmann: {
            GrassmannSpace g(d.r, d.s);
            if (k < 0 || k > g.dim()) throw domain_error("cone_report: k out of range");
            const long long n = count_partitions_in_box(g.dim() - k, g.box());
            return detail::homogeneous_report(n, "homogeneous " + g.label());
        }
        case SpaceDescriptor::Kind::orthogonal:
        case SpaceDescriptor::Kind::symplectic: {
            IsotropicSpace space(d.kind == SpaceDescriptor::Kind::orthogonal
                                     ? IsotropicFamily::orthogonal
                                     : IsotropicFamily::symplectic,
                                 d.r, d.s, d.plus);
            if (k < 0 || k > space.dim()) throw domain_error("cone_report: k out of range");
            const long long n = betti(space, space.dim() - k);
            return detail::homogeneous_report(n, "homogeneous " + space.label());
        }
        case SpaceDescriptor::Kind::g2_p2: {
            auto q = node_quotient(CoxType::G2, 2, 2);
            if (k < 0 || k > q.dim()) throw domain_error("cone_report: k out of range");
            const auto census = q.minimal_coset_reps();
            auto it = census.find(k);
            const long long n = it == census.end() ? 0 : it->second;
            return detail::homogeneous_report(n, "homogeneous G2/P2");
        }
        case SpaceDescriptor::Kind::projective: {
            if (k < 0 || k > d.n) throw domain_error("cone_report: k out of range");
            return detail::homogeneous_report(1, "projective space P^" + std::to_string(d.n));
        }
        case SpaceDescriptor::Kind::quadric: {
            if (k < 0 || k > d.n) throw domain_error("cone_report: k out of range");
            const long long n = (d.n % 2 == 0 && k == d.n / 2) ? 2 : 1;
            return detail::homogeneous_report(n, "quadric Q^" + std::to_string(d.n));
        }
        case SpaceDescriptor::Kind::betti_rank: {
            ConeReport rep;
            rep.rank_bound = d.rank;
            if (d.rank == 1) {
                rep.verdict = ConeVerdict::half_line;
                rep.justification = "b_{2k} = 1: N_k has rank 1; torsion-free N_k assumed";
            } else if (d.rank == 2) {
                rep.verdict = ConeVerdict::at_most_two_rays;
                rep.justification = "b_{2k} = 2: N_k has rank at most 2; torsion-free N_k assumed";
            } else {
                rep.verdict = ConeVerdict::unknown;
                rep.justification = "no polyhedrality criterion for rank " +
                                    std::to_string(d.rank);
            }
            return rep;
        }
        case SpaceDescriptor::Kind::unknown: break;
    }
    ConeReport rep;
    rep.verdict = ConeVerdict::unknown;
    rep.justification = "descriptor not modeled";
    return rep;
}

}  // namespace fanocone
