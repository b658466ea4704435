#pragma once

// Closed-form moments of shifted-polygon lattice counts. The covariance of
// two counts is (1/12) * sum over side pairs of v o w, where v o w is
// +|v||w| for equally directed sides, -|v||w| for opposed ones and 0
// otherwise (affine lengths throughout). Variance is the self-covariance,
// which cancels opposite-direction sides automatically: a direction carrying
// lengths l+ and l- contributes (l+ - l-)^2 / 12.

#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/vec.hpp"

#include <utility>
#include <vector>

namespace latshift {

inline Rat expectation(const IntPolygon& p) { return p.area(); }

// +|v||w| if parallel and same direction, -|v||w| if antiparallel, else 0.
inline Int side_dot(const IntVec& v, const IntVec& w) {
    if (v.is_zero() || w.is_zero()) fail(Errc::ZeroVector, "side_dot of zero vector");
    if (wedge(v, w) != 0) return 0;
    Int prod = affine_length(v) * affine_length(w);
    return (dot(v, w) > 0) ? prod : -prod;
}

inline Rat covariance(const IntPolygon& p, const IntPolygon& q) {
    const SideProfile pp = p.side_profile();
    const SideProfile qp = q.side_profile();
    Int acc = 0;
    for (const auto& [du, lu] : pp.entries()) {
        for (const auto& [dv, lv] : qp.entries()) {
            if (du == dv) acc += lu * lv;
            else if (du == -dv) acc -= lu * lv;
        }
    }
    return Rat(acc, 12);
}

inline Rat variance(const IntPolygon& p) { return covariance(p, p); }

struct MomentReport {
    Rat expectation;
    Rat variance;
    // Net contribution per direction pair {u, -u}, keyed by the canonical
    // representative: (l+ - l-)^2 / 12.
    std::vector<std::pair<IntVec, Rat>> contributions;
};

inline MomentReport moment_report(const IntPolygon& p) {
    MomentReport rep{expectation(p), Rat(0), {}};
    const SideProfile prof = p.side_profile();
    const auto& entries = prof.entries();
    for (const auto& [d, l] : entries) {
        IntVec canon = canonical_sign(d);
        if (canon != d && entries.count(canon)) continue; // counted with +u
        Int net = l;
        auto opp = entries.find(-d);
        if (opp != entries.end()) net -= opp->second;
        Rat contrib = Rat(net * net, 12);
        rep.contributions.emplace_back(canon, contrib);
        rep.variance += contrib;
    }
    return rep;
}

} // namespace latshift
