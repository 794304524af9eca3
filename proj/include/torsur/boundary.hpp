#pragma once

#include <torsur/lattice.hpp>

namespace torsur {

// The boundary 3-torus Z of a tubular neighborhood of an embedded torus.
// H_1(Z;Z) carries the ordered basis (mu, g1, g2); H_2(Z;Z) carries the
// dual ordered basis (g1 x g2, g2 x mu, mu x g1), so the cap product of
// the two bases is the identity pairing.
namespace boundary_basis {

inline IntVec mu() { return {1, 0, 0}; }
inline IntVec g1() { return {0, 1, 0}; }
inline IntVec g2() { return {0, 0, 1}; }

}  // namespace boundary_basis

// Cap product H_1(Z) x H_2(Z) -> Z: dot product in the dual bases.
Int cap_pair(const IntVec& h1_class, const IntVec& h2_class);

// A framing, identified with the rank-2 subgroup H_{1,phi} complementing
// <mu> in H_1(Z;Z). Two framings with equal subgroups are equal.
class Framing {
public:
    // Throws invalid_framing unless (mu, v1, v2) is a unimodular triple.
    Framing(IntVec v1, IntVec v2);

    static Framing standard() { return Framing({0, 1, 0}, {0, 0, 1}); }

    const IntVec& v1() const { return v1_; }
    const IntVec& v2() const { return v2_; }
    const Lattice& subgroup() const { return subgroup_; }

    bool operator==(const Framing& other) const {
        return subgroup_ == other.subgroup_;
    }

private:
    IntVec v1_, v2_;
    Lattice subgroup_;
};

// H_2 class of the longitudinal torus: the unique class capping to 0 on
// H_{1,phi}, normalized to cap +1 with mu.
IntVec longitudinal_class(const Framing& f);

// Framing-comparison invariant: 0 iff the two subgroups coincide, else the
// smallest k > 0 such that k*mu + gamma lies in f_lag's subgroup for some
// gamma in f_pref's subgroup.
Int lambda_invariant(const Framing& f_lag, const Framing& f_pref);

}  // namespace torsur
