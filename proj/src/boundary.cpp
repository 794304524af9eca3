#include <torsur/boundary.hpp>

#include <cassert>

namespace torsur {

Int cap_pair(const IntVec& h1_class, const IntVec& h2_class) {
    if (h1_class.size() != 3 || h2_class.size() != 3)
        throw Error(ErrorKind::dimension, "cap product expects length-3 vectors");
    return dot(h1_class, h2_class);
}

Framing::Framing(IntVec v1, IntVec v2)
    : v1_(std::move(v1)), v2_(std::move(v2)), subgroup_(3) {
    if (v1_.size() != 3 || v2_.size() != 3)
        throw Error(ErrorKind::dimension, "framing vectors must have length 3");
    Int d = det3(boundary_basis::mu(), v1_, v2_);
    if (d != 1 && d != -1)
        throw Error(ErrorKind::invalid_framing,
                    "(mu, v1, v2) is not unimodular (det = " + d.str() + ")");
    subgroup_ = Lattice::from_generators(3, {v1_, v2_});
}

IntVec longitudinal_class(const Framing& f) {
    // cross(v1, v2) caps to 0 with v1 and v2, and to det(mu,v1,v2) = +-1
    // with mu; flip sign so the cap with mu is +1.
    const IntVec& a = f.v1();
    const IntVec& b = f.v2();
    IntVec w = {a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]};
    if (w[0] < 0)
        for (Int& x : w) x = -x;
    assert(cap_pair(boundary_basis::mu(), w) == 1);
    return w;
}

Int lambda_invariant(const Framing& f_lag, const Framing& f_pref) {
    if (f_lag == f_pref) return 0;

    // k*mu + gamma in H_lag for some gamma in H_pref  <=>  k*mu in the sum
    // lattice H_lag + H_pref. The functional x -> cap(x, L_lag) kills H_lag
    // and sends mu to 1, so such k exist and are bounded by
    // gcd(cap(w1, L_lag), cap(w2, L_lag)) with (w1, w2) generating H_pref;
    // the gcd is nonzero because the subgroups differ.
    const Lattice sum = f_lag.subgroup().sum(f_pref.subgroup());
    IntVec l_lag = longitudinal_class(f_lag);
    Int bound = gcd_int(cap_pair(f_pref.v1(), l_lag), cap_pair(f_pref.v2(), l_lag));
    assert(bound != 0);

    for (Int k = 1;; ++k) {
        IntVec target = {k, 0, 0};
        if (sum.contains(target)) return k;
        assert(k <= bound);
    }
}

}  // namespace torsur
