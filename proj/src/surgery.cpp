#include <torsur/surgery.hpp>

namespace torsur {

std::string to_string(LClassStatus s) {
    switch (s) {
        case LClassStatus::null_homologous_integral: return "null_homologous_integral";
        case LClassStatus::torsion: return "torsion";
        case LClassStatus::rationally_nonzero: return "rationally_nonzero";
    }
    return "?";
}

void SurgerySpec::validate() const {
    if (gcd_int(p, k) != 1)
        throw Error(ErrorKind::invariant_violation,
                    "surgery multiplicities (p,k) must be coprime");
    if (gcd_int(gamma_a, gamma_b) != 1)
        throw Error(ErrorKind::invariant_violation,
                    "gamma must be a primitive curve class");
}

SurgerySpec reverse_spec(const SurgerySpec& s) {
    if (s.p != 1)
        throw Error(ErrorKind::not_applicable,
                    "reversal is only defined for (1,k) surgeries");
    SurgerySpec r = s;
    r.k = -s.k;
    return r;
}

ComplementPresentation::ComplementPresentation(
    Presentation h1_y, IntVec i1_mu, IntVec i1_g1, IntVec i1_g2,
    std::optional<std::vector<IntVec>> ker_i2_integral,
    std::optional<AmbientData> ambient)
    : h1_y_(std::move(h1_y)),
      i1_mu_(std::move(i1_mu)),
      i1_g1_(std::move(i1_g1)),
      i1_g2_(std::move(i1_g2)),
      ker_i2_integral_(std::move(ker_i2_integral)),
      ambient_(std::move(ambient)) {
    validate();
}

const AmbientData& ComplementPresentation::require_ambient() const {
    if (!ambient_)
        throw Error(ErrorKind::missing_data,
                    "operation requires ambient manifold data");
    return *ambient_;
}

IntVec ComplementPresentation::i1_image(const IntVec& h1z_class) const {
    if (h1z_class.size() != 3)
        throw Error(ErrorKind::dimension, "boundary class must have length 3");
    IntVec out(h1_y_.n_generators, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = h1z_class[0] * i1_mu_[i] + h1z_class[1] * i1_g1_[i] +
                 h1z_class[2] * i1_g2_[i];
    return out;
}

bool ComplementPresentation::i1_rationally_nonzero(const IntVec& h1z_class) const {
    IntMatrix stacked = h1_y_.relations;
    std::size_t base_rank = stacked.rows() ? stacked.rank() : 0;
    stacked.append_row(i1_image(h1z_class));
    return stacked.rank() > base_rank;
}

void ComplementPresentation::validate() const {
    const std::size_t n = h1_y_.n_generators;
    if (i1_mu_.size() != n || i1_g1_.size() != n || i1_g2_.size() != n)
        throw Error(ErrorKind::dimension,
                    "i1 images must have one entry per generator of H1(Y)");

    const bool mu_nonzero = i1_rationally_nonzero(boundary_basis::mu());

    if (ambient_) {
        // [L] != 0 rationally iff mu dies rationally in Y
        const bool l_essential =
            ambient_->l_class_status == LClassStatus::rationally_nonzero;
        if (l_essential && mu_nonzero)
            throw Error(ErrorKind::invariant_violation,
                        "ambient declares [L] rationally essential but i1[mu] != 0 "
                        "in H1(Y;Q)");
        if (!l_essential && !mu_nonzero)
            throw Error(ErrorKind::invariant_violation,
                        "ambient declares [L] rationally zero but i1[mu] = 0 "
                        "in H1(Y;Q)");
        // integrally null-homologous [L] forces a non-torsion meridian image
        if (ambient_->l_class_status == LClassStatus::null_homologous_integral &&
            !mu_nonzero)
            throw Error(ErrorKind::invariant_violation,
                        "ambient declares [L] = 0 integrally but i1[mu] is torsion");
        if (ambient_->signature != 2 * ambient_->b_plus - ambient_->b2)
            throw Error(ErrorKind::inconsistent_ambient,
                        "ambient signature does not match 2*b_plus - b2");
        long long b1_x = mu_nonzero ? b1_of_Y(*this) - 1 : b1_of_Y(*this);
        if (ambient_->b2 != ambient_->euler - 2 + 2 * b1_x)
            throw Error(ErrorKind::inconsistent_ambient,
                        "ambient b2 does not match euler - 2 + 2*b1(X)");
    }

    Lattice ker1 = ker_i1_rational(*this);
    if (ker1.rank() < 1)
        throw Error(ErrorKind::invariant_violation, "rank(ker i1) must be positive");

    if (ker_i2_integral_) {
        Lattice ker1z = ker_i1_integral(*this);
        for (const IntVec& w : *ker_i2_integral_) {
            if (w.size() != 3)
                throw Error(ErrorKind::dimension,
                            "ker i2 classes must have length 3");
            for (const IntVec& v : ker1z.basis())
                if (cap_pair(v, w) != 0)
                    throw Error(ErrorKind::invariant_violation,
                                "supplied ker i2 class does not annihilate ker i1");
        }
    }
}

namespace {

// Lattice of boundary classes v with i1(v) inside the integral row span of
// the relations: project the integer left kernel of [i1; relations].
Lattice meridian_kernel(const ComplementPresentation& c) {
    const std::size_t n = c.n_generators();
    IntMatrix stacked = IntMatrix::from_rows(
        {c.i1_mu(), c.i1_g1(), c.i1_g2()}, n);
    for (std::size_t r = 0; r < c.h1_y().relations.rows(); ++r)
        stacked.append_row(c.h1_y().relations.row(r));

    SnfResult snf = smith_normal_form(stacked);
    std::vector<IntVec> gens;
    for (std::size_t i = snf.rank; i < stacked.rows(); ++i) {
        IntVec u_row = snf.u.row(i);
        gens.push_back({u_row[0], u_row[1], u_row[2]});
    }
    return Lattice::from_generators(3, gens);
}

}  // namespace

Lattice ker_i1_integral(const ComplementPresentation& c) {
    return meridian_kernel(c);
}

Lattice ker_i1_rational(const ComplementPresentation& c) {
    return meridian_kernel(c).saturate();
}

Lattice ker_i2_rational(const ComplementPresentation& c) {
    return ker_i1_rational(c).annihilator();
}

IntVec meridian_after(const Framing& f, const SurgerySpec& s) {
    return meridian_after_from(boundary_basis::mu(), f, s);
}

IntVec meridian_after_from(const IntVec& current_meridian, const Framing& f,
                           const SurgerySpec& s) {
    s.validate();
    if (current_meridian.size() != 3)
        throw Error(ErrorKind::dimension, "meridian class must have length 3");
    IntVec gamma = add(scaled(f.v1(), s.gamma_a), scaled(f.v2(), s.gamma_b));
    return add(scaled(current_meridian, s.p), scaled(gamma, s.k));
}

FgAbGroup h1_filled(const ComplementPresentation& c, const IntVec& meridian) {
    return quotient_by_element(c.h1_y(), c.i1_image(meridian));
}

FgAbGroup h1_of_X(const ComplementPresentation& c) {
    return h1_filled(c, boundary_basis::mu());
}

FgAbGroup surgered_h1(const ComplementPresentation& c, const Framing& f,
                      const SurgerySpec& s) {
    return h1_filled(c, meridian_after(f, s));
}

long long b1_of_Y(const ComplementPresentation& c) {
    const IntMatrix& r = c.h1_y().relations;
    std::size_t rk = r.rows() ? r.rank() : 0;
    return static_cast<long long>(c.n_generators() - rk);
}

long long derive_b1_of_X(const ComplementPresentation& c) {
    long long b1y = b1_of_Y(c);
    return c.i1_rationally_nonzero(boundary_basis::mu()) ? b1y - 1 : b1y;
}

BettiProfile betti_profile_after(const ComplementPresentation& c, const Framing& f,
                                 const SurgerySpec& s) {
    const AmbientData& amb = c.require_ambient();

    const bool mu_nonzero = c.i1_rationally_nonzero(boundary_basis::mu());
    const bool mu_after_nonzero = c.i1_rationally_nonzero(meridian_after(f, s));

    BettiProfile out;
    if (mu_nonzero == mu_after_nonzero)
        out.b1_delta = 0;
    else if (!mu_nonzero)
        out.b1_delta = -1;  // meridian was dead, comes alive
    else
        out.b1_delta = 1;

    out.euler = amb.euler;
    out.signature = amb.signature;

    long long b1_after = derive_b1_of_X(c) + out.b1_delta;
    long long b2_after = amb.euler - 2 + 2 * b1_after;
    out.b2_delta = b2_after - amb.b2;
    if ((b2_after + amb.signature) % 2 != 0)
        throw Error(ErrorKind::inconsistent_ambient,
                    "b2 + signature is odd after surgery");
    out.b_plus_after = (b2_after + amb.signature) / 2;
    out.after = HomologyFingerprint{b1_after, b2_after, out.b_plus_after,
                                    amb.euler, amb.signature};
    return out;
}

Parity intersection_parity_after(const ComplementPresentation& c, const Framing& f,
                                 const SurgerySpec& s) {
    const AmbientData& amb = c.require_ambient();
    if (amb.l_class_status == LClassStatus::rationally_nonzero)
        throw Error(ErrorKind::not_applicable,
                    "parity propagation needs [L] torsion or null-homologous");
    if (amb.intersection_form_odd) return Parity::odd;
    // [L~] is rationally zero exactly when the new meridian survives in
    // H1(Y;Q); then the intersection form is carried over unchanged.
    if (c.i1_rationally_nonzero(meridian_after(f, s))) return Parity::even;
    return Parity::unknown;
}

}  // namespace torsur
