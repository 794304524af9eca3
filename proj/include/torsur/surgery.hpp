#pragma once

#include <torsur/abelian.hpp>
#include <torsur/boundary.hpp>
#include <torsur/invariants.hpp>
#include <torsur/lattice.hpp>

#include <optional>
#include <vector>

namespace torsur {

enum class LClassStatus { null_homologous_integral, torsion, rationally_nonzero };

std::string to_string(LClassStatus s);

// Invariants of the ambient closed 4-manifold X the torus sits in.
struct AmbientData {
    LClassStatus l_class_status = LClassStatus::null_homologous_integral;
    long long b2 = 0;
    long long b_plus = 0;
    long long signature = 0;
    long long euler = 0;
    bool h2_torsion_free = false;
    bool intersection_form_odd = false;
    std::optional<Kappa> kappa;
};

// A (p,k) surgery: gamma = a*v1 + b*v2 in the coordinates of a framing.
struct SurgerySpec {
    Int p = 1;
    Int k = 0;
    Int gamma_a = 1;
    Int gamma_b = 0;

    // gcd(p,k) = 1 and gamma primitive; throws invariant_violation otherwise
    void validate() const;
};

// p = 1 only: the reverse Luttinger surgery has coefficient -k.
SurgerySpec reverse_spec(const SurgerySpec& s);

// Homological data of the torus complement Y: a presentation of H_1(Y;Z)
// together with the images of the boundary basis under i_1.
class ComplementPresentation {
public:
    ComplementPresentation(Presentation h1_y, IntVec i1_mu, IntVec i1_g1,
                           IntVec i1_g2,
                           std::optional<std::vector<IntVec>> ker_i2_integral = {},
                           std::optional<AmbientData> ambient = {});

    const Presentation& h1_y() const { return h1_y_; }
    std::size_t n_generators() const { return h1_y_.n_generators; }
    const IntVec& i1_mu() const { return i1_mu_; }
    const IntVec& i1_g1() const { return i1_g1_; }
    const IntVec& i1_g2() const { return i1_g2_; }
    const std::optional<std::vector<IntVec>>& ker_i2_integral() const {
        return ker_i2_integral_;
    }
    const std::optional<AmbientData>& ambient() const { return ambient_; }
    const AmbientData& require_ambient() const;

    // image under i_1 of a class in the (mu, g1, g2) basis
    IntVec i1_image(const IntVec& h1z_class) const;

    // nonzero in H_1(Y;Q)?
    bool i1_rationally_nonzero(const IntVec& h1z_class) const;

private:
    Presentation h1_y_;
    IntVec i1_mu_, i1_g1_, i1_g2_;
    std::optional<std::vector<IntVec>> ker_i2_integral_;
    std::optional<AmbientData> ambient_;

    void validate() const;
};

// --- kernels of the boundary inclusion ------------------------------------

// Saturated lattice of classes mapping to torsion in H_1(Y;Z).
Lattice ker_i1_rational(const ComplementPresentation& c);

// Classes with i_1 image exactly zero in H_1(Y;Z). No saturation.
Lattice ker_i1_integral(const ComplementPresentation& c);

// Annihilator of ker i_1 under the cap product (in the H_2 dual basis).
Lattice ker_i2_rational(const ComplementPresentation& c);

// --- surgery at the homology level ----------------------------------------

// [new meridian] = p*[mu] + k*[gamma] in H_1(Z;Z).
IntVec meridian_after(const Framing& f, const SurgerySpec& s);

// Same, starting from an arbitrary current meridian class (used when
// composing surgeries, e.g. a reversal).
IntVec meridian_after_from(const IntVec& current_meridian, const Framing& f,
                           const SurgerySpec& s);

// H_1 of the closed manifold obtained by filling along the given meridian:
// H_1(Y;Z) / <i_1(meridian)>.
FgAbGroup h1_filled(const ComplementPresentation& c, const IntVec& meridian);

// H_1(X;Z) before surgery (fill along mu).
FgAbGroup h1_of_X(const ComplementPresentation& c);

// H_1 after the (p,k) surgery.
FgAbGroup surgered_h1(const ComplementPresentation& c, const Framing& f,
                      const SurgerySpec& s);

long long b1_of_Y(const ComplementPresentation& c);
long long derive_b1_of_X(const ComplementPresentation& c);

struct BettiProfile {
    long long b1_delta = 0;
    long long b2_delta = 0;
    long long euler = 0;
    long long signature = 0;
    long long b_plus_after = 0;
    HomologyFingerprint after;
};

// Requires ambient data. Euler characteristic and signature are carried
// over unchanged; b1 moves by the meridian-vanishing case table.
BettiProfile betti_profile_after(const ComplementPresentation& c, const Framing& f,
                                 const SurgerySpec& s);

// Parity of the intersection form after surgery. Requires [L] torsion or
// null-homologous; odd stays odd, and if the surgered torus class is also
// torsion the form itself is unchanged.
Parity intersection_parity_after(const ComplementPresentation& c, const Framing& f,
                                 const SurgerySpec& s);

}  // namespace torsur
