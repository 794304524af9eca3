#pragma once

#include <torsur/invariants.hpp>
#include <torsur/surgery.hpp>

#include <optional>
#include <string>
#include <vector>

namespace torsur {

// (K^2, K.[w], [w]^2, minimality) of a symplectic 4-manifold. The
// classification formula applies to minimal manifolds; callers with a
// non-minimal manifold must pass the invariants of a minimal model.
struct KodairaProfile {
    Int k_squared = 0;
    Rational k_dot_omega = 0;
    Rational omega_squared = 1;
    bool minimal = true;

    void validate() const;  // omega_squared > 0
};

Kappa classify_kappa(const KodairaProfile& p);

enum class CyLabel {
    k3_type,
    enriques_type,
    t4_type,
    t2_bundle_b1_3,
    t2_bundle_b1_2,
    no_match,
};

std::string to_string(CyLabel l);

// Match against the five homology types of symplectic Calabi-Yau surfaces.
CyLabel cy_table_lookup(const HomologyFingerprint& f);

enum class AlmostToricBase { disk, cylinder, moebius, sphere, rp2, torus, klein };

std::optional<AlmostToricBase> parse_almost_toric_base(const std::string& name);
std::string to_string(AlmostToricBase b);

struct AlmostToricFamilies {
    std::vector<std::string> families;
    Kappa kappa;
};

// Closed almost toric 4-manifolds by base type; kappa = 0 exactly for the
// closed bases.
AlmostToricFamilies almost_toric_lookup(AlmostToricBase base);

struct ConsistencyReport {
    bool passed = true;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
};

// Check a surgery's before/after invariants against what the surgery
// theorems guarantee. kappa-based checks need |p| = 1; without that only
// the euler/signature invariance is enforced.
ConsistencyReport check_surgery_consistency(std::optional<Kappa> kappa_before,
                                            const HomologyFingerprint& before,
                                            Parity parity_before,
                                            const HomologyFingerprint& after,
                                            Parity parity_after, const Int& p);

enum class EssentialityClass {
    null_homologous,
    torsion,
    essential,
    completely_essential,
};

std::string to_string(EssentialityClass e);

EssentialityClass essentiality_class(const ComplementPresentation& c);

}  // namespace torsur
