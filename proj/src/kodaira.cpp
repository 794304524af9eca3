#include <torsur/kodaira.hpp>

namespace torsur {

void KodairaProfile::validate() const {
    if (omega_squared <= 0)
        throw Error(ErrorKind::invariant_violation, "[omega]^2 must be positive");
}

Kappa classify_kappa(const KodairaProfile& p) {
    p.validate();
    if (!p.minimal)
        throw Error(ErrorKind::requires_minimal_model,
                    "kappa is classified on minimal models; pass the minimal "
                    "model's invariants");
    if (p.k_squared < 0 || p.k_dot_omega < 0) return Kappa::minus_infinity;
    if (p.k_squared == 0 && p.k_dot_omega == 0) return Kappa::zero;
    if (p.k_squared == 0 && p.k_dot_omega > 0) return Kappa::one;
    if (p.k_squared > 0 && p.k_dot_omega > 0) return Kappa::two;
    // K^2 > 0 with K.[w] = 0 falls outside the four-case table
    throw Error(ErrorKind::unrealizable_profile,
                "no kappa value for K^2 > 0 with K.[omega] = 0");
}

std::string to_string(CyLabel l) {
    switch (l) {
        case CyLabel::k3_type: return "K3-type";
        case CyLabel::enriques_type: return "Enriques-type";
        case CyLabel::t4_type: return "T4-type";
        case CyLabel::t2_bundle_b1_3: return "T2-bundle-b1-3";
        case CyLabel::t2_bundle_b1_2: return "T2-bundle-b1-2";
        case CyLabel::no_match: return "no-match";
    }
    return "?";
}

CyLabel cy_table_lookup(const HomologyFingerprint& f) {
    struct Row {
        HomologyFingerprint fp;
        CyLabel label;
    };
    static const Row rows[] = {
        {{0, 22, 3, 24, -16}, CyLabel::k3_type},
        {{0, 10, 1, 12, -8}, CyLabel::enriques_type},
        {{4, 6, 3, 0, 0}, CyLabel::t4_type},
        {{3, 4, 2, 0, 0}, CyLabel::t2_bundle_b1_3},
        {{2, 2, 1, 0, 0}, CyLabel::t2_bundle_b1_2},
    };
    for (const Row& r : rows)
        if (f == r.fp) return r.label;
    return CyLabel::no_match;
}

std::optional<AlmostToricBase> parse_almost_toric_base(const std::string& name) {
    if (name == "disk") return AlmostToricBase::disk;
    if (name == "cylinder") return AlmostToricBase::cylinder;
    if (name == "moebius") return AlmostToricBase::moebius;
    if (name == "sphere") return AlmostToricBase::sphere;
    if (name == "rp2") return AlmostToricBase::rp2;
    if (name == "torus") return AlmostToricBase::torus;
    if (name == "klein") return AlmostToricBase::klein;
    return std::nullopt;
}

std::string to_string(AlmostToricBase b) {
    switch (b) {
        case AlmostToricBase::disk: return "disk";
        case AlmostToricBase::cylinder: return "cylinder";
        case AlmostToricBase::moebius: return "moebius";
        case AlmostToricBase::sphere: return "sphere";
        case AlmostToricBase::rp2: return "rp2";
        case AlmostToricBase::torus: return "torus";
        case AlmostToricBase::klein: return "klein";
    }
    return "?";
}

AlmostToricFamilies almost_toric_lookup(AlmostToricBase base) {
    switch (base) {
        case AlmostToricBase::disk:
            return {{"CP2 # n CP2-bar", "S2 x S2"}, Kappa::minus_infinity};
        case AlmostToricBase::cylinder:
            return {{"(S2 x T2) # n CP2-bar", "(S2 ~x T2) # n CP2-bar"},
                    Kappa::minus_infinity};
        case AlmostToricBase::moebius:
            return {{"(S2 x T2) # n CP2-bar", "(S2 ~x T2) # n CP2-bar"},
                    Kappa::minus_infinity};
        case AlmostToricBase::sphere:
            return {{"K3 surface"}, Kappa::zero};
        case AlmostToricBase::rp2:
            return {{"Enriques surface"}, Kappa::zero};
        case AlmostToricBase::torus:
            return {{"torus bundle over torus, monodromy {I, [[1,m],[0,1]]}"},
                    Kappa::zero};
        case AlmostToricBase::klein:
            return {{"torus bundle over Klein bottle, monodromy "
                     "{[[1,0],[0,-1]], [[1,m],[0,1]]}"},
                    Kappa::zero};
    }
    throw Error(ErrorKind::not_applicable, "unknown almost toric base");
}

ConsistencyReport check_surgery_consistency(std::optional<Kappa> kappa_before,
                                            const HomologyFingerprint& before,
                                            Parity parity_before,
                                            const HomologyFingerprint& after,
                                            Parity parity_after, const Int& p) {
    ConsistencyReport report;
    auto violate = [&](const std::string& msg) {
        report.passed = false;
        report.violations.push_back(msg);
    };

    // euler and signature are invariant under every torus surgery
    if (after.euler != before.euler)
        violate("euler characteristic changed under surgery");
    if (after.signature != before.signature)
        violate("signature changed under surgery");

    bool kappa_applicable = (p == 1 || p == -1);
    if (!kappa_applicable && kappa_before) {
        report.warnings.push_back(
            "kappa invariance is only guaranteed for |p| = 1; "
            "kappa-based checks skipped");
    }

    if (kappa_before && kappa_applicable) {
        if (*kappa_before == Kappa::minus_infinity) {
            // surgered manifold must be symplectomorphic to the original
            if (!(after == before))
                violate("kappa = -infinity surgery changed the homology "
                        "fingerprint");
            if (parity_after != parity_before)
                violate("kappa = -infinity surgery changed the intersection "
                        "form parity");
        } else if (*kappa_before == Kappa::zero && before.euler > 0) {
            // integral homology type is preserved for CY surfaces with chi > 0
            if (after.b1 != before.b1 || after.b2 != before.b2 ||
                after.euler != before.euler || after.signature != before.signature)
                violate("kappa = 0 (chi > 0) surgery changed the rational "
                        "homology type");
        }
    }
    return report;
}

std::string to_string(EssentialityClass e) {
    switch (e) {
        case EssentialityClass::null_homologous: return "null_homologous";
        case EssentialityClass::torsion: return "torsion";
        case EssentialityClass::essential: return "essential";
        case EssentialityClass::completely_essential: return "completely_essential";
    }
    return "?";
}

EssentialityClass essentiality_class(const ComplementPresentation& c) {
    Lattice ker1 = ker_i1_rational(c);
    if (ker1.rank() == 3) return EssentialityClass::completely_essential;
    if (!c.i1_rationally_nonzero(boundary_basis::mu()))
        return EssentialityClass::essential;
    // [L] is rationally zero; torsion vs null-homologous is ambient data
    const AmbientData& amb = c.require_ambient();
    switch (amb.l_class_status) {
        case LClassStatus::null_homologous_integral:
            return EssentialityClass::null_homologous;
        case LClassStatus::torsion:
            return EssentialityClass::torsion;
        case LClassStatus::rationally_nonzero:
            throw Error(ErrorKind::invariant_violation,
                        "ambient declares [L] essential but i1[mu] != 0");
    }
    throw Error(ErrorKind::not_applicable, "unreachable");
}

}  // namespace torsur
