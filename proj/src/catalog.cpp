#include <torsur/catalog.hpp>

namespace torsur {

const Framing& CatalogEntry::framing(const std::string& fname) const {
    for (const auto& [n, f] : framings)
        if (n == fname) return f;
    throw Error(ErrorKind::missing_data,
                "catalog entry '" + name + "' has no framing '" + fname + "'");
}

FgAbGroup lens_family_h1(const Int& p, const Int& k) {
    Int order = abs_int(1 + k * p);
    FgAbGroup g;
    g.free_rank = 1;
    if (order == 0)
        g.free_rank = 2;  // zero diagonal entry: the lens space degenerates
    else if (order >= 2)
        g.torsion.push_back(order);
    return g;
}

Framing phi_framing(const Int& p) {
    return Framing({p, 1, 0}, {0, 0, 1});
}

CatalogEntry entry_trivial_knot() {
    // Y = S1 x (S3 - K0) = S1 x S1 x D2, H1(Y) = Z<m> + Z<t>.
    // Boundary curves: mu -> m, g1 = a (the longitude, bounds a disk) -> 0,
    // g2 = b (the S1 factor) -> t.
    Presentation h1_y(2, IntMatrix(0, 2));
    AmbientData ambient;
    ambient.l_class_status = LClassStatus::null_homologous_integral;
    ambient.b2 = 0;
    ambient.b_plus = 0;
    ambient.signature = 0;
    ambient.euler = 0;
    ambient.h2_torsion_free = true;
    ambient.intersection_form_odd = false;

    ComplementPresentation complement(
        h1_y, /*i1_mu=*/{1, 0}, /*i1_g1=*/{0, 0}, /*i1_g2=*/{0, 1},
        std::vector<IntVec>{{1, 0, 0}, {0, 0, 1}},  // <a x b>, <mu x a>
        ambient);

    CatalogEntry e{
        .name = "trivial-knot",
        .description = "S1 x S3 with L = S1 x (trivial knot); surgeries give "
                       "L(1+pk, k) x S1",
        .complement = std::move(complement),
    };
    for (int p = -2; p <= 3; ++p)
        e.framings.emplace_back("phi" + std::to_string(p), phi_framing(p));

    e.expected_h1_x = FgAbGroup{1, {}};
    e.expected_ker_i1_rank = 1;
    e.expected_ker_i2_rank = 2;
    e.expected_ker_i1_basis = {{0, 1, 0}};
    e.expected_ker_i2_basis = {{1, 0, 0}, {0, 0, 1}};
    e.expected_surgeries = {
        {"phi2", SurgerySpec{1, 1, 1, 0}, FgAbGroup{1, {3}}},
        {"phi2", SurgerySpec{1, 0, 1, 0}, FgAbGroup{1, {}}},
        {"phi-1", SurgerySpec{1, 1, 1, 0}, FgAbGroup{2, {}}},
        {"phi0", SurgerySpec{1, 3, 1, 0}, FgAbGroup{1, {}}},
    };
    return e;
}

CatalogEntry entry_clifford() {
    // Y = CP2 minus a neighborhood of the Clifford torus a x b.
    // H1(Y) = Z with i1: mu -> generator, a -> 0, b -> 0.
    Presentation h1_y(1, IntMatrix(0, 1));
    AmbientData ambient;
    ambient.l_class_status = LClassStatus::null_homologous_integral;
    ambient.b2 = 1;
    ambient.b_plus = 1;
    ambient.signature = 1;
    ambient.euler = 3;
    ambient.h2_torsion_free = true;
    ambient.intersection_form_odd = true;
    ambient.kappa = Kappa::minus_infinity;

    ComplementPresentation complement(h1_y, /*i1_mu=*/{1}, /*i1_g1=*/{0},
                                      /*i1_g2=*/{0},
                                      std::vector<IntVec>{{1, 0, 0}},  // <a x b>
                                      ambient);

    CatalogEntry e{
        .name = "clifford",
        .description = "Clifford torus in CP2",
        .complement = std::move(complement),
    };
    e.framings.emplace_back("lagrangian", Framing::standard());

    e.expected_h1_x = FgAbGroup{0, {}};
    e.expected_ker_i1_rank = 2;
    e.expected_ker_i2_rank = 1;
    e.expected_ker_i1_basis = {{0, 1, 0}, {0, 0, 1}};
    e.expected_ker_i2_basis = {{1, 0, 0}};
    e.expected_surgeries = {
        {"lagrangian", SurgerySpec{1, 1, 1, 0}, FgAbGroup{0, {}}},
        {"lagrangian", SurgerySpec{1, -2, 0, 1}, FgAbGroup{0, {}}},
    };
    return e;
}

CatalogEntry entry_general_knot(const std::string& knot_label) {
    CatalogEntry e = entry_trivial_knot();
    e.name = "knot-" + knot_label;
    e.description = "S1 x S3 with L = S1 x (" + knot_label +
                    "); homologically identical to the trivial-knot entry";
    return e;
}

std::vector<CatalogEntry> all_entries() {
    std::vector<CatalogEntry> out;
    out.push_back(entry_trivial_knot());
    out.push_back(entry_clifford());
    out.push_back(entry_general_knot("trefoil"));
    return out;
}

CatalogEntry find_entry(const std::string& name) {
    for (CatalogEntry& e : all_entries())
        if (e.name == name) return e;
    throw Error(ErrorKind::missing_data, "no catalog entry named '" + name + "'");
}

}  // namespace torsur
