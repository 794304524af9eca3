#pragma once

#include <torsur/kodaira.hpp>
#include <torsur/surgery.hpp>

#include <string>
#include <utility>
#include <vector>

namespace torsur {

struct ExpectedSurgery {
    std::string framing;
    SurgerySpec spec;
    FgAbGroup h1_after;
};

// A built-in instance with precomputed expected values. Every expected
// value is recomputed by the test suite; nothing here is trusted as-is.
struct CatalogEntry {
    std::string name;
    std::string description;
    ComplementPresentation complement;
    std::vector<std::pair<std::string, Framing>> framings;

    FgAbGroup expected_h1_x;
    std::size_t expected_ker_i1_rank = 0;
    std::size_t expected_ker_i2_rank = 0;
    std::vector<IntVec> expected_ker_i1_basis;
    std::vector<IntVec> expected_ker_i2_basis;
    std::vector<ExpectedSurgery> expected_surgeries;

    const Framing& framing(const std::string& name) const;
};

// H1 of the lens-space family: Z_{|1+kp|} + Z, where a vanishing torsion
// coefficient degenerates to an extra free factor (L(0,k) = S2 x S1).
FgAbGroup lens_family_h1(const Int& p, const Int& k);

// phi_p: subgroup generated by p*mu + g1 and g2.
Framing phi_framing(const Int& p);

// S1 x S3 with the torus S1 x (trivial knot); knot-surgery building block.
CatalogEntry entry_trivial_knot();

// Clifford torus in CP2.
CatalogEntry entry_clifford();

// Any knot complement crossed with S1 has the same homological shadow as
// the trivial one; the label only records which knot for documentation.
CatalogEntry entry_general_knot(const std::string& knot_label);

std::vector<CatalogEntry> all_entries();
CatalogEntry find_entry(const std::string& name);

}  // namespace torsur
