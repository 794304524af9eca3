#pragma once

#include <torsur/snf.hpp>

#include <string>
#include <vector>

namespace torsur {

// Canonical form of a finitely generated abelian group:
// Z^free_rank + Z/d_1 + ... + Z/d_t with 2 <= d_1 | d_2 | ... | d_t.
// Equality of canonical forms is isomorphism.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbGroup&) const = default;

    // "Z^r + Z/d1 + ... + Z/dt"; "0" for the trivial group
    std::string to_string() const;
};

// Presentation of an abelian group: Z^n modulo the row span of `relations`.
struct Presentation {
    std::size_t n_generators = 0;
    IntMatrix relations;  // rows are relations; may have zero rows

    Presentation() = default;
    Presentation(std::size_t n, IntMatrix rels);
};

FgAbGroup group_from_presentation(const Presentation& p);
FgAbGroup group_from_presentation(std::size_t n_generators, const IntMatrix& relations);

// Quotient by the cyclic subgroup generated by v: append v as a relation.
FgAbGroup quotient_by_element(const Presentation& p, const IntVec& v);

}  // namespace torsur
