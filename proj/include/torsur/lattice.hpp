#pragma once

#include <torsur/snf.hpp>

#include <optional>
#include <vector>

namespace torsur {

// Subgroup of Z^n given by a basis of linearly independent integer vectors.
// The stored basis is always the row Hermite normal form, so two equal
// lattices compare equal syntactically.
class Lattice {
public:
    explicit Lattice(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    // Span of arbitrary generators (dependent or zero vectors allowed).
    static Lattice from_generators(std::size_t ambient_dim,
                                   const std::vector<IntVec>& generators);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<IntVec>& basis() const { return basis_; }

    // Coefficients of v in the stored basis, if v lies in the lattice.
    std::optional<IntVec> membership(const IntVec& v) const;
    bool contains(const IntVec& v) const { return membership(v).has_value(); }
    bool contains(const Lattice& other) const;

    // v in the Q-span of the lattice?
    bool contains_rationally(const IntVec& v) const;
    bool contains_rationally(const Lattice& other) const;

    // Smallest lattice L' >= L with Z^n / L' torsion free. Same rank.
    Lattice saturate() const;

    // Lattice generated by this and other.
    Lattice sum(const Lattice& other) const;

    // Saturated lattice of integer vectors annihilating every basis vector
    // under the dot product.
    Lattice annihilator() const;

    bool operator==(const Lattice&) const = default;

private:
    std::size_t ambient_dim_;
    std::vector<IntVec> basis_;  // Hermite normal form, no zero rows
};

}  // namespace torsur
