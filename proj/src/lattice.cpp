#include <torsur/lattice.hpp>

namespace torsur {

namespace {

// In-place row Hermite normal form. Returns the echelon rows (zero rows
// dropped), pivots positive, entries above each pivot reduced mod pivot.
std::vector<IntVec> hermite_rows(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // euclidean elimination in column c below row r
        for (;;) {
            std::size_t piv = m;
            for (std::size_t i = r; i < m; ++i)
                if (a.at(i, c) != 0 &&
                    (piv == m || abs_int(a.at(i, c)) < abs_int(a.at(piv, c))))
                    piv = i;
            if (piv == m) break;  // column clear
            a.swap_rows(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a.at(i, c) == 0) continue;
                Int q = a.at(i, c) / a.at(r, c);
                a.add_row_multiple(i, r, -q);
                if (a.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(r, c) == 0) continue;
        if (a.at(r, c) < 0) a.negate_row(r);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q = a.at(i, c) / a.at(r, c);
            if (a.at(i, c) - q * a.at(r, c) < 0) q -= 1;  // floor division
            if (q != 0) a.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    std::vector<IntVec> rows;
    rows.reserve(r);
    for (std::size_t i = 0; i < r; ++i) rows.push_back(a.row(i));
    return rows;
}

std::size_t pivot_col(const IntVec& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return j;
    return row.size();
}

}  // namespace

Lattice Lattice::from_generators(std::size_t ambient_dim,
                                 const std::vector<IntVec>& generators) {
    Lattice l(ambient_dim);
    if (generators.empty()) return l;
    l.basis_ = hermite_rows(IntMatrix::from_rows(generators, ambient_dim));
    return l;
}

std::optional<IntVec> Lattice::membership(const IntVec& v) const {
    if (v.size() != ambient_dim_)
        throw Error(ErrorKind::dimension, "vector dimension does not match lattice");
    IntVec rem = v;
    IntVec coeffs(basis_.size(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        std::size_t p = pivot_col(basis_[i]);
        if (rem[p] == 0) continue;
        if (rem[p] % basis_[i][p] != 0) return std::nullopt;
        Int c = rem[p] / basis_[i][p];
        for (std::size_t j = 0; j < ambient_dim_; ++j) rem[j] -= c * basis_[i][j];
        coeffs[i] = c;
    }
    if (!is_zero(rem)) return std::nullopt;
    return coeffs;
}

bool Lattice::contains(const Lattice& other) const {
    for (const IntVec& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

bool Lattice::contains_rationally(const IntVec& v) const {
    if (v.size() != ambient_dim_)
        throw Error(ErrorKind::dimension, "vector dimension does not match lattice");
    IntMatrix stacked = IntMatrix::from_rows(basis_, ambient_dim_);
    std::size_t base_rank = stacked.rows() ? stacked.rank() : 0;
    stacked.append_row(v);
    return stacked.rank() == base_rank;
}

bool Lattice::contains_rationally(const Lattice& other) const {
    for (const IntVec& v : other.basis_)
        if (!contains_rationally(v)) return false;
    return true;
}

Lattice Lattice::saturate() const {
    if (basis_.empty()) return *this;
    // U*B*V = D, so rowspan(B) = rowspan(D * V^{-1}); dividing out the
    // diagonal leaves the first rank rows of V^{-1}, which span the saturation.
    SnfResult snf = smith_normal_form(IntMatrix::from_rows(basis_, ambient_dim_));
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < snf.rank; ++i) gens.push_back(snf.v_inv.row(i));
    return from_generators(ambient_dim_, gens);
}

Lattice Lattice::sum(const Lattice& other) const {
    if (other.ambient_dim_ != ambient_dim_)
        throw Error(ErrorKind::dimension, "lattice sum dimension mismatch");
    std::vector<IntVec> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return from_generators(ambient_dim_, gens);
}

Lattice Lattice::annihilator() const {
    if (basis_.empty()) {
        // everything annihilates the zero lattice
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < ambient_dim_; ++i) {
            IntVec e(ambient_dim_, 0);
            e[i] = 1;
            gens.push_back(e);
        }
        return from_generators(ambient_dim_, gens);
    }
    // Right kernel of the basis matrix: columns of V past the rank. The
    // kernel of a map is saturated automatically.
    SnfResult snf = smith_normal_form(IntMatrix::from_rows(basis_, ambient_dim_));
    std::vector<IntVec> gens;
    for (std::size_t j = snf.rank; j < ambient_dim_; ++j) {
        IntVec col(ambient_dim_);
        for (std::size_t i = 0; i < ambient_dim_; ++i) col[i] = snf.v.at(i, j);
        gens.push_back(col);
    }
    return from_generators(ambient_dim_, gens);
}

}  // namespace torsur
