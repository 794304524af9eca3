#include <torsur/abelian.hpp>

#include <sstream>

namespace torsur {

std::string FgAbGroup::to_string() const {
    if (free_rank == 0 && torsion.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    return out.str();
}

Presentation::Presentation(std::size_t n, IntMatrix rels)
    : n_generators(n), relations(std::move(rels)) {
    if (relations.rows() > 0 && relations.cols() != n)
        throw Error(ErrorKind::dimension,
                    "relation matrix column count does not match generator count");
    if (relations.rows() == 0) relations = IntMatrix(0, n);
}

FgAbGroup group_from_presentation(const Presentation& p) {
    FgAbGroup g;
    if (p.relations.rows() == 0) {
        g.free_rank = p.n_generators;
        return g;
    }
    SnfResult snf = smith_normal_form(p.relations);
    g.free_rank = p.n_generators - snf.rank;
    for (std::size_t i = 0; i < snf.rank; ++i) {
        const Int& d = snf.d.at(i, i);
        if (d >= 2) g.torsion.push_back(d);  // d == 1 kills a generator outright
    }
    return g;
}

FgAbGroup group_from_presentation(std::size_t n_generators, const IntMatrix& relations) {
    return group_from_presentation(Presentation(n_generators, relations));
}

FgAbGroup quotient_by_element(const Presentation& p, const IntVec& v) {
    if (v.size() != p.n_generators)
        throw Error(ErrorKind::dimension, "quotient element has wrong length");
    Presentation q = p;
    q.relations.append_row(v);
    return group_from_presentation(q);
}

}  // namespace torsur
