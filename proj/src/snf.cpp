#include <torsur/snf.hpp>

namespace torsur {

namespace {

struct Worker {
    IntMatrix a, u, v, v_inv;

    explicit Worker(const IntMatrix& m)
        : a(m),
          u(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          v_inv(IntMatrix::identity(m.cols())) {}

    void row_swap(std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
    }
    void row_add(std::size_t dst, std::size_t src, const Int& c) {
        a.add_row_multiple(dst, src, c);
        u.add_row_multiple(dst, src, c);
    }
    void row_negate(std::size_t i) {
        a.negate_row(i);
        u.negate_row(i);
    }
    void col_swap(std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& c) {
        a.add_col_multiple(dst, src, c);
        v.add_col_multiple(dst, src, c);
        v_inv.add_row_multiple(src, dst, -c);
    }

    // smallest nonzero |entry| in the submatrix with corner (t,t)
    bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                const Int& e = a.at(i, j);
                if (e == 0) continue;
                if (!found || abs_int(e) < best) {
                    found = true;
                    best = abs_int(e);
                    pr = i;
                    pc = j;
                }
            }
        return found;
    }

    // true once row t and column t are zero outside the pivot
    bool cleared(std::size_t t) const {
        for (std::size_t i = t + 1; i < a.rows(); ++i)
            if (a.at(i, t) != 0) return false;
        for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a.at(t, j) != 0) return false;
        return true;
    }
};

// quotient rounded to nearest, so remainders satisfy |r| <= |d|/2
Int div_round(const Int& a, const Int& d) {
    Int q = a / d;
    Int r = a - q * d;
    if (2 * abs_int(r) > abs_int(d)) q += ((r < 0) == (d < 0)) ? 1 : -1;
    return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    Worker w(m);
    const std::size_t steps = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pr, pc;
        if (!w.find_pivot(t, pr, pc)) break;  // submatrix is zero

        // Every pass re-selects the smallest entry as pivot, so any nonzero
        // remainder strictly shrinks the submatrix minimum and entry growth
        // stays tame.
        for (;;) {
            w.find_pivot(t, pr, pc);
            w.row_swap(t, pr);
            w.col_swap(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
                if (w.a.at(i, t) == 0) continue;
                Int q = div_round(w.a.at(i, t), w.a.at(t, t));
                if (q != 0) w.row_add(i, t, -q);
                if (w.a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
                if (w.a.at(t, j) == 0) continue;
                Int q = div_round(w.a.at(t, j), w.a.at(t, t));
                if (q != 0) w.col_add(j, t, -q);
                if (w.a.at(t, j) != 0) clean = false;
            }
            if (!clean || !w.cleared(t)) continue;

            // divisibility: fold in any entry the pivot does not divide
            bool fixed = true;
            for (std::size_t i = t + 1; i < w.a.rows() && fixed; ++i)
                for (std::size_t j = t + 1; j < w.a.cols() && fixed; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (w.a.at(t, t) < 0) w.row_negate(t);
    }

    SnfResult out;
    out.rank = 0;
    for (std::size_t t = 0; t < steps; ++t)
        if (w.a.at(t, t) != 0) ++out.rank;
    out.u = std::move(w.u);
    out.d = std::move(w.a);
    out.v = std::move(w.v);
    out.v_inv = std::move(w.v_inv);
    return out;
}

}  // namespace torsur
