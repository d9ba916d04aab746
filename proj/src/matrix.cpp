#include "gspline/matrix.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gspline {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
    if (cols.empty()) return IntMatrix();
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows_)
            throw std::invalid_argument("from_columns: ragged column lengths");
        for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Int& IntMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
    return data_[r * cols_ + c];
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
    return data_[r * cols_ + c];
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
    std::vector<Int> col(rows_);
    for (std::size_t r = 0; r < rows_; ++r) col[r] = at(r, c);
    return col;
}

void IntMatrix::append_column(const std::vector<Int>& col) {
    if (rows_ == 0 && cols_ == 0) rows_ = col.size();
    if (col.size() != rows_) throw std::invalid_argument("append_column: length mismatch");
    std::vector<Int> next(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) next[r * (cols_ + 1) + c] = data_[r * cols_ + c];
        next[r * (cols_ + 1) + cols_] = col[r];
    }
    data_ = std::move(next);
    ++cols_;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

void IntMatrix::negate_column(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

namespace {

// Column echelon reduction on the top `elim_rows` rows of `m`. Rows below
// elim_rows ride along under the same column operations. Returns the number
// of pivot columns (moved to the front, pivot rows increasing).
std::size_t column_echelon(IntMatrix& m, std::size_t elim_rows) {
    std::size_t next = 0;
    for (std::size_t row = 0; row < elim_rows && next < m.cols(); ++row) {
        // Euclidean elimination among columns [next, cols) at this row,
        // always pivoting on the minimal-absolute-value nonzero entry.
        for (;;) {
            std::size_t piv = m.cols();
            for (std::size_t c = next; c < m.cols(); ++c) {
                if (m.at(row, c) == 0) continue;
                if (piv == m.cols() ||
                    mpz_cmpabs(m.at(row, c).get_mpz_t(), m.at(row, piv).get_mpz_t()) < 0)
                    piv = c;
            }
            if (piv == m.cols()) break;
            bool others = false;
            for (std::size_t c = next; c < m.cols(); ++c) {
                if (c == piv || m.at(row, c) == 0) continue;
                others = true;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), m.at(row, c).get_mpz_t(), m.at(row, piv).get_mpz_t());
                m.add_column_multiple(c, piv, -q);
            }
            if (!others) {
                m.swap_columns(next, piv);
                if (m.at(row, next) < 0) m.negate_column(next);
                // reduce the pivot row of earlier basis columns into [0, pivot)
                for (std::size_t c = 0; c < next; ++c) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), m.at(row, c).get_mpz_t(),
                               m.at(row, next).get_mpz_t());
                    if (q != 0) m.add_column_multiple(c, next, -q);
                }
                ++next;
                break;
            }
        }
    }
    return next;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& a) {
    IntMatrix work = a;
    std::size_t rank = column_echelon(work, work.rows());
    IntMatrix out(a.rows(), rank);
    for (std::size_t c = 0; c < rank; ++c)
        for (std::size_t r = 0; r < a.rows(); ++r) out.at(r, c) = work.at(r, c);
    return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    // Stack identity below A; kernel vectors are the bottom parts of the
    // columns whose top part reduced to zero.
    IntMatrix stacked(a.rows() + a.cols(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) stacked.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < a.cols(); ++c) stacked.at(a.rows() + c, c) = 1;

    std::size_t rank = column_echelon(stacked, a.rows());
    IntMatrix out(a.cols(), a.cols() - rank);
    for (std::size_t c = rank; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.cols(); ++r)
            out.at(r, c - rank) = stacked.at(a.rows() + r, c);
    return out;
}

namespace {

struct SnfState {
    IntMatrix a;
    IntMatrix u, v;  // row / column transforms
    bool track;

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void row_add(std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(dst, c) += q * a.at(src, c);
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += q * u.at(src, c);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
    void col_swap(std::size_t i, std::size_t j) {
        a.swap_columns(i, j);
        if (track) v.swap_columns(i, j);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& q) {
        a.add_column_multiple(dst, src, q);
        if (track) v.add_column_multiple(dst, src, q);
    }
};

std::vector<Int> snf_core(SnfState& s) {
    IntMatrix& a = s.a;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::vector<Int> d;
    std::size_t t = 0;
    while (t < nr && t < nc) {
        // locate the minimal-absolute-value nonzero entry in the submatrix
        std::size_t pr = nr, pc = nc;
        for (std::size_t r = t; r < nr; ++r)
            for (std::size_t c = t; c < nc; ++c) {
                if (a.at(r, c) == 0) continue;
                if (pr == nr ||
                    mpz_cmpabs(a.at(r, c).get_mpz_t(), a.at(pr, pc).get_mpz_t()) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr == nr) break;  // submatrix is zero
        s.row_swap(t, pr);
        s.col_swap(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < nr; ++r) {
                if (a.at(r, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(r, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                s.row_add(r, t, -q);
                if (a.at(r, t) != 0) {  // remainder became the smaller pivot
                    s.row_swap(t, r);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < nc; ++c) {
                if (a.at(t, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, c).get_mpz_t(), a.at(t, t).get_mpz_t());
                s.col_add(c, t, -q);
                if (a.at(t, c) != 0) {
                    s.col_swap(t, c);
                    clean = false;
                }
            }
        }
        if (a.at(t, t) < 0) s.row_negate(t);

        // enforce divisibility of the remaining submatrix by the pivot
        bool divides_all = true;
        for (std::size_t r = t + 1; r < nr && divides_all; ++r)
            for (std::size_t c = t + 1; c < nc; ++c)
                if (a.at(r, c) % a.at(t, t) != 0) {
                    s.row_add(t, r, Int(1));
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;  // redo position t

        d.push_back(a.at(t, t));
        ++t;
    }
    return d;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SnfState s{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), true};
    SmithDecomposition out;
    out.d = snf_core(s);
    out.u = std::move(s.u);
    out.v = std::move(s.v);
    out.has_transforms = true;
    return out;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
    SnfState s{a, IntMatrix(), IntMatrix(), false};
    return snf_core(s);
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    std::vector<Int> d = invariant_factors(a);
    if (d.size() < a.rows()) return 0;
    Int det = 1;
    for (const Int& x : d) det *= x;
    return det;
}

}  // namespace gspline
