#include "catkit/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace catkit {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

namespace {

void swap_rows(IntMatrix& a, IntMatrix* u, int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < a.cols; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    if (u)
        for (int j = 0; j < u->cols; ++j) std::swap(u->at(r1, j), u->at(r2, j));
}

void swap_cols(IntMatrix& a, IntMatrix* v, int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < a.rows; ++i) std::swap(a.at(i, c1), a.at(i, c2));
    if (v)
        for (int i = 0; i < v->rows; ++i) std::swap(v->at(i, c1), v->at(i, c2));
}

// row r1 -= q * row r2
void add_row(IntMatrix& a, IntMatrix* u, int r1, int r2, const BigInt& q) {
    if (q == 0) return;
    for (int j = 0; j < a.cols; ++j) a.at(r1, j) -= q * a.at(r2, j);
    if (u)
        for (int j = 0; j < u->cols; ++j) u->at(r1, j) -= q * u->at(r2, j);
}

// col c1 -= q * col c2
void add_col(IntMatrix& a, IntMatrix* v, int c1, int c2, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < a.rows; ++i) a.at(i, c1) -= q * a.at(i, c2);
    if (v)
        for (int i = 0; i < v->rows; ++i) v->at(i, c1) -= q * v->at(i, c2);
}

void negate_row(IntMatrix& a, IntMatrix* u, int r) {
    for (int j = 0; j < a.cols; ++j) a.at(r, j) = -a.at(r, j);
    if (u)
        for (int j = 0; j < u->cols; ++j) u->at(r, j) = -u->at(r, j);
}

} // namespace

SmithResult smith_normal_form(IntMatrix a, bool want_transforms) {
    SmithResult result;
    IntMatrix u = IntMatrix::identity(a.rows);
    IntMatrix v = IntMatrix::identity(a.cols);
    IntMatrix* up = want_transforms ? &u : nullptr;
    IntMatrix* vp = want_transforms ? &v : nullptr;

    int t = 0;
    const int bound = std::min(a.rows, a.cols);
    while (t < bound) {
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int i = t; i < a.rows; ++i)
            for (int j = t; j < a.cols; ++j) {
                if (a.at(i, j) == 0) continue;
                BigInt mag = abs(a.at(i, j));
                if (pr < 0 || mag < best) {
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0) break;
        swap_rows(a, up, t, pr);
        swap_cols(a, vp, t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < a.rows; ++i) {
                if (a.at(i, t) == 0) continue;
                BigInt q = a.at(i, t) / a.at(t, t);
                add_row(a, up, i, t, q);
                if (a.at(i, t) != 0) {
                    swap_rows(a, up, t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < a.cols; ++j) {
                if (a.at(t, j) == 0) continue;
                BigInt q = a.at(t, j) / a.at(t, t);
                add_col(a, vp, j, t, q);
                if (a.at(t, j) != 0) {
                    swap_cols(a, vp, t, j);
                    clean = false;
                }
            }
        }
        if (a.at(t, t) < 0) negate_row(a, up, t);
        ++t;
    }
    result.rank = t;

    // repair divisibility d_i | d_{i+1}
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < result.rank; ++i) {
            if (a.at(i + 1, i + 1) % a.at(i, i) == 0) continue;
            changed = true;
            add_col(a, vp, i, i + 1, BigInt(-1));
            bool clean = false;
            while (!clean) {
                clean = true;
                if (a.at(i + 1, i) != 0) {
                    BigInt q = a.at(i + 1, i) / a.at(i, i);
                    add_row(a, up, i + 1, i, q);
                    if (a.at(i + 1, i) != 0) {
                        swap_rows(a, up, i, i + 1);
                        clean = false;
                    }
                }
                if (a.at(i, i + 1) != 0) {
                    BigInt q = a.at(i, i + 1) / a.at(i, i);
                    add_col(a, vp, i + 1, i, q);
                    if (a.at(i, i + 1) != 0) {
                        swap_cols(a, vp, i, i + 1);
                        clean = false;
                    }
                }
            }
            if (a.at(i, i) < 0) negate_row(a, up, i);
            if (a.at(i + 1, i + 1) < 0) {
                // flip sign via the column to keep row ops clean
                for (int r = 0; r < a.rows; ++r)
                    a.at(r, i + 1) = -a.at(r, i + 1);
                if (vp)
                    for (int r = 0; r < vp->rows; ++r)
                        vp->at(r, i + 1) = -vp->at(r, i + 1);
            }
        }
    }

    for (int i = 0; i < result.rank; ++i) result.diagonal.push_back(a.at(i, i));
    if (want_transforms) {
        result.left = std::move(u);
        result.right = std::move(v);
    }
    return result;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a, true);
    // A * V has zero columns past the rank, and V is unimodular, so those
    // columns of V are a saturated basis of ker A.
    IntMatrix out(a.cols, a.cols - s.rank);
    for (int j = s.rank; j < a.cols; ++j)
        for (int i = 0; i < a.cols; ++i)
            out.at(i, j - s.rank) = s.right.at(i, j);
    return out;
}

IntMatrix column_lattice_basis(const IntMatrix& a) {
    IntMatrix m = a;
    int pivot_row = 0, pivot_col = 0;
    while (pivot_row < m.rows && pivot_col < m.cols) {
        int best = -1;
        for (int j = pivot_col; j < m.cols; ++j) {
            if (m.at(pivot_row, j) == 0) continue;
            if (best < 0 || abs(m.at(pivot_row, j)) < abs(m.at(pivot_row, best)))
                best = j;
        }
        if (best < 0) {
            ++pivot_row;
            continue;
        }
        swap_cols(m, nullptr, pivot_col, best);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int j = pivot_col + 1; j < m.cols; ++j) {
                if (m.at(pivot_row, j) == 0) continue;
                BigInt q = m.at(pivot_row, j) / m.at(pivot_row, pivot_col);
                add_col(m, nullptr, j, pivot_col, q);
                if (m.at(pivot_row, j) != 0) {
                    swap_cols(m, nullptr, pivot_col, j);
                    clean = false;
                }
            }
        }
        ++pivot_row;
        ++pivot_col;
    }
    std::vector<int> keep;
    for (int j = 0; j < m.cols; ++j) {
        bool nonzero = false;
        for (int i = 0; i < m.rows; ++i)
            if (m.at(i, j) != 0) nonzero = true;
        if (nonzero) keep.push_back(j);
    }
    IntMatrix out(m.rows, static_cast<int>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j)
        for (int i = 0; i < m.rows; ++i)
            out.at(i, static_cast<int>(j)) = m.at(i, keep[j]);
    return out;
}

IntMatrix solve_in_basis(const IntMatrix& u, const IntMatrix& b) {
    SmithResult s = smith_normal_form(u, true);
    if (s.rank != u.cols)
        throw std::logic_error("solve_in_basis: columns are not independent");
    // U = left^-1 S right^-1, so W = right * y where S y = left * b
    IntMatrix pb = multiply(s.left, b);
    IntMatrix y(u.cols, b.cols);
    for (int i = 0; i < u.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            if (i < s.rank) {
                if (pb.at(i, j) % s.diagonal[i] != 0)
                    throw std::logic_error("solve_in_basis: no integer solution");
                y.at(i, j) = pb.at(i, j) / s.diagonal[i];
            } else if (pb.at(i, j) != 0) {
                throw std::logic_error("solve_in_basis: inconsistent system");
            }
        }
    return multiply(s.right, y);
}

BigInt abs_determinant(const IntMatrix& a) {
    if (a.rows != a.cols) return 0;
    SmithResult s = smith_normal_form(a, false);
    if (s.rank < a.rows) return 0;
    BigInt det = 1;
    for (const BigInt& d : s.diagonal) det *= d;
    return det;
}

} // namespace catkit
