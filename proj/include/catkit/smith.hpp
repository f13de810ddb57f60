#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace catkit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact arbitrary-precision entries.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> data; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    BigInt& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    static IntMatrix identity(int n);
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithResult {
    std::vector<BigInt> diagonal; // d_1 | d_2 | ... | d_rank, all positive
    int rank = 0;
    // U * A * V = S with U, V unimodular (filled when transforms requested)
    IntMatrix left;
    IntMatrix right;
};

/// Smith normal form by unimodular row/column reduction.
SmithResult smith_normal_form(IntMatrix a, bool want_transforms = false);

/// Basis of the integer kernel lattice of A (as matrix columns); the basis
/// is saturated (spans all integer solutions of A x = 0).
IntMatrix kernel_basis(const IntMatrix& a);

/// Basis of the column lattice spanned by the columns of A (zero columns
/// dropped); columns of the result are independent.
IntMatrix column_lattice_basis(const IntMatrix& a);

/// Solves U * W = B exactly where the columns of U are independent and every
/// column of B lies in their integer span.  Throws if no integer solution.
IntMatrix solve_in_basis(const IntMatrix& u, const IntMatrix& b);

/// |det| of a square matrix via its Smith diagonal (0 if rank-deficient).
BigInt abs_determinant(const IntMatrix& a);

} // namespace catkit
