#pragma once

#include <stdexcept>
#include <vector>

#include "heunfg/afield.hpp"
#include "heunfg/upoly.hpp"

namespace heunfg {

/// Rectangular matrix with entries in Q[a] (or any univariate polynomial
/// ring over Q; the variable is whatever the caller means by it).
struct ExactMatrix {
    size_t rows = 0, cols = 0;
    std::vector<UPoly> data;  // row-major

    ExactMatrix() = default;
    ExactMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}
    UPoly& at(size_t i, size_t j) { return data[i * cols + j]; }
    const UPoly& at(size_t i, size_t j) const { return data[i * cols + j]; }
};

class LinSolveError : public std::runtime_error {
public:
    enum class Kind { Inconsistent, Underdetermined };
    LinSolveError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

/// Solves A x = b exactly over the fraction field, by fraction-free
/// (Bareiss) elimination: intermediate entries stay polynomial.  The pivot
/// in each column is the lowest-degree nonzero entry, ties broken by row
/// index.  Requires rows >= cols.  Throws LinSolveError on inconsistent or
/// underdetermined systems.
std::vector<AField> exact_linear_solve(const ExactMatrix& A, const std::vector<UPoly>& b);

/// Fraction-free determinant of a square matrix.
UPoly bareiss_determinant(const ExactMatrix& A);

/// Characteristic polynomial det(t I - A) by Faddeev-LeVerrier; returns the
/// coefficients c_0..c_n of t^n + c_1 t^{n-1} + ... + c_n with c_0 = 1.
std::vector<UPoly> charpoly(const ExactMatrix& A);

}  // namespace heunfg
