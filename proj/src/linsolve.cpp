#include "heunfg/linsolve.hpp"

namespace heunfg {

std::vector<AField> exact_linear_solve(const ExactMatrix& A, const std::vector<UPoly>& b) {
    if (A.rows < A.cols)
        throw std::invalid_argument("exact_linear_solve: fewer rows than columns");
    if (b.size() != A.rows)
        throw std::invalid_argument("exact_linear_solve: rhs size mismatch");

    const size_t r = A.rows, c = A.cols;
    // augmented working copy
    std::vector<std::vector<UPoly>> M(r, std::vector<UPoly>(c + 1));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < c; ++j) M[i][j] = A.at(i, j);
        M[i][c] = b[i];
    }

    std::vector<size_t> pivot_col;
    UPoly prev{Rational(1)};
    size_t p = 0;  // next pivot row
    bool underdetermined = false;
    for (size_t col = 0; col < c && p < r; ++col) {
        size_t best = r;
        for (size_t i = p; i < r; ++i) {
            if (M[i][col].is_zero()) continue;
            if (best == r || M[i][col].degree() < M[best][col].degree()) best = i;
        }
        if (best == r) {
            underdetermined = true;
            continue;
        }
        std::swap(M[p], M[best]);
        const UPoly& piv = M[p][col];
        for (size_t i = p + 1; i < r; ++i) {
            if (M[i][col].is_zero()) {
                // still rescale the row per Bareiss bookkeeping
                for (size_t j = col + 1; j <= c; ++j)
                    M[i][j] = (piv * M[i][j]).divide_exact(prev);
            } else {
                for (size_t j = col + 1; j <= c; ++j)
                    M[i][j] = (piv * M[i][j] - M[i][col] * M[p][j]).divide_exact(prev);
            }
            M[i][col] = UPoly();
        }
        prev = piv;
        pivot_col.push_back(col);
        ++p;
    }

    for (size_t i = p; i < r; ++i) {
        if (!M[i][c].is_zero())
            throw LinSolveError(LinSolveError::Kind::Inconsistent,
                                "exact_linear_solve: inconsistent system");
    }
    if (underdetermined || pivot_col.size() < c)
        throw LinSolveError(LinSolveError::Kind::Underdetermined,
                            "exact_linear_solve: solution space has positive dimension");

    std::vector<AField> x(c);
    for (size_t k = pivot_col.size(); k-- > 0;) {
        size_t col = pivot_col[k];
        AField s{M[k][c]};
        for (size_t j = col + 1; j < c; ++j) s -= AField(M[k][j]) * x[j];
        x[col] = s / AField(M[k][col]);
    }
    return x;
}

UPoly bareiss_determinant(const ExactMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("bareiss_determinant: not square");
    const size_t n = A.rows;
    if (n == 0) return UPoly(Rational(1));
    std::vector<std::vector<UPoly>> M(n, std::vector<UPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M[i][j] = A.at(i, j);

    UPoly prev{Rational(1)};
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t swap_row = n;
            for (size_t i = k + 1; i < n; ++i) {
                if (!M[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == n) return UPoly();
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]).divide_exact(prev);
            M[i][k] = UPoly();
        }
        prev = M[k][k];
    }
    UPoly det = M[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

std::vector<UPoly> charpoly(const ExactMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("charpoly: not square");
    const size_t n = A.rows;
    std::vector<UPoly> c(n + 1);
    c[0] = UPoly(Rational(1));
    if (n == 0) return c;

    auto matmul = [n](const std::vector<UPoly>& X, const ExactMatrix& Y) {
        std::vector<UPoly> R(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                const UPoly& x = X[i * n + k];
                if (x.is_zero()) continue;
                for (size_t j = 0; j < n; ++j) R[i * n + j] += x * Y.at(k, j);
            }
        return R;
    };

    // M_1 = A; c_k = -tr(M_k)/k; M_{k+1} = A (M_k + c_k I)
    std::vector<UPoly> M(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M[i * n + j] = A.at(i, j);
    for (size_t k = 1; k <= n; ++k) {
        UPoly tr;
        for (size_t i = 0; i < n; ++i) tr += M[i * n + i];
        c[k] = tr.scaled(Rational(-1, static_cast<long>(k)));
        if (k == n) break;
        for (size_t i = 0; i < n; ++i) M[i * n + i] += c[k];
        M = matmul(M, A);
    }
    return c;
}

}  // namespace heunfg
