#include "padicsum/linear_solve.hpp"

#include <stdexcept>
#include <utility>

namespace padicsum {

std::vector<BigRational> solve_linear(RatMatrix a, std::vector<BigRational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw std::invalid_argument("right-hand side size mismatch");
    }
    for (const auto& row : a) {
        if (row.size() != n) {
            throw std::invalid_argument("matrix is not square");
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw std::domain_error("singular linear system");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);

        BigRational inv = a[col][col].reciprocal();
        for (std::size_t k = col; k < n; ++k) {
            a[col][k] *= inv;
        }
        b[col] *= inv;

        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            BigRational factor = a[row][col];
            for (std::size_t k = col; k < n; ++k) {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    return b;
}

}  // namespace padicsum
