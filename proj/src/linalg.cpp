#include "msplab/linalg.hpp"

#include <stdexcept>

namespace msplab {

std::vector<int> rref(Matrix& m, int ncols) {
    std::vector<int> piv;
    int rows = static_cast<int>(m.size());
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m[i][c])) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < m[i].size(); ++j)
                if (!is_zero(m[r][j])) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

// fraction-free (Bareiss) echelon form over Z, then back substitution over Q
std::optional<std::vector<Rat>> solve_linear(const Matrix& A, const std::vector<Rat>& b, int* rank) {
    int rows = static_cast<int>(A.size());
    int n = A.empty() ? 0 : static_cast<int>(A[0].size());
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(n + 1));
    for (int i = 0; i < rows; ++i) {
        mpz_class l = b[i].get_den();
        for (int j = 0; j < n; ++j) l = lcm(l, A[i][j].get_den());
        for (int j = 0; j < n; ++j) m[i][j] = A[i][j].get_num() * (l / A[i][j].get_den());
        m[i][n] = b[i].get_num() * (l / b[i].get_den());
    }
    std::vector<int> piv;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < n && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[r], m[sel]);
        const mpz_class& p = m[r][c];
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j <= n; ++j) {
                m[i][j] = p * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = p;
        piv.push_back(c);
        ++r;
    }
    if (rank) *rank = r;
    for (int i = r; i < rows; ++i)
        if (m[i][n] != 0) return std::nullopt;
    std::vector<Rat> x(n);
    for (int i = r - 1; i >= 0; --i) {
        int c = piv[i];
        Rat v = m[i][n];
        for (size_t k = i + 1; k < piv.size(); ++k) v -= Rat(m[i][piv[k]]) * x[piv[k]];
        x[c] = v / Rat(m[i][c]);
    }
    return x;
}

Matrix invert(const Matrix& A) {
    int n = static_cast<int>(A.size());
    Matrix m = A;
    for (int i = 0; i < n; ++i) {
        m[i].resize(2 * n);
        m[i][n + i] = 1;
    }
    auto piv = rref(m, n);
    if (static_cast<int>(piv.size()) < n) throw std::domain_error("singular matrix");
    Matrix out(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

}  // namespace msplab
