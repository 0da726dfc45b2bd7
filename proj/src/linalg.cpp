#include "jl/linalg.hpp"

namespace jl {

int rref(QMat& m, std::vector<int>* pivots) {
    if (pivots) pivots->clear();
    if (m.empty()) return 0;
    std::size_t ncols = 0;
    for (auto& r : m) ncols = std::max(ncols, r.size());
    for (auto& r : m) r.resize(ncols, Rat(0));

    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Rat inv = 1 / m[row][col];
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        if (pivots) pivots->push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return static_cast<int>(row);
}

int rank(QMat m) { return rref(m); }

QMat nullspace(QMat m, int ncols) {
    for (auto& r : m) r.resize(static_cast<std::size_t>(ncols), Rat(0));
    std::vector<int> pivots;
    int r = rref(m, &pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    QMat basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVec v(static_cast<std::size_t>(ncols), Rat(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = -m[static_cast<std::size_t>(i)][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(QMat m, QVec b, int ncols) {
    for (auto& r : m) r.resize(static_cast<std::size_t>(ncols), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(i < b.size() ? b[i] : Rat(0));
    std::vector<int> pivots;
    int r = rref(m, &pivots);
    QVec x(static_cast<std::size_t>(ncols), Rat(0));
    for (int i = 0; i < r; ++i) {
        if (pivots[static_cast<std::size_t>(i)] == ncols) return std::nullopt;  // pivot in augmented column
        x[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = m[static_cast<std::size_t>(i)].back();
    }
    return x;
}

}  // namespace jl
