#include "splitloci/rational_linalg.hpp"

#include <utility>

namespace splitloci {

std::size_t rref(QMatrix& m) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pivot_row)
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        const mpq_class inv = 1 / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == pivot_row || m.at(i, col) == 0) continue;
            const mpq_class factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t rank(QMatrix m) { return rref(m); }

std::vector<std::vector<mpq_class>> nullspace(QMatrix m) {
    const std::size_t r = rref(m);
    std::vector<std::size_t> pivot_col_of_row(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t col = 0;
        while (col < m.cols && m.at(i, col) == 0) ++col;
        pivot_col_of_row[i] = col;
        is_pivot[col] = true;
    }
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<mpq_class> v(m.cols, mpq_class{0});
        v[free_col] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivot_col_of_row[i]] = -m.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace splitloci
