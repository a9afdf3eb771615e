#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace splitloci {

/// Dense row-major matrix over exact rationals.
struct QMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<mpq_class> data;

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, mpq_class{0}) {}

    mpq_class& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// In-place reduced row echelon form; returns the rank. Exact: no pivots are
/// lost to rounding, so rank and nullspace are field-exact answers.
std::size_t rref(QMatrix& m);

std::size_t rank(QMatrix m);

/// Canonical nullspace basis from the RREF: one vector per free column in
/// ascending column order, with a 1 in the free coordinate.
std::vector<std::vector<mpq_class>> nullspace(QMatrix m);

}  // namespace splitloci
