#include "phaserank/phase_matrix.hpp"

#include <string>

#include "phaserank/errors.hpp"

namespace phaserank {

PhaseMatrix::PhaseMatrix(std::size_t rows, std::size_t cols, std::vector<Angle> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DomainError("phase matrix must have at least one row and one column");
    if (entries_.size() != rows * cols) {
        throw DomainError("phase matrix expects " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(entries_.size()));
    }
}

PhaseMatrix PhaseMatrix::filled(std::size_t rows, std::size_t cols, Angle value) {
    return PhaseMatrix(rows, cols, std::vector<Angle>(rows * cols, value));
}

PhaseMatrix PhaseMatrix::from_complex(const ComplexMatrix& m) {
    std::vector<Angle> e;
    e.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) e.push_back(arg_of(m(i, j)));
    return PhaseMatrix(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()), std::move(e));
}

PhaseMatrix PhaseMatrix::from_pi_units(const std::vector<std::vector<double>>& units) {
    if (units.empty() || units.front().empty()) throw DomainError("phase matrix must be nonempty");
    const std::size_t cols = units.front().size();
    std::vector<Angle> e;
    for (const auto& row : units) {
        if (row.size() != cols) throw DomainError("ragged phase matrix rows");
        for (double u : row) e.emplace_back(kPi * u);
    }
    return PhaseMatrix(units.size(), cols, std::move(e));
}

std::vector<Angle> PhaseMatrix::column(std::size_t j) const {
    std::vector<Angle> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

ComplexMatrix PhaseMatrix::to_complex() const {
    ComplexMatrix m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = unit(i, j);
    return m;
}

PhaseMatrix PhaseMatrix::without_row(std::size_t r) const {
    if (rows_ < 2) throw DomainError("cannot delete the only row");
    std::vector<Angle> e;
    e.reserve((rows_ - 1) * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        auto rw = row(i);
        e.insert(e.end(), rw.begin(), rw.end());
    }
    return PhaseMatrix(rows_ - 1, cols_, std::move(e));
}

PhaseMatrix PhaseMatrix::with_rows_swapped(std::size_t a, std::size_t b) const {
    PhaseMatrix out = *this;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(out.entries_[a * cols_ + j], out.entries_[b * cols_ + j]);
    return out;
}

PhaseMatrix PhaseMatrix::transposed() const {
    std::vector<Angle> e(entries_.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = (*this)(i, j);
    return PhaseMatrix(cols_, rows_, std::move(e));
}

PhaseMatrix PhaseMatrix::permuted(std::span<const std::size_t> row_order,
                                  std::span<const std::size_t> col_order) const {
    if (row_order.size() != rows_ || col_order.size() != cols_) throw DomainError("permutation size mismatch");
    std::vector<Angle> e(entries_.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) e[i * cols_ + j] = (*this)(row_order[i], col_order[j]);
    return PhaseMatrix(rows_, cols_, std::move(e));
}

PhaseMatrix PhaseMatrix::scaled(std::span<const Angle> row_phase, std::span<const Angle> col_phase) const {
    if (row_phase.size() != rows_ || col_phase.size() != cols_) throw DomainError("scaling size mismatch");
    std::vector<Angle> e(entries_.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) e[i * cols_ + j] = (*this)(i, j) + row_phase[i] + col_phase[j];
    return PhaseMatrix(rows_, cols_, std::move(e));
}

}  // namespace phaserank
