#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "phaserank/angle.hpp"

namespace phaserank {

/// Dense complex matrix; witness outputs and numeric checks use this.
using ComplexMatrix = Eigen::MatrixXcd;

/// An n x m grid of unit-modulus entries, stored as angles (row-major).
/// Every entry is a proper phase; zero entries are not representable.
class PhaseMatrix {
public:
    PhaseMatrix(std::size_t rows, std::size_t cols, std::vector<Angle> entries);

    /// Constant matrix (every entry the same phase).
    static PhaseMatrix filled(std::size_t rows, std::size_t cols, Angle value = Angle{});

    /// Phases of a complex matrix; throws DomainError if any entry is 0.
    static PhaseMatrix from_complex(const ComplexMatrix& m);

    /// Entries given as multiples of pi: entry (i,j) is exp(i * pi * units[i][j]).
    static PhaseMatrix from_pi_units(const std::vector<std::vector<double>>& units);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    [[nodiscard]] Angle operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    [[nodiscard]] std::complex<double> unit(std::size_t i, std::size_t j) const { return (*this)(i, j).unit(); }
    [[nodiscard]] std::span<const Angle> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<const Angle> entries() const { return entries_; }

    /// The column j as a list of points.
    [[nodiscard]] std::vector<Angle> column(std::size_t j) const;

    [[nodiscard]] ComplexMatrix to_complex() const;

    [[nodiscard]] PhaseMatrix without_row(std::size_t i) const;
    [[nodiscard]] PhaseMatrix with_rows_swapped(std::size_t a, std::size_t b) const;
    [[nodiscard]] PhaseMatrix transposed() const;

    /// Row i of the result is row row_order[i] of this matrix, likewise for columns.
    [[nodiscard]] PhaseMatrix permuted(std::span<const std::size_t> row_order,
                                       std::span<const std::size_t> col_order) const;

    /// Multiplies row i by exp(i*row_phase[i]) and column j by exp(i*col_phase[j]).
    [[nodiscard]] PhaseMatrix scaled(std::span<const Angle> row_phase, std::span<const Angle> col_phase) const;

    friend bool operator==(const PhaseMatrix&, const PhaseMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Angle> entries_;
};

}  // namespace phaserank
