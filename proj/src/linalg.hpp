#pragma once

#include "rational.hpp"

#include <vector>

namespace invt {

using QVec = std::vector<Q>;

class Matrix {
public:
	Matrix() = default;
	Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
	static Matrix from_rows(const std::vector<QVec>& rows, int cols = -1);
	static Matrix identity(int n);

	int rows() const { return rows_; }
	int cols() const { return cols_; }
	Q& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
	const Q& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

	QVec row(int i) const;
	QVec apply(const QVec& v) const;
	Matrix operator*(const Matrix& o) const;
	Matrix transpose() const;
	bool is_symmetric() const;

	// In-place reduced row echelon form; returns pivot columns.
	std::vector<int> rref();
	int rank() const;
	Q det() const;

private:
	int rows_ = 0;
	int cols_ = 0;
	std::vector<Q> a_;
};

// Basis of {v : m v = 0}, itself brought to reduced echelon form so each
// vector starts with 1 and the pivots run left to right.
std::vector<QVec> kernel_basis(const Matrix& m);

// Unique solution of m x = b for square invertible m; throws otherwise.
QVec solve(const Matrix& m, const QVec& b);

} // namespace invt
