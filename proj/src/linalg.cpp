#include "linalg.hpp"

#include <stdexcept>
#include <utility>

namespace invt {

Matrix Matrix::from_rows(const std::vector<QVec>& rows, int cols)
{
	if (cols < 0)
		cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
	Matrix m(static_cast<int>(rows.size()), cols);
	for (int i = 0; i < m.rows_; ++i) {
		if (static_cast<int>(rows[i].size()) != cols)
			throw std::invalid_argument("ragged matrix rows");
		for (int j = 0; j < cols; ++j)
			m(i, j) = rows[i][j];
	}
	return m;
}

Matrix Matrix::identity(int n)
{
	Matrix m(n, n);
	for (int i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

QVec Matrix::row(int i) const
{
	return QVec(a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
	            a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

QVec Matrix::apply(const QVec& v) const
{
	if (static_cast<int>(v.size()) != cols_)
		throw std::invalid_argument("dimension mismatch");
	QVec r(rows_);
	for (int i = 0; i < rows_; ++i)
		for (int j = 0; j < cols_; ++j)
			if ((*this)(i, j) != 0)
				r[i] += (*this)(i, j) * v[j];
	return r;
}

Matrix Matrix::operator*(const Matrix& o) const
{
	if (cols_ != o.rows_)
		throw std::invalid_argument("dimension mismatch");
	Matrix r(rows_, o.cols_);
	for (int i = 0; i < rows_; ++i)
		for (int k = 0; k < cols_; ++k) {
			const Q& x = (*this)(i, k);
			if (x == 0)
				continue;
			for (int j = 0; j < o.cols_; ++j)
				r(i, j) += x * o(k, j);
		}
	return r;
}

Matrix Matrix::transpose() const
{
	Matrix r(cols_, rows_);
	for (int i = 0; i < rows_; ++i)
		for (int j = 0; j < cols_; ++j)
			r(j, i) = (*this)(i, j);
	return r;
}

bool Matrix::is_symmetric() const
{
	if (rows_ != cols_)
		return false;
	for (int i = 0; i < rows_; ++i)
		for (int j = i + 1; j < cols_; ++j)
			if ((*this)(i, j) != (*this)(j, i))
				return false;
	return true;
}

std::vector<int> Matrix::rref()
{
	std::vector<int> pivots;
	int r = 0;
	for (int c = 0; c < cols_ && r < rows_; ++c) {
		int p = -1;
		for (int i = r; i < rows_; ++i)
			if ((*this)(i, c) != 0) {
				p = i;
				break;
			}
		if (p < 0)
			continue;
		if (p != r)
			for (int j = 0; j < cols_; ++j)
				std::swap((*this)(p, j), (*this)(r, j));
		Q inv = 1 / (*this)(r, c);
		for (int j = c; j < cols_; ++j)
			(*this)(r, j) *= inv;
		for (int i = 0; i < rows_; ++i) {
			if (i == r || (*this)(i, c) == 0)
				continue;
			Q f = (*this)(i, c);
			for (int j = c; j < cols_; ++j)
				if ((*this)(r, j) != 0)
					(*this)(i, j) -= f * (*this)(r, j);
		}
		pivots.push_back(c);
		++r;
	}
	return pivots;
}

int Matrix::rank() const
{
	Matrix m = *this;
	return static_cast<int>(m.rref().size());
}

Q Matrix::det() const
{
	if (rows_ != cols_)
		throw std::invalid_argument("determinant of a non-square matrix");
	Matrix m = *this;
	Q d = 1;
	const int n = rows_;
	for (int c = 0; c < n; ++c) {
		int p = -1;
		for (int i = c; i < n; ++i)
			if (m(i, c) != 0) {
				p = i;
				break;
			}
		if (p < 0)
			return Q(0);
		if (p != c) {
			for (int j = 0; j < n; ++j)
				std::swap(m(p, j), m(c, j));
			d = -d;
		}
		d *= m(c, c);
		for (int i = c + 1; i < n; ++i) {
			if (m(i, c) == 0)
				continue;
			Q f = m(i, c) / m(c, c);
			for (int j = c; j < n; ++j)
				m(i, j) -= f * m(c, j);
		}
	}
	return d;
}

std::vector<QVec> kernel_basis(const Matrix& m)
{
	const int n = m.cols();
	Matrix r = m;
	std::vector<int> pivots = r.rref();
	std::vector<char> is_pivot(n, 0);
	for (int c : pivots)
		is_pivot[c] = 1;
	std::vector<QVec> raw;
	for (int f = 0; f < n; ++f) {
		if (is_pivot[f])
			continue;
		QVec v(n);
		v[f] = 1;
		for (std::size_t k = 0; k < pivots.size(); ++k)
			v[pivots[k]] = -r(static_cast<int>(k), f);
		raw.push_back(std::move(v));
	}
	if (static_cast<int>(pivots.size() + raw.size()) != n)
		throw std::logic_error("rank-nullity violated");
	if (raw.empty())
		return raw;
	Matrix k = Matrix::from_rows(raw, n);
	k.rref();
	std::vector<QVec> out;
	for (int i = 0; i < k.rows(); ++i)
		out.push_back(k.row(i));
	return out;
}

QVec solve(const Matrix& m, const QVec& b)
{
	const int n = m.rows();
	if (m.cols() != n || static_cast<int>(b.size()) != n)
		throw std::invalid_argument("solve needs a square system");
	Matrix aug(n, n + 1);
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j)
			aug(i, j) = m(i, j);
		aug(i, n) = b[i];
	}
	std::vector<int> piv = aug.rref();
	if (static_cast<int>(piv.size()) != n || piv.back() != n - 1)
		throw std::domain_error("singular system");
	QVec x(n);
	for (int i = 0; i < n; ++i)
		x[i] = aug(i, n);
	return x;
}

} // namespace invt
