#pragma once

#include "poly.hpp"

#include <vector>

namespace invt {

// Power series cut off at weighted degree N. Weights default to 1 per
// variable; weight-0 variables let a second grading ride along (e.g. the
// order variable w of a bigraded Hilbert series).
class Series {
public:
	Series() = default;
	Series(Ring r, int trunc, std::vector<int> weights = {});

	static Series from_poly(const Poly& p, int trunc, std::vector<int> weights = {});
	static Series one(Ring r, int trunc, std::vector<int> weights = {});

	const Ring& ring() const { return poly_.ring(); }
	int trunc() const { return trunc_; }
	const std::vector<int>& weights() const { return weights_; }
	const Poly& poly() const { return poly_; }

	int wdeg(const Mono& m) const;
	Q coeff(const Mono& m) const { return poly_.coeff(m); }
	// Univariate convenience.
	Q coeff(int k) const;

	Series& operator+=(const Series& o);
	Series& operator-=(const Series& o);
	Series& operator*=(const Q& c);
	friend Series operator+(Series a, const Series& b) { return a += b; }
	friend Series operator-(Series a, const Series& b) { return a -= b; }
	friend Series operator*(const Series& a, const Series& b);
	friend Series operator*(Series a, const Q& c) { return a *= c; }
	friend bool operator==(const Series& a, const Series& b);

	// Requires a nonzero constant term and positive weight on every other term.
	Series inverse() const;
	Series retruncate(int n) const;

private:
	void check_compatible(const Series& o) const;
	void cut();

	Poly poly_;
	int trunc_ = 0;
	std::vector<int> weights_;
};

// Σ_{k≥0} (x^e)^k truncated at N (weights given per variable).
Series series_inverse_factor(const Ring& r, const Mono& e, int trunc, std::vector<int> weights = {});

// numerator · Π 1/(1 − m_i), each m_i a nonconstant monomial.
Series rational_series(const Poly& numerator, const std::vector<Mono>& denominator, int trunc,
                       std::vector<int> weights = {});

// Φ_j on variable `var`: z^n ↦ z^{n/j} when j | n, else 0. Truncation
// becomes floor(N / j) when var carries all the weight.
Series phi_j(const Series& s, int j, int var = 0);

} // namespace invt
