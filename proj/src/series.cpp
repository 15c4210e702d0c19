#include "series.hpp"

#include <stdexcept>

namespace invt {

Series::Series(Ring r, int trunc, std::vector<int> weights)
    : poly_(std::move(r)), trunc_(trunc), weights_(std::move(weights))
{
	if (trunc < 0)
		throw std::invalid_argument("negative truncation");
	if (weights_.empty())
		weights_.assign(poly_.nvars(), 1);
	if (static_cast<int>(weights_.size()) != poly_.nvars())
		throw std::invalid_argument("weights length");
	for (int w : weights_)
		if (w < 0)
			throw std::invalid_argument("negative weight");
}

Series Series::from_poly(const Poly& p, int trunc, std::vector<int> weights)
{
	Series s(p.ring(), trunc, std::move(weights));
	s.poly_ = p;
	s.cut();
	return s;
}

Series Series::one(Ring r, int trunc, std::vector<int> weights)
{
	Series s(r, trunc, std::move(weights));
	s.poly_ = Poly::constant(r, Q(1));
	return s;
}

int Series::wdeg(const Mono& m) const
{
	int d = 0;
	for (std::size_t i = 0; i < m.size(); ++i)
		d += weights_[i] * m[i];
	return d;
}

Q Series::coeff(int k) const
{
	if (poly_.nvars() != 1)
		throw std::invalid_argument("univariate coefficient on multivariate series");
	return poly_.coeff(Mono{k});
}

void Series::cut()
{
	Poly kept(poly_.ring());
	for (const auto& [m, c] : poly_.terms())
		if (wdeg(m) <= trunc_)
			kept.add_term(m, c);
	poly_ = std::move(kept);
}

void Series::check_compatible(const Series& o) const
{
	if (!same_ring(ring(), o.ring()) || weights_ != o.weights_)
		throw std::invalid_argument("series over different rings or gradings");
}

Series& Series::operator+=(const Series& o)
{
	check_compatible(o);
	trunc_ = std::min(trunc_, o.trunc_);
	poly_ += o.poly_;
	cut();
	return *this;
}

Series& Series::operator-=(const Series& o)
{
	check_compatible(o);
	trunc_ = std::min(trunc_, o.trunc_);
	poly_ -= o.poly_;
	cut();
	return *this;
}

Series& Series::operator*=(const Q& c)
{
	poly_ *= c;
	return *this;
}

Series operator*(const Series& a, const Series& b)
{
	a.check_compatible(b);
	Series r(a.ring(), std::min(a.trunc_, b.trunc_), a.weights_);
	const int n = a.poly_.nvars();
	Mono m(n);
	for (const auto& [ma, ca] : a.poly_.terms()) {
		int da = a.wdeg(ma);
		if (da > r.trunc_)
			continue;
		for (const auto& [mb, cb] : b.poly_.terms()) {
			if (da + a.wdeg(mb) > r.trunc_)
				continue;
			for (int i = 0; i < n; ++i)
				m[i] = ma[i] + mb[i];
			r.poly_.add_term(m, ca * cb);
		}
	}
	return r;
}

bool operator==(const Series& a, const Series& b)
{
	if (!same_ring(a.ring(), b.ring()) || a.weights_ != b.weights_)
		return false;
	if (a.trunc_ != b.trunc_)
		return a.retruncate(std::min(a.trunc_, b.trunc_)) == b.retruncate(std::min(a.trunc_, b.trunc_));
	return a.poly_ == b.poly_;
}

Series Series::retruncate(int n) const
{
	Series s = *this;
	s.trunc_ = std::min(n, trunc_);
	s.cut();
	return s;
}

Series Series::inverse() const
{
	Mono zero(poly_.nvars(), 0);
	Q c0 = poly_.coeff(zero);
	if (c0 == 0)
		throw std::domain_error("series inverse needs a nonzero constant term");
	for (const auto& [m, c] : poly_.terms())
		if (m != zero && wdeg(m) == 0)
			throw std::domain_error("series inverse needs positive weight on nonconstant terms");
	// 1/(c0(1-u)) = (1/c0) Σ u^k with u = 1 - s/c0
	Q inv0 = 1 / c0;
	Series u = Series::one(ring(), trunc_, weights_) - (*this) * inv0;
	Series acc = Series::one(ring(), trunc_, weights_);
	Series power = acc;
	for (int k = 1; k <= trunc_; ++k) {
		power = power * u;
		if (power.poly_.is_zero())
			break;
		acc += power;
	}
	return acc * inv0;
}

Series series_inverse_factor(const Ring& r, const Mono& e, int trunc, std::vector<int> weights)
{
	Series s(r, trunc, std::move(weights));
	int step = s.wdeg(e);
	if (static_cast<int>(e.size()) != s.poly().nvars())
		throw std::invalid_argument("exponent vector length");
	if (mono_degree(e) == 0)
		throw std::invalid_argument("geometric factor of the constant 1");
	if (step == 0)
		throw std::invalid_argument("geometric factor of a weight-0 monomial does not truncate");
	Poly p(r);
	Mono m(e.size(), 0);
	for (int k = 0; k * step <= trunc; ++k) {
		p.add_term(m, Q(1));
		for (std::size_t i = 0; i < e.size(); ++i)
			m[i] += e[i];
	}
	return Series::from_poly(p, trunc, s.weights());
}

Series rational_series(const Poly& numerator, const std::vector<Mono>& denominator, int trunc,
                       std::vector<int> weights)
{
	Series acc = Series::from_poly(numerator, trunc, weights);
	for (const auto& e : denominator)
		acc = acc * series_inverse_factor(numerator.ring(), e, trunc, weights);
	return acc;
}

Series phi_j(const Series& s, int j, int var)
{
	if (j <= 0)
		throw std::invalid_argument("phi_j needs j >= 1");
	std::vector<int> w = s.weights();
	int rest = 0;
	for (std::size_t i = 0; i < w.size(); ++i)
		if (static_cast<int>(i) != var)
			rest += w[i];
	if (rest != 0 || w[var] != 1)
		throw std::invalid_argument("phi_j needs weight 1 on its variable and 0 elsewhere");
	Poly p(s.ring());
	for (const auto& [m, c] : s.poly().terms()) {
		if (m[var] % j)
			continue;
		Mono mm = m;
		mm[var] /= j;
		p.add_term(mm, c);
	}
	return Series::from_poly(p, s.trunc() / j, w);
}

} // namespace invt
