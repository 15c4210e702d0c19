#include "genfun.hpp"

#include <stdexcept>

namespace invt {

Ring univariate_ring(const std::string& name) { return make_ring({name}); }

namespace {

using UPoly = std::vector<Q>; // coefficient k at index k

UPoly umul(const UPoly& a, const UPoly& b)
{
	if (a.empty() || b.empty())
		return {};
	UPoly r(a.size() + b.size() - 1);
	for (std::size_t i = 0; i < a.size(); ++i)
		if (a[i] != 0)
			for (std::size_t j = 0; j < b.size(); ++j)
				r[i + j] += a[i] * b[j];
	return r;
}

UPoly one_minus_xk(int k)
{
	UPoly p(k + 1);
	p[0] = 1;
	p[k] -= 1;
	return p;
}

// exact division; throws if a remainder survives
UPoly udiv_exact(UPoly num, const UPoly& den)
{
	int dn = static_cast<int>(den.size()) - 1;
	while (dn >= 0 && den[dn] == 0)
		--dn;
	if (dn < 0)
		throw std::domain_error("division by zero polynomial");
	int nn = static_cast<int>(num.size()) - 1;
	while (nn >= 0 && num[nn] == 0)
		--nn;
	if (nn < dn)
		return nn < 0 ? UPoly{Q(0)} : throw std::domain_error("non-exact polynomial division");
	UPoly quo(nn - dn + 1);
	for (int i = nn; i >= dn; --i) {
		Q c = num[i] / den[dn];
		quo[i - dn] = c;
		if (c == 0)
			continue;
		for (int j = 0; j <= dn; ++j)
			num[i - dn + j] -= c * den[j];
	}
	for (const auto& r : num)
		if (r != 0)
			throw std::domain_error("non-exact polynomial division");
	return quo;
}

Poly upoly_to_poly(const UPoly& u, const Ring& r)
{
	Poly p(r);
	for (std::size_t k = 0; k < u.size(); ++k)
		p.add_term(Mono{static_cast<int>(k)}, u[k]);
	return p;
}

} // namespace

Poly cayley_sylvester_polynomial(int d, int g)
{
	if (d < 0 || g < 0)
		throw std::invalid_argument("negative argument");
	UPoly num{Q(1)}, den{Q(1)};
	for (int i = 1; i <= g; ++i) {
		num = umul(num, one_minus_xk(d + i));
		den = umul(den, one_minus_xk(i));
	}
	return upoly_to_poly(udiv_exact(num, den), univariate_ring("x"));
}

std::vector<long> cayley_sylvester_coefficients(int d, int g)
{
	Poly p = cayley_sylvester_polynomial(d, g);
	std::vector<long> out(static_cast<std::size_t>(d * g + 1), 0);
	for (const auto& [m, c] : p.terms())
		out[m[0]] = c.get_num().get_si();
	return out;
}

long binary_invariant_dim(int d, int g)
{
	if ((d * g) % 2)
		return 0;
	if (g == 0)
		return 1;
	// (1−x^{d+1})…(1−x^{d+g}) / ((1−x²)…(1−x^g)), coefficient of x^{dg/2}
	const int target = d * g / 2;
	Ring r = univariate_ring("x");
	UPoly num{Q(1)};
	for (int i = 1; i <= g; ++i)
		num = umul(num, one_minus_xk(d + i));
	std::vector<Mono> den;
	for (int i = 2; i <= g; ++i)
		den.push_back(Mono{i});
	Series s = rational_series(upoly_to_poly(num, r), den, target);
	return s.coeff(target).get_num().get_si();
}

std::map<int, long> covariant_multiplicities(int d, int g)
{
	auto h = cayley_sylvester_coefficients(d, g);
	std::map<int, long> out;
	for (int e = d * g; e >= 0; e -= 2) {
		int p = (d * g - e) / 2;
		long mult = h[p] - (p > 0 ? h[p - 1] : 0);
		if (mult)
			out[e] = mult;
	}
	return out;
}

Series ternary_weight_enumerator(int d, int trunc)
{
	Ring r = make_ring({"x1", "x2", "y"});
	std::vector<int> w = {0, 0, 1};
	Series acc = Series::one(r, trunc, w);
	for (int i1 = 0; i1 <= d; ++i1)
		for (int i2 = 0; i1 + i2 <= d; ++i2)
			acc = acc * series_inverse_factor(r, Mono{i1, i2, 1}, trunc, w);
	return acc;
}

long ternary_weight_count(const Series& enumerator, int g, int p0, int p1, int p2)
{
	if (p0 < 0 || p1 < 0 || p2 < 0)
		return 0;
	return enumerator.coeff(Mono{p1, p2, g}).get_num().get_si();
}

long bedratyuk_invariant_dim(int d, int g)
{
	if ((d * g) % 3)
		return 0;
	const int p = d * g / 3;
	Series e = ternary_weight_enumerator(d, g);
	auto h = [&](int a, int b, int c) { return ternary_weight_count(e, g, a, b, c); };
	return h(p, p, p) - h(p + 1, p - 1, p) - h(p - 1, p, p + 1) + h(p + 1, p - 2, p + 1) + h(p - 1, p - 1, p + 2) -
	       h(p, p - 2, p + 2);
}

namespace {

// (1 − z²) · z^{j(j+1)} / (Π_{k≤j}(1−z^{2k}) Π_{l≤d−j}(1−z^{2l})), times extra
Series springer_inner(int d, int j, const Ring& r, const std::vector<int>& w, const Mono& shift,
                      bool order_factor, int trunc)
{
	const int nv = static_cast<int>(r->size());
	Mono base(nv, 0);
	base[0] = j * (j + 1);
	for (int i = 0; i < nv; ++i)
		base[i] += shift[i];
	Mono sq = base;
	sq[0] += 2;
	Poly num(r);
	num.add_term(base, Q(1));
	num.add_term(sq, Q(-1));
	std::vector<Mono> den;
	for (int k = 1; k <= j; ++k) {
		Mono m(nv, 0);
		m[0] = 2 * k;
		den.push_back(m);
	}
	for (int l = 1; l <= d - j; ++l) {
		Mono m(nv, 0);
		m[0] = 2 * l;
		den.push_back(m);
	}
	if (order_factor)
		den.push_back(Mono{1, 1});
	return rational_series(num, den, trunc, w);
}

} // namespace

Series springer_covariant_series(int d, int e, int trunc)
{
	if (d < 1)
		throw std::invalid_argument("springer needs d >= 1");
	if (e < 0)
		throw std::invalid_argument("negative order");
	Ring r = univariate_ring("z");
	Series acc(r, trunc);
	for (int j = 0; 2 * j < d; ++j) {
		int m = d - 2 * j;
		Series inner = springer_inner(d, j, r, {1}, Mono{e}, false, m * trunc);
		Series term = phi_j(inner, m).retruncate(trunc);
		if (j % 2)
			acc -= term;
		else
			acc += term;
	}
	return acc;
}

Series springer_bigraded(int d, int trunc)
{
	if (d < 1)
		throw std::invalid_argument("springer needs d >= 1");
	Ring r = make_ring({"z", "w"});
	std::vector<int> w = {1, 0};
	Series acc(r, trunc, w);
	for (int j = 0; 2 * j < d; ++j) {
		int m = d - 2 * j;
		Series inner = springer_inner(d, j, r, w, Mono{0, 0}, true, m * trunc);
		Series term = phi_j(inner, m, 0).retruncate(trunc);
		if (j % 2)
			acc -= term;
		else
			acc += term;
	}
	return acc;
}

long howe_dimension(int d, int k)
{
	if (d < 2 || k < 0)
		throw std::invalid_argument("howe needs d >= 2 and k >= 0");
	if (d % 2 && k % 2)
		throw std::invalid_argument("odd d needs even k");
	mpz_class total = 0;
	for (int j = 0; j <= (d - 1) / 2; ++j) {
		long top = static_cast<long>(k) * (d - 2 * j) / 2 + d - 2 - j;
		Q term = binom_q(d, j) * binom_q(top, d - 2);
		if (j % 2)
			total -= term.get_num();
		else
			total += term.get_num();
	}
	return total.get_si();
}

std::vector<long> partition_counts(int trunc)
{
	Ring r = univariate_ring("x");
	std::vector<Mono> den;
	for (int i = 1; i <= trunc; ++i)
		den.push_back(Mono{i});
	Series s = rational_series(Poly::constant(r, Q(1)), den, trunc);
	std::vector<long> out;
	for (int n = 0; n <= trunc; ++n)
		out.push_back(s.coeff(n).get_num().get_si());
	return out;
}

} // namespace invt
