#include "plane_points.hpp"

#include "linalg.hpp"

#include <stdexcept>

namespace invt {

namespace {

const std::vector<std::vector<std::string>>& cremona_strings()
{
	static const std::vector<std::vector<std::string>> rows = {
	    {"251346", "514236", "143526", "432156", "325416"},
	    {"531246", "142356", "253416", "314526", "425136"},
	    {"534126", "342516", "421356", "215436", "153246"},
	    {"453126", "532416", "412536", "321546", "214356"},
	    {"312456", "125346", "254136", "543216", "431526"},
	    {"423516", "231456", "315246", "154326", "542136"},
	};
	return rows;
}

Q constant_of(const Poly& p)
{
	if (p.is_zero())
		return Q(0);
	if (p.degree() != 0)
		throw std::logic_error("expected a constant");
	return p.lead_coeff();
}

void fill_x(PlaneConfig& c)
{
	for (int m = 0; m < 3; ++m)
		c.x[m] = Poly::var(c.ring, "x" + std::to_string(m));
}

Poly det3p(const std::array<Poly, 3>& a, const std::array<Poly, 3>& b, const std::array<Poly, 3>& c)
{
	return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

} // namespace

PlaneConfig plane_config(const std::vector<std::array<Q, 3>>& points)
{
	PlaneConfig c;
	c.ring = make_ring({"x0", "x1", "x2"});
	fill_x(c);
	for (const auto& p : points) {
		if (p[0] == 0 && p[1] == 0 && p[2] == 0)
			throw std::invalid_argument("zero point");
		c.pts.push_back({Poly::constant(c.ring, p[0]), Poly::constant(c.ring, p[1]), Poly::constant(c.ring, p[2])});
	}
	return c;
}

PlaneConfig symbolic_plane_config(int n)
{
	std::vector<std::string> names;
	for (int i = 1; i <= n; ++i)
		for (int m = 0; m < 3; ++m)
			names.push_back("p" + std::to_string(i) + "_" + std::to_string(m));
	for (int m = 0; m < 3; ++m)
		names.push_back("x" + std::to_string(m));
	PlaneConfig c;
	c.ring = make_ring(names);
	fill_x(c);
	for (int i = 0; i < n; ++i)
		c.pts.push_back({Poly::var(c.ring, 3 * i), Poly::var(c.ring, 3 * i + 1), Poly::var(c.ring, 3 * i + 2)});
	return c;
}

std::vector<std::array<Q, 3>> random_plane_points(std::mt19937_64& rng, int n)
{
	std::vector<std::array<Q, 3>> out;
	while (static_cast<int>(out.size()) < n) {
		std::array<Q, 3> p = {random_q(rng), random_q(rng), random_q(rng)};
		if (p[0] != 0 || p[1] != 0 || p[2] != 0)
			out.push_back(p);
	}
	return out;
}

PlaneConfig permute_config(const PlaneConfig& c, const std::vector<int>& perm)
{
	if (perm.size() != c.pts.size())
		throw std::invalid_argument("permutation size differs from point count");
	PlaneConfig out = c;
	for (std::size_t i = 0; i < perm.size(); ++i)
		out.pts[i] = c.pts.at(perm[i] - 1);
	return out;
}

Poly bracket3(const PlaneConfig& c, int i, int j, int k)
{
	if (i == j || j == k || i == k)
		throw std::invalid_argument("bracket with a repeated point");
	return det3p(c.pts.at(i), c.pts.at(j), c.pts.at(k));
}

Poly line_form(const PlaneConfig& c, int i, int j)
{
	if (i == j)
		throw std::invalid_argument("line through a repeated point");
	return det3p(c.pts.at(i), c.pts.at(j), c.x);
}

Poly conic_through_five(const PlaneConfig& c)
{
	auto B = [&](int i, int j, int k) { return bracket3(c, i, j, k); };
	auto L = [&](int i, int j) { return line_form(c, i, j); };
	Poly q = B(0, 1, 4) * B(2, 3, 4) * L(0, 2) * L(1, 3) - B(0, 2, 4) * B(1, 3, 4) * L(0, 1) * L(2, 3);
	if (q.is_zero())
		throw std::domain_error("five points in degenerate position");
	return q;
}

Poly conic_invariant_d2(const PlaneConfig& c)
{
	auto B = [&](int i, int j, int k) { return bracket3(c, i, j, k); };
	return B(0, 1, 4) * B(2, 3, 4) * B(0, 2, 5) * B(1, 3, 5) - B(0, 2, 4) * B(1, 3, 4) * B(0, 1, 5) * B(2, 3, 5);
}

Poly lagrange_bracket(const PlaneConfig& c, int i, int j, int k, int l, int m, int n)
{
	auto B = [&](int a, int b, int e) { return bracket3(c, a - 1, b - 1, e - 1); };
	return B(i, j, m) * B(k, l, n) - B(i, j, n) * B(k, l, m);
}

CremonaData cremona_cubics(const PlaneConfig& c)
{
	if (c.pts.size() != 6)
		throw std::invalid_argument("Cremona cubics need six points");
	CremonaData cd;
	for (const auto& row : cremona_strings()) {
		Poly cubic(c.ring), bar(c.ring);
		for (const auto& s : row) {
			int v[6];
			for (int i = 0; i < 6; ++i)
				v[i] = s[i] - '0';
			cubic += line_form(c, v[0] - 1, v[1] - 1) * line_form(c, v[2] - 1, v[3] - 1) *
			         line_form(c, v[4] - 1, v[5] - 1);
			bar += lagrange_bracket(c, v[0], v[1], v[2], v[3], v[4], v[5]);
		}
		cd.cubics.push_back(cubic);
		cd.bars.push_back(bar);
	}
	return cd;
}

Poly morley_covariant(const CremonaData& cd)
{
	Poly m(cd.cubics[0].ring());
	for (int i = 0; i < 6; ++i)
		m += cd.bars[i] * cd.bars[i] * cd.cubics[i];
	return m;
}

Poly hexahedral_sum_of_cubes()
{
	Ring r = make_ring({"a", "b", "c", "d", "e", "f"});
	Poly s(r);
	for (int i = 0; i < 6; ++i)
		s += Poly::var(r, i).pow(3);
	return s;
}

std::vector<std::string> hexahedral_line_check(const Poly& cubic6, const std::vector<Q>& bars)
{
	if (cubic6.nvars() != 6 || bars.size() != 6)
		throw std::invalid_argument("hexahedral check works in six coordinates");
	const std::string names = "abcdef";
	std::vector<std::string> failures;
	Ring st = make_ring({"s", "t"});
	int count = 0;
	// pair partitions of {0..5}: 0 pairs with p, the rest split
	for (int p = 1; p < 6; ++p) {
		std::vector<int> rest;
		for (int i = 1; i < 6; ++i)
			if (i != p)
				rest.push_back(i);
		for (int q = 1; q < 4; ++q) {
			std::vector<int> others;
			for (int i = 1; i < 4; ++i)
				if (i != q)
					others.push_back(rest[i]);
			std::array<std::pair<int, int>, 3> pairs = {
			    {{0, p}, {rest[0], rest[q]}, {others[0], others[1]}}};
			++count;
			Matrix m(5, 6);
			for (int k = 0; k < 3; ++k) {
				m(k, pairs[k].first) = 1;
				m(k, pairs[k].second) = 1;
			}
			for (int i = 0; i < 6; ++i) {
				m(3, i) = 1;
				m(4, i) = bars[i];
			}
			auto ker = kernel_basis(m);
			std::vector<Poly> images;
			for (int i = 0; i < 6; ++i) {
				Poly v(st);
				for (std::size_t b = 0; b < ker.size() && b < 2; ++b)
					v += Poly::var(st, static_cast<int>(b)) * ker[b][i];
				images.push_back(v);
			}
			std::string label;
			for (const auto& [a, b] : pairs) {
				label += names[a];
				label += names[b];
				label += '|';
			}
			label.pop_back();
			if (ker.size() > 2 || !cubic6.subs(images).is_zero())
				failures.push_back(label);
		}
	}
	if (count != 15)
		throw std::logic_error("pair partition count");
	return failures;
}

std::vector<CheckItem> plane_checks(std::uint64_t seed, int trials)
{
	std::mt19937_64 rng(seed);
	int sum_cubics = 0, sum_cubes = 0, weighted = 0, lines = 0, control = 0, d2rel = 0, morley = 0, d2sign = 0;
	std::string d2detail;
	Poly cubes = hexahedral_sum_of_cubes();
	Poly perturbed = cubes + Poly::var(cubes.ring(), 0).pow(2) * Poly::var(cubes.ring(), 1);
	const std::vector<int> swap12 = {2, 1, 3, 4, 5, 6}, cyc = {2, 3, 4, 5, 6, 1}, cyc3 = {2, 3, 1, 4, 5, 6};
	for (int t = 0; t < trials; ++t) {
		PlaneConfig c = plane_config(random_plane_points(rng, 6));
		CremonaData cd = cremona_cubics(c);
		Poly s(c.ring), s3(c.ring), sa(c.ring);
		std::vector<Q> bars;
		for (int i = 0; i < 6; ++i) {
			s += cd.cubics[i];
			s3 += cd.cubics[i].pow(3);
			sa += cd.bars[i] * cd.cubics[i];
			bars.push_back(constant_of(cd.bars[i]));
		}
		sum_cubics += s.is_zero();
		sum_cubes += s3.is_zero();
		weighted += sa.is_zero();
		lines += hexahedral_line_check(cubes, bars).empty();
		control += !hexahedral_line_check(perturbed, bars).empty();

		// a2, a4: elementary symmetric functions of the overline invariants
		Q e[7] = {1, 0, 0, 0, 0, 0, 0};
		for (const Q& b : bars)
			for (int k = 6; k >= 1; --k)
				e[k] += e[k - 1] * b;
		Q d2 = constant_of(conic_invariant_d2(c));
		Q rhs = e[2] * e[2] - 4 * e[4];
		if (d2 * d2 == rhs)
			++d2rel;
		else if (t == 0 && d2 != 0)
			d2detail = "(a2^2 - 4a4)/d2^2 = " + q_str(rhs / (d2 * d2));

		Poly m = morley_covariant(cd);
		bool ok = true;
		for (const auto* perm : {&swap12, &cyc})
			ok = ok && morley_covariant(cremona_cubics(permute_config(c, *perm))) == -m;
		morley += ok;

		Q d2_12 = constant_of(conic_invariant_d2(permute_config(c, swap12)));
		Q d2_123 = constant_of(conic_invariant_d2(permute_config(c, cyc3)));
		d2sign += (d2_12 == -d2 && d2_123 == d2);
	}
	auto frac = [&](int k) { return std::to_string(k) + "/" + std::to_string(trials); };
	std::vector<CheckItem> out;
	out.push_back({"a + b + c + d + e + f = 0", sum_cubics == trials, frac(sum_cubics)});
	out.push_back({"a^3 + ... + f^3 = 0", sum_cubes == trials, frac(sum_cubes)});
	out.push_back({"sum of abar*a = 0", weighted == trials, frac(weighted)});
	out.push_back({"15 lines on the surface", lines == trials, frac(lines)});
	out.push_back({"perturbed cubic rejected", control == trials, frac(control)});
	out.push_back({"d2^2 = a2^2 - 4a4", d2rel == trials, frac(d2rel) + (d2detail.empty() ? "" : ", " + d2detail)});
	out.push_back({"Morley covariant sign character", morley == trials, frac(morley)});
	out.push_back({"d2 odd under (12), fixed by (123)", d2sign == trials, frac(d2sign)});
	return out;
}

} // namespace invt
