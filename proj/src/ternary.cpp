#include "ternary.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace invt {

std::vector<TIndex> ternary_indices(int d)
{
	std::vector<TIndex> out;
	for (int i = d; i >= 0; --i)
		for (int j = d - i; j >= 0; --j)
			out.push_back({i, j, d - i - j});
	return out;
}

int ternary_position(int d, const TIndex& t)
{
	// rows i0 = d, d-1, … hold 1, 2, … entries
	int i = t[0], j = t[1];
	if (i < 0 || j < 0 || t[2] < 0 || i + j + t[2] != d)
		throw std::out_of_range("ternary index");
	int before = 0;
	for (int k = d; k > i; --k)
		before += d - k + 1;
	return before + (d - i - j);
}

Ring ternary_ring(int d, const std::string& prefix)
{
	if (d < 0 || d > 9)
		throw std::invalid_argument("ternary degree must be in 0..9");
	std::vector<std::string> names;
	for (const auto& t : ternary_indices(d))
		names.push_back(prefix + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]));
	return make_ring(std::move(names));
}

std::vector<Mono> ternary_weight_space(int d, int g, const TIndex& w)
{
	auto idx = ternary_indices(d);
	const int n = static_cast<int>(idx.size());
	std::vector<Mono> out;
	Mono m(n, 0);
	std::function<void(int, int, TIndex)> rec = [&](int k, int left, TIndex need) {
		if (left == 0) {
			if (need[0] == 0 && need[1] == 0 && need[2] == 0)
				out.push_back(m);
			return;
		}
		if (k == n)
			return;
		for (int e = left; e >= 0; --e) {
			TIndex rest = {need[0] - e * idx[k][0], need[1] - e * idx[k][1], need[2] - e * idx[k][2]};
			if (rest[0] < 0 || rest[1] < 0 || rest[2] < 0)
				continue;
			m[k] = e;
			rec(k + 1, left - e, rest);
			m[k] = 0;
		}
	};
	if (w[0] + w[1] + w[2] != d * g)
		return out;
	rec(0, g, w);
	return out;
}

std::vector<Mono> ternary_isobaric_monomials(int d, int g)
{
	if ((d * g) % 3)
		return {};
	int p = d * g / 3;
	return ternary_weight_space(d, g, {p, p, p});
}

namespace {

Poly to_ternary_ring(const Poly& P, int d)
{
	Ring r = ternary_ring(d);
	if (P.is_zero())
		return Poly(r);
	try {
		return P.in_ring(r);
	} catch (const std::invalid_argument&) {
		throw std::invalid_argument("polynomial uses a variable outside the ternary coefficients");
	}
}

// which = 1: f_{i0,i1,i2} -> i1 f_{i0+1,i1-1,i2}; which = 2: -> i2 f_{i0,i1+1,i2-1}
Poly ternary_derivation(const Poly& P, int d, int which)
{
	Poly p = to_ternary_ring(P, d);
	auto idx = ternary_indices(d);
	Poly out(p.ring());
	for (const auto& [m, c] : p.terms()) {
		for (std::size_t k = 0; k < idx.size(); ++k) {
			if (!m[k])
				continue;
			TIndex t = idx[k];
			int s = t[which];
			if (!s)
				continue;
			t[which] -= 1;
			t[which - 1] += 1;
			Mono mm = m;
			mm[k] -= 1;
			mm[ternary_position(d, t)] += 1;
			out.add_term(mm, c * s * m[k]);
		}
	}
	return out;
}

} // namespace

Poly apply_D1(const Poly& P, int d) { return ternary_derivation(P, d, 1); }
Poly apply_D2(const Poly& P, int d) { return ternary_derivation(P, d, 2); }

std::vector<Poly> ternary_invariant_basis(int d, int g)
{
	std::vector<Poly> out;
	if ((d * g) % 3)
		return out;
	int p = d * g / 3;
	Ring r = ternary_ring(d);
	auto dom = ternary_weight_space(d, g, {p, p, p});
	if (dom.empty())
		return out;
	auto c1 = ternary_weight_space(d, g, {p + 1, p - 1, p});
	auto c2 = ternary_weight_space(d, g, {p, p + 1, p - 1});
	std::map<Mono, int> i1, i2;
	for (std::size_t i = 0; i < c1.size(); ++i)
		i1[c1[i]] = static_cast<int>(i);
	for (std::size_t i = 0; i < c2.size(); ++i)
		i2[c2[i]] = static_cast<int>(i);
	int rows = static_cast<int>(c1.size() + c2.size());
	Matrix m(rows, static_cast<int>(dom.size()));
	for (std::size_t j = 0; j < dom.size(); ++j) {
		Poly mono = Poly::monomial(r, dom[j]);
		Poly d1 = apply_D1(mono, d), d2 = apply_D2(mono, d);
		for (const auto& [mm, c] : d1.terms())
			m(i1.at(mm), static_cast<int>(j)) = c;
		for (const auto& [mm, c] : d2.terms())
			m(static_cast<int>(c1.size()) + i2.at(mm), static_cast<int>(j)) = c;
	}
	for (const auto& v : kernel_basis(m)) {
		Poly q(r);
		for (std::size_t i = 0; i < dom.size(); ++i)
			q.add_term(dom[i], v[i]);
		out.push_back(std::move(q));
	}
	return out;
}

TernaryForm symbolic_ternary(int d, const std::string& prefix)
{
	TernaryForm f;
	f.d = d;
	f.ring = ternary_ring(d, prefix);
	for (int i = 0; i < static_cast<int>(f.ring->size()); ++i)
		f.c.push_back(Poly::var(f.ring, i));
	return f;
}

TernaryForm ternary_from_values(int d, const std::vector<Q>& values)
{
	TernaryForm f;
	f.d = d;
	f.ring = make_ring({});
	if (values.size() != ternary_indices(d).size())
		throw std::invalid_argument("wrong number of ternary coefficients");
	for (const auto& v : values)
		f.c.push_back(Poly::constant(f.ring, v));
	return f;
}

TernaryForm linear_power(const std::array<Q, 3>& l, int d)
{
	std::vector<Q> vals;
	for (const auto& t : ternary_indices(d)) {
		Q v = 1;
		for (int k = 0; k < 3; ++k)
			for (int e = 0; e < t[k]; ++e)
				v *= l[k];
		vals.push_back(v);
	}
	return ternary_from_values(d, vals);
}

TernaryForm ternary_sum(const TernaryForm& a, const TernaryForm& b)
{
	if (a.d != b.d)
		throw std::invalid_argument("degree mismatch");
	TernaryForm s;
	s.d = a.d;
	s.ring = join_rings(a.ring, b.ring);
	for (std::size_t i = 0; i < a.c.size(); ++i)
		s.c.push_back(a.c[i].in_ring(s.ring) + b.c[i].in_ring(s.ring));
	return s;
}

Ring with_x012(const Ring& coeff_ring) { return join_rings(coeff_ring, make_ring({"x0", "x1", "x2"})); }

Poly ternary_form_poly(const TernaryForm& f, const Ring& r)
{
	int ix[3] = {ring_index(r, "x0"), ring_index(r, "x1"), ring_index(r, "x2")};
	Poly out(r);
	auto idx = ternary_indices(f.d);
	for (std::size_t k = 0; k < idx.size(); ++k) {
		if (f.c[k].is_zero())
			continue;
		Mono m(r->size(), 0);
		for (int v = 0; v < 3; ++v)
			m[ix[v]] = idx[k][v];
		Q mult = factorial_q(f.d) / (factorial_q(idx[k][0]) * factorial_q(idx[k][1]) * factorial_q(idx[k][2]));
		out += f.c[k].in_ring(r) * Poly::monomial(r, m, mult);
	}
	return out;
}

Poly evaluate_on_form(const Poly& invariant, const TernaryForm& f)
{
	Poly inv = to_ternary_ring(invariant, f.d);
	std::vector<Poly> images;
	for (const auto& c : f.c)
		images.push_back(c.is_zero() ? Poly(f.ring) : c.in_ring(f.ring));
	if (images.empty())
		return Poly(f.ring);
	// constants of an empty ring still carry that ring
	for (auto& im : images)
		if (!im.ring())
			im = Poly(f.ring);
	Poly out = inv.subs(images);
	return out.ring() ? out : Poly(f.ring);
}

const Poly& quartic_cubic_invariant()
{
	static const Poly inv = ternary_invariant_basis(4, 3).at(0);
	return inv;
}

const Poly& aronhold_invariant()
{
	static const Poly inv = ternary_invariant_basis(3, 4).at(0);
	return inv;
}

Poly trilinear_A(const TernaryForm& f, const TernaryForm& g, const TernaryForm& h)
{
	if (f.d != 4 || g.d != 4 || h.d != 4)
		throw std::invalid_argument("trilinear_A needs quartics");
	Ring cr = join_rings(join_rings(f.ring, g.ring), h.ring);
	Ring r = join_rings(cr, make_ring({"_s", "_t", "_u"}));
	Poly s = Poly::var(r, "_s"), t = Poly::var(r, "_t"), u = Poly::var(r, "_u");
	TernaryForm mix;
	mix.d = 4;
	mix.ring = r;
	for (std::size_t k = 0; k < f.c.size(); ++k)
		mix.c.push_back(s * f.c[k].in_ring(r) + t * g.c[k].in_ring(r) + u * h.c[k].in_ring(r));
	Poly full = evaluate_on_form(quartic_cubic_invariant(), mix);
	int is = ring_index(r, "_s"), it = ring_index(r, "_t"), iu = ring_index(r, "_u");
	Poly c = full.coeff_of_power(is, 1).coeff_of_power(it, 1).coeff_of_power(iu, 1);
	c *= Q(1, 6);
	return c.is_zero() ? Poly(cr) : c.in_ring(cr);
}

Matrix clebsch_catalecticant(const TernaryForm& f)
{
	if (f.d != 4)
		throw std::invalid_argument("catalecticant needs a quartic");
	auto two = ternary_indices(2);
	Matrix m(6, 6);
	for (int i = 0; i < 6; ++i)
		for (int j = 0; j < 6; ++j) {
			TIndex s = {two[i][0] + two[j][0], two[i][1] + two[j][1], two[i][2] + two[j][2]};
			const Poly& c = f.at(s);
			if (c.degree() > 0)
				throw std::invalid_argument("catalecticant needs rational coefficients");
			m(i, j) = c.is_zero() ? Q(0) : c.lead_coeff();
		}
	return m;
}

Poly pfaffian(const std::vector<std::vector<Poly>>& m)
{
	const std::size_t n = m.size();
	if (n == 0)
		return Poly();
	if (n % 2)
		return Poly(m[0][0].ring());
	Ring r;
	for (const auto& row : m)
		for (const auto& e : row)
			if (e.ring())
				r = e.ring();
	std::function<Poly(const std::vector<int>&)> rec = [&](const std::vector<int>& ids) -> Poly {
		if (ids.empty())
			return Poly::constant(r, Q(1));
		Poly acc(r);
		int i0 = ids[0];
		for (std::size_t k = 1; k < ids.size(); ++k) {
			const Poly& e = m[i0][ids[k]];
			if (e.is_zero())
				continue;
			std::vector<int> rest;
			for (std::size_t l = 1; l < ids.size(); ++l)
				if (l != k)
					rest.push_back(ids[l]);
			Poly term = e * rec(rest);
			if (k % 2 == 0)
				term = -term;
			acc += term;
		}
		return acc;
	};
	std::vector<int> ids(n);
	for (std::size_t i = 0; i < n; ++i)
		ids[i] = static_cast<int>(i);
	return rec(ids);
}

namespace {

int levi(int i, int j, int k)
{
	if (i == j || j == k || i == k)
		return 0;
	// even permutations of (0,1,2)
	if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0))
		return 1;
	return -1;
}

using Mat3 = std::array<std::array<int, 3>, 3>;

std::vector<Mat3> end0_basis()
{
	std::vector<Mat3> b;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			if (i != j) {
				Mat3 m{};
				m[i][j] = 1;
				b.push_back(m);
			}
	Mat3 h1{}, h2{};
	h1[0][0] = 1;
	h1[1][1] = -1;
	h2[1][1] = 1;
	h2[2][2] = -1;
	b.push_back(h1);
	b.push_back(h2);
	return b;
}

} // namespace

std::vector<std::vector<Poly>> aronhold_matrix(const TernaryForm& phi)
{
	if (phi.d != 3)
		throw std::invalid_argument("Aronhold pfaffian needs a cubic");
	Ring r = phi.ring;
	auto T = [&](int a, int j, int c) -> Poly {
		TIndex t = {0, 0, 0};
		t[a] += 1;
		t[j] += 1;
		t[c] += 1;
		const Poly& p = phi.at(t);
		return p.is_zero() ? Poly(r) : p.in_ring(r);
	};
	auto basis = end0_basis();
	std::vector<std::vector<Poly>> B(8, std::vector<Poly>(8, Poly(r)));
	for (int p = 0; p < 8; ++p)
		for (int q = 0; q < 8; ++q) {
			Poly acc(r);
			// tr(A_phi(M) N) = Σ ε_ijk M_ia N_kc T_ajc
			for (int i = 0; i < 3; ++i)
				for (int j = 0; j < 3; ++j)
					for (int k = 0; k < 3; ++k) {
						int e = levi(i, j, k);
						if (!e)
							continue;
						for (int a = 0; a < 3; ++a) {
							if (!basis[p][i][a])
								continue;
							for (int c = 0; c < 3; ++c) {
								if (!basis[q][k][c])
									continue;
								acc += T(a, j, c) * Q(e * basis[p][i][a] * basis[q][k][c]);
							}
						}
					}
			B[p][q] = acc;
		}
	return B;
}

Poly aronhold_pfaffian(const TernaryForm& phi)
{
	Poly p = pfaffian(aronhold_matrix(phi));
	return p.ring() ? p : Poly(phi.ring);
}

TernaryForm polar_cubic(const TernaryForm& F, const std::array<Poly, 3>& x)
{
	if (F.d < 1)
		throw std::invalid_argument("polar needs positive degree");
	Ring r = F.ring;
	for (const auto& xi : x)
		r = join_rings(r, xi.ring());
	TernaryForm G;
	G.d = F.d - 1;
	G.ring = r;
	for (const auto& b : ternary_indices(G.d)) {
		Poly acc(r);
		for (int m = 0; m < 3; ++m) {
			TIndex t = b;
			t[m] += 1;
			const Poly& fc = F.at(t);
			if (fc.is_zero() || x[m].is_zero())
				continue;
			acc += x[m].in_ring(r) * fc.in_ring(r);
		}
		acc *= Q(F.d);
		G.c.push_back(acc);
	}
	return G;
}

Poly scorza_quartic(const TernaryForm& F)
{
	if (F.d != 4)
		throw std::invalid_argument("Scorza map needs a quartic");
	Ring xr = with_x012(F.ring);
	std::array<Poly, 3> x = {Poly::var(xr, "x0"), Poly::var(xr, "x1"), Poly::var(xr, "x2")};
	return evaluate_on_form(aronhold_invariant(), polar_cubic(F, x));
}

} // namespace invt
