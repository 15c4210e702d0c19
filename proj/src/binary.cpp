#include "binary.hpp"

#include <functional>
#include <stdexcept>

namespace invt {

Ring binary_ring(int d, const std::string& prefix)
{
	if (d < 0)
		throw std::invalid_argument("negative degree");
	std::vector<std::string> names;
	for (int i = 0; i <= d; ++i)
		names.push_back(prefix + std::to_string(i));
	return make_ring(std::move(names));
}

std::vector<Mono> weight_space(int d, int g, int p)
{
	std::vector<Mono> out;
	if (d < 0 || g < 0 || p < 0)
		return out;
	Mono m(d + 1, 0);
	// fill exponents from a0 upward with the largest admissible value first,
	// which yields lex-descending order directly
	std::function<void(int, int, int)> rec = [&](int i, int left, int wleft) {
		if (i == d) {
			if (left * d == wleft) {
				m[d] = left;
				out.push_back(m);
				m[d] = 0;
			}
			return;
		}
		for (int e = left; e >= 0; --e) {
			int w = e * i;
			if (w > wleft)
				continue;
			// remaining degree must be able to absorb the remaining weight
			int rest = left - e;
			if (wleft - w > rest * d || wleft - w < rest * (i + 1))
				continue;
			m[i] = e;
			rec(i + 1, rest, wleft - w);
			m[i] = 0;
		}
	};
	if (d == 0) {
		if (p == 0)
			out.push_back(Mono{g});
		return out;
	}
	rec(0, g, p);
	return out;
}

WeightedMonomialSpace isobaric_monomials(int d, int g)
{
	WeightedMonomialSpace s;
	s.d = d;
	s.g = g;
	if ((d * g) % 2)
		return s;
	s.p = d * g / 2;
	s.basis = weight_space(d, g, s.p);
	return s;
}

namespace {

Poly to_binary_ring(const Poly& P, int d)
{
	Ring r = binary_ring(d);
	if (P.is_zero())
		return Poly(r);
	try {
		return P.in_ring(r);
	} catch (const std::invalid_argument&) {
		throw std::invalid_argument("polynomial uses a variable outside a0..a" + std::to_string(d));
	}
}

// Σ coef(i) · a_{to(i)} ∂/∂a_{from(i)}
Poly derivation(const Poly& P, int d, bool lowering)
{
	Poly p = to_binary_ring(P, d);
	Poly out(p.ring());
	for (const auto& [m, c] : p.terms()) {
		for (int i = 0; i < d; ++i) {
			int from = lowering ? i + 1 : i;
			int to = lowering ? i : i + 1;
			int k = m[from];
			if (!k)
				continue;
			Q scale = lowering ? Q(i + 1) : Q(d - i);
			Mono mm = m;
			mm[from] -= 1;
			mm[to] += 1;
			out.add_term(mm, c * scale * k);
		}
	}
	return out;
}

std::map<Mono, int> index_of(const std::vector<Mono>& basis)
{
	std::map<Mono, int> idx;
	for (std::size_t i = 0; i < basis.size(); ++i)
		idx[basis[i]] = static_cast<int>(i);
	return idx;
}

QVec coords(const Poly& p, const std::vector<Mono>& basis, const std::map<Mono, int>& idx)
{
	QVec v(basis.size());
	for (const auto& [m, c] : p.terms()) {
		auto it = idx.find(m);
		if (it == idx.end())
			throw std::logic_error("polynomial leaves its weight space");
		v[it->second] = c;
	}
	return v;
}

Poly from_coords(const Ring& r, const std::vector<Mono>& basis, const QVec& v)
{
	Poly p(r);
	for (std::size_t i = 0; i < basis.size(); ++i)
		p.add_term(basis[i], v[i]);
	return p;
}

Matrix operator_matrix(const std::function<Poly(const Poly&)>& op, const Ring& r, const std::vector<Mono>& dom,
                       const std::vector<Mono>& cod)
{
	Matrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
	auto idx = index_of(cod);
	for (std::size_t j = 0; j < dom.size(); ++j) {
		QVec col = coords(op(Poly::monomial(r, dom[j])), cod, idx);
		for (std::size_t i = 0; i < cod.size(); ++i)
			m(static_cast<int>(i), static_cast<int>(j)) = col[i];
	}
	return m;
}

} // namespace

Poly apply_D(const Poly& P, int d) { return derivation(P, d, true); }
Poly apply_Delta(const Poly& P, int d) { return derivation(P, d, false); }

std::vector<Poly> invariant_basis(int d, int g)
{
	std::vector<Poly> out;
	if ((d * g) % 2)
		return out;
	Ring r = binary_ring(d);
	int p = d * g / 2;
	auto dom = weight_space(d, g, p);
	if (dom.empty())
		return out;
	auto cod = weight_space(d, g, p - 1);
	Matrix m = operator_matrix([d](const Poly& q) { return apply_D(q, d); }, r, dom, cod);
	for (const auto& v : kernel_basis(m))
		out.push_back(from_coords(r, dom, v));
	return out;
}

Poly reynolds(const Poly& P, int d, int g)
{
	Poly p = to_binary_ring(P, d);
	Ring r = p.ring();
	for (const auto& t : p.terms())
		if (mono_degree(t.first) != g)
			throw std::invalid_argument("reynolds needs a homogeneous polynomial of degree g");
	if ((d * g) % 2)
		return Poly(r);
	const int p0 = d * g / 2;
	auto base = weight_space(d, g, p0);
	auto idx = index_of(base);

	// only the weight-p0 part can meet the invariants
	Poly part(r);
	for (const auto& [m, c] : p.terms()) {
		int w = 0;
		for (int i = 0; i <= d; ++i)
			w += i * m[i];
		if (w == p0)
			part.add_term(m, c);
	}
	if (part.is_zero())
		return Poly(r);

	std::vector<QVec> cols;
	auto inv = invariant_basis(d, g);
	for (const auto& q : inv)
		cols.push_back(coords(q, base, idx));
	// ladders through weight p0 start at Δ-killed vectors of weight p0+k
	for (int k = 1; p0 + k <= d * g; ++k) {
		auto dom = weight_space(d, g, p0 + k);
		if (dom.empty())
			break;
		auto cod = weight_space(d, g, p0 + k + 1);
		Matrix m = operator_matrix([d](const Poly& q) { return apply_Delta(q, d); }, r, dom, cod);
		for (const auto& v : kernel_basis(m)) {
			Poly w = from_coords(r, dom, v);
			for (int s = 0; s < k; ++s)
				w = apply_D(w, d);
			cols.push_back(coords(w, base, idx));
		}
	}
	const int n = static_cast<int>(base.size());
	if (static_cast<int>(cols.size()) != n)
		throw std::logic_error("ladder decomposition does not span the weight space");
	Matrix B(n, n);
	for (int j = 0; j < n; ++j)
		for (int i = 0; i < n; ++i)
			B(i, j) = cols[j][i];
	QVec alpha = solve(B, coords(part, base, idx));
	Poly out(r);
	for (std::size_t j = 0; j < inv.size(); ++j)
		out += inv[j] * alpha[j];
	return out;
}

BinaryForm symbolic_binary(int d, const std::string& prefix)
{
	BinaryForm f;
	f.d = d;
	f.ring = binary_ring(d, prefix);
	for (int i = 0; i <= d; ++i)
		f.c.push_back(Poly::var(f.ring, i));
	return f;
}

BinaryForm binary_from_values(const std::vector<Q>& values)
{
	if (values.empty())
		throw std::invalid_argument("empty coefficient list");
	BinaryForm f;
	f.d = static_cast<int>(values.size()) - 1;
	f.ring = make_ring({});
	for (const auto& v : values)
		f.c.push_back(Poly::constant(f.ring, v));
	return f;
}

BinaryForm binary_from_polys(const Ring& ring, const std::vector<Poly>& coeffs)
{
	if (coeffs.empty())
		throw std::invalid_argument("empty coefficient list");
	BinaryForm f;
	f.d = static_cast<int>(coeffs.size()) - 1;
	f.ring = ring;
	for (const auto& c : coeffs)
		f.c.push_back(c.is_zero() ? Poly(ring) : c.in_ring(ring));
	return f;
}

Ring with_xy(const Ring& coeff_ring) { return join_rings(coeff_ring, make_ring({"x", "y"})); }

Poly form_poly(const BinaryForm& f, const Ring& r)
{
	int ix = ring_index(r, "x"), iy = ring_index(r, "y");
	Poly out(r);
	for (int i = 0; i <= f.d; ++i) {
		if (f.c[i].is_zero())
			continue;
		Mono m(r->size(), 0);
		m[ix] = f.d - i;
		m[iy] = i;
		out += f.c[i].in_ring(r) * Poly::monomial(r, m, binom_q(f.d, i));
	}
	return out;
}

BinaryForm form_from_poly(const Poly& p, int degree, const Ring& coeff_ring)
{
	Ring r = p.ring();
	int ix = ring_index(r, "x"), iy = ring_index(r, "y");
	BinaryForm f;
	f.d = degree;
	f.ring = coeff_ring;
	for (int i = 0; i <= degree; ++i) {
		Poly c = p.coeff_of_power(ix, degree - i).coeff_of_power(iy, i);
		c *= 1 / binom_q(degree, i);
		f.c.push_back(c.is_zero() ? Poly(coeff_ring) : c.in_ring(coeff_ring));
	}
	return f;
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int n)
{
	if (n < 0 || n > f.d || n > g.d)
		throw std::invalid_argument("transvectant order out of range");
	Ring cr = join_rings(f.ring, g.ring);
	Ring r = with_xy(cr);
	int ix = ring_index(r, "x"), iy = ring_index(r, "y");
	Poly F = form_poly(binary_from_polys(cr, f.c), r);
	Poly G = form_poly(binary_from_polys(cr, g.c), r);
	auto partial = [&](Poly p, int nx, int ny) {
		for (int k = 0; k < nx; ++k)
			p = p.diff(ix);
		for (int k = 0; k < ny; ++k)
			p = p.diff(iy);
		return p;
	};
	Poly out(r);
	for (int i = 0; i <= n; ++i) {
		Q s = binom_q(n, i);
		if (i % 2)
			s = -s;
		out += partial(F, n - i, i) * partial(G, i, n - i) * s;
	}
	return form_from_poly(out, f.d + g.d - 2 * n, cr);
}

Poly apolarity_pairing(const BinaryForm& f, const BinaryForm& g)
{
	if (f.d != g.d)
		throw std::invalid_argument("apolarity needs equal degrees");
	Ring cr = join_rings(f.ring, g.ring);
	Poly out(cr);
	for (int i = 0; i <= f.d; ++i) {
		if (f.c[i].is_zero() || g.c[f.d - i].is_zero())
			continue;
		Q s = binom_q(f.d, i);
		if (i % 2)
			s = -s;
		out += f.c[i].in_ring(cr) * g.c[f.d - i].in_ring(cr) * s;
	}
	return out;
}

CubicCovariants cubic_covariant_suite(const BinaryForm& f)
{
	if (f.d != 3)
		throw std::invalid_argument("cubic covariant suite needs d = 3");
	CubicCovariants cc;
	const auto& a = f.c;
	Poly p02 = a[0] * a[2] - a[1] * a[1];
	Poly p13 = a[1] * a[3] - a[2] * a[2];
	Poly p03 = a[0] * a[3] - a[1] * a[2];
	cc.disc = p02 * p13 * Q(4) - p03 * p03;
	cc.H = transvectant(f, f, 2);
	for (auto& c : cc.H.c)
		c *= Q(1, 72);
	cc.Qc = transvectant(f, cc.H, 1);
	Ring r = with_xy(f.ring);
	Poly F = form_poly(f, r), H = form_poly(cc.H, r), Qp = form_poly(cc.Qc, r);
	Poly D = cc.disc.is_zero() ? Poly(r) : cc.disc.in_ring(r);
	cc.syzygy = H.pow(3) * Q(36) + D * F * F * Q(9) + Qp * Qp;
	return cc;
}

Poly det3(const Poly m[3][3])
{
	return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
	       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<Poly> gherardelli_determinant(const BinaryForm& f)
{
	if (f.d != 4)
		throw std::invalid_argument("Gherardelli determinant needs d = 4");
	Ring r = join_rings(f.ring, make_ring({"t"}));
	int it = ring_index(r, "t");
	std::vector<Poly> a;
	for (const auto& c : f.c)
		a.push_back(c.is_zero() ? Poly(r) : c.in_ring(r));
	Poly t = Poly::var(r, it);
	Poly m[3][3] = {{a[0], a[1], a[2] + t}, {a[1], a[2] - t * Q(1, 2), a[3]}, {a[2] + t, a[3], a[4]}};
	Poly det = det3(m);
	std::vector<Poly> out;
	for (int k = 0; k <= 3; ++k) {
		Poly c = det.coeff_of_power(it, k);
		out.push_back(c.is_zero() ? Poly(f.ring) : c.in_ring(f.ring));
	}
	return out;
}

Poly quartic_I(const Ring& r)
{
	return parse_poly(r, "a0*a4 - 4*a1*a3 + 3*a2^2");
}

Poly quartic_J(const Ring& r)
{
	return parse_poly(r, "a0*a2*a4 - a0*a3^2 - a1^2*a4 + 2*a1*a2*a3 - a2^3");
}

} // namespace invt
