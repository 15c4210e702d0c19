#include <doctest.h>

#include "binary.hpp"
#include "genfun.hpp"

using namespace invt;

namespace {

Poly normalized(const Poly& p) { return p * (1 / p.lead_coeff()); }

BinaryForm random_form(std::mt19937_64& rng, int d)
{
	std::vector<Q> v;
	for (int i = 0; i <= d; ++i)
		v.push_back(random_q(rng));
	return binary_from_values(v);
}

} // namespace

TEST_CASE("weight spaces match the Gaussian binomial")
{
	CHECK(weight_space(4, 2, 4).size() == 3);
	for (int d = 1; d <= 5; ++d)
		for (int g = 1; g <= 4; ++g) {
			auto h = cayley_sylvester_coefficients(d, g);
			long total = 0;
			for (int p = 0; p <= d * g; ++p) {
				CHECK(static_cast<long>(weight_space(d, g, p).size()) == h[p]);
				total += h[p];
			}
			CHECK(Q(total) == binom_q(d + g, g));
		}
}

TEST_CASE("invariant bases of small binary forms")
{
	Ring r4 = binary_ring(4);
	auto b42 = invariant_basis(4, 2);
	REQUIRE(b42.size() == 1);
	CHECK(b42[0] == quartic_I(r4));
	auto b43 = invariant_basis(4, 3);
	REQUIRE(b43.size() == 1);
	CHECK(b43[0] == normalized(quartic_J(r4)));

	BinaryForm f3 = symbolic_binary(3);
	auto b34 = invariant_basis(3, 4);
	REQUIRE(b34.size() == 1);
	CHECK(b34[0] == normalized(cubic_covariant_suite(f3).disc));

	Ring r2 = binary_ring(2);
	auto b22 = invariant_basis(2, 2);
	REQUIRE(b22.size() == 1);
	CHECK(b22[0] == parse_poly(r2, "a0*a2 - a1^2"));

	CHECK(invariant_basis(5, 4).size() == 1);
	CHECK(invariant_basis(5, 8).size() == 2);
	CHECK(invariant_basis(6, 4).size() == 2);
	CHECK(invariant_basis(6, 6).size() == 3);
	CHECK(invariant_basis(3, 3).empty());
}

TEST_CASE("invariants are killed by both operators")
{
	for (int d = 2; d <= 6; ++d)
		for (int g = 2; g <= 4; ++g)
			for (const auto& p : invariant_basis(d, g)) {
				CHECK(apply_D(p, d).is_zero());
				CHECK(apply_Delta(p, d).is_zero());
			}
}

TEST_CASE("Reynolds operator")
{
	Ring r = binary_ring(4);
	Poly I = quartic_I(r);
	CHECK(reynolds(parse_poly(r, "a0*a4"), 4, 2) == I * Q(2, 5));
	CHECK(reynolds(parse_poly(r, "a1*a3"), 4, 2) == I * Q(-1, 10));
	CHECK(reynolds(parse_poly(r, "a2^2"), 4, 2) == I * Q(1, 15));
	CHECK(reynolds(parse_poly(r, "a0*a3"), 4, 2).is_zero());
	CHECK(reynolds(I, 4, 2) == I);

	// multiplicative over invariant factors
	CHECK(reynolds(I * parse_poly(r, "a0*a4"), 4, 4) == I * I * Q(2, 5));

	std::mt19937_64 rng(5);
	Poly P(r);
	for (const auto& m : weight_space(4, 2, 4))
		P.add_term(m, random_q(rng));
	Poly RP = reynolds(P, 4, 2);
	CHECK(reynolds(RP, 4, 2) == RP);

	CHECK_THROWS_AS(reynolds(parse_poly(r, "a0 + a1*a2"), 4, 2), std::invalid_argument);
	CHECK_THROWS_AS(reynolds(Poly::var(make_ring({"q"}), 0), 4, 1), std::invalid_argument);
}

TEST_CASE("transvectant constants for the quartic")
{
	BinaryForm f = symbolic_binary(4);
	Poly I = quartic_I(f.ring), J = quartic_J(f.ring);
	BinaryForm ff4 = transvectant(f, f, 4);
	REQUIRE(ff4.d == 0);
	CHECK(ff4.c[0] == I * Q(1152));
	BinaryForm h = transvectant(f, f, 2);
	CHECK(h.d == 4);
	BinaryForm j = transvectant(f, h, 4);
	CHECK(j.c[0] == J * Q(497664));
}

TEST_CASE("Hessian of the cubic")
{
	BinaryForm f = symbolic_binary(3);
	BinaryForm h = transvectant(f, f, 2);
	Ring r = f.ring;
	CHECK(h.c[0] == parse_poly(r, "72*(a0*a2 - a1^2)"));
	CHECK(h.c[1] == parse_poly(r, "36*(a0*a3 - a1*a2)"));
	CHECK(h.c[2] == parse_poly(r, "72*(a1*a3 - a2^2)"));

	// (f,f)_2 = 2 (f_xx f_yy - f_xy^2)
	Ring rx = with_xy(r);
	Poly F = form_poly(f, rx);
	int ix = ring_index(rx, "x"), iy = ring_index(rx, "y");
	Poly hess = F.diff(ix).diff(ix) * F.diff(iy).diff(iy) - F.diff(ix).diff(iy).pow(2);
	CHECK(form_poly(h, rx) == hess * Q(2));
}

TEST_CASE("cubic covariant syzygy")
{
	auto cc = cubic_covariant_suite(symbolic_binary(3));
	CHECK(cc.syzygy.is_zero());
	CHECK(cc.Qc.d == 3);

	// xy(x+y): a1 = a2 = 1/3
	auto num = cubic_covariant_suite(binary_from_values({Q(0), Q(1, 3), Q(1, 3), Q(0)}));
	CHECK(num.disc == Poly::constant(num.disc.ring(), Q(1, 27)));
	CHECK(num.syzygy.is_zero());
}

TEST_CASE("apolarity detects linear factors")
{
	std::mt19937_64 rng(3);
	for (int t = 0; t < 10; ++t) {
		Q al = random_q(rng), be = random_q(rng);
		if (al == 0 && be == 0)
			continue;
		std::vector<Q> ld;
		for (int i = 0; i <= 4; ++i) {
			Q v = 1;
			for (int k = 0; k < 4 - i; ++k)
				v *= al;
			for (int k = 0; k < i; ++k)
				v *= be;
			ld.push_back(v);
		}
		BinaryForm l4 = binary_from_values(ld);
		// f = (al x + be y) * cubic
		BinaryForm c = random_form(rng, 3);
		Ring rx = with_xy(c.ring);
		Poly lin = Poly::var(rx, "x") * al + Poly::var(rx, "y") * be;
		BinaryForm f = form_from_poly(lin * form_poly(c, rx), 4, c.ring);
		CHECK(apolarity_pairing(f, l4).is_zero());
		BinaryForm g = random_form(rng, 4);
		Poly v = apolarity_pairing(g, l4);
		// a random quartic is apolar only by accident
		Ring rg = with_xy(g.ring);
		Poly G = form_poly(g, rg);
		std::vector<Q> at = {be, -al};
		CHECK((v.is_zero() ? Q(0) : v.lead_coeff()) == G.eval(at));
	}
}

TEST_CASE("Gherardelli determinant expansion")
{
	BinaryForm f = symbolic_binary(4);
	auto c = gherardelli_determinant(f);
	Poly I = quartic_I(f.ring), J = quartic_J(f.ring);
	CHECK(c[0] == J);
	CHECK(c[2].is_zero());
	CHECK(c[3] == Poly::constant(f.ring, Q(1, 2)));
	// the linear coefficient comes out as -I/2
	CHECK(c[1] == I * Q(-1, 2));
}

TEST_CASE("commutator of the lowering and raising operators")
{
	for (int d = 1; d <= 5; ++d)
		for (int g = 1; g <= 4; ++g)
			for (int p = 0; p <= d * g; ++p)
				for (const auto& m : weight_space(d, g, p)) {
					Poly P = Poly::monomial(binary_ring(d), m);
					Poly c = apply_D(apply_Delta(P, d), d) - apply_Delta(apply_D(P, d), d);
					CHECK(c == P * Q(d * g - 2 * p));
				}
	CHECK_THROWS_AS(apply_D(Poly::var(make_ring({"b0"}), 0), 2), std::invalid_argument);
}
