#include <doctest.h>

#include "ternary.hpp"

using namespace invt;

namespace {

TernaryForm random_ternary(std::mt19937_64& rng, int d)
{
	std::vector<Q> v;
	for (std::size_t i = 0; i < ternary_indices(d).size(); ++i)
		v.push_back(random_q(rng));
	return ternary_from_values(d, v);
}

TernaryForm power_sum(std::mt19937_64& rng, int d, int count)
{
	TernaryForm f = linear_power({random_q(rng), random_q(rng), random_q(rng)}, d);
	for (int k = 1; k < count; ++k)
		f = ternary_sum(f, linear_power({random_q(rng), random_q(rng), random_q(rng)}, d));
	return f;
}

Q value(const Poly& p) { return p.is_zero() ? Q(0) : p.lead_coeff(); }

} // namespace

TEST_CASE("ternary index order and ring names")
{
	auto idx = ternary_indices(2);
	std::vector<TIndex> want = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
	CHECK(idx == want);
	for (std::size_t i = 0; i < idx.size(); ++i)
		CHECK(ternary_position(2, idx[i]) == static_cast<int>(i));
	Ring r = ternary_ring(4);
	CHECK((*r)[0] == "f400");
	CHECK((*r)[14] == "f004");
	CHECK_THROWS(ternary_position(2, {1, 1, 1}));
}

TEST_CASE("isobaric monomial counts")
{
	CHECK(ternary_isobaric_monomials(4, 3).size() == 23);
	CHECK(ternary_isobaric_monomials(3, 6).size() == 103);
	CHECK(ternary_isobaric_monomials(3, 4).size() == 25);
	CHECK(ternary_isobaric_monomials(4, 2).empty());
}

TEST_CASE("lowering operators on a single coefficient")
{
	Ring r = ternary_ring(4);
	Poly P = parse_poly(r, "f400*f040*f004");
	CHECK(apply_D1(P, 4) == parse_poly(r, "4*f400*f130*f004"));
	CHECK(apply_D2(P, 4) == parse_poly(r, "4*f400*f040*f013"));
}

TEST_CASE("cubic invariant of plane quartics")
{
	const Poly& A = quartic_cubic_invariant();
	CHECK(A.size() == 23);
	CHECK(apply_D1(A, 4).is_zero());
	CHECK(apply_D2(A, 4).is_zero());
	Ring r = ternary_ring(4);
	CHECK(A.coeff(parse_poly(r, "f400*f040*f004").lead_mono()) == 1);
	CHECK(A.coeff(parse_poly(r, "f211*f121*f112").lead_mono()) == -12);

	std::mt19937_64 rng(17);
	for (int t = 0; t < 5; ++t) {
		TernaryForm f = random_ternary(rng, 4);
		CHECK(value(trilinear_A(f, f, f)) == value(evaluate_on_form(A, f)));
	}
	// polarization is symmetric
	TernaryForm f = random_ternary(rng, 4), g = random_ternary(rng, 4), h = random_ternary(rng, 4);
	CHECK(trilinear_A(f, g, h) == trilinear_A(h, f, g));
}

TEST_CASE("Clebsch catalecticant detects five powers")
{
	std::mt19937_64 rng(23);
	for (int t = 0; t < 3; ++t) {
		CHECK(clebsch_catalecticant(power_sum(rng, 4, 5)).det() == 0);
		CHECK(clebsch_catalecticant(random_ternary(rng, 4)).det() != 0);
	}
	CHECK(clebsch_catalecticant(random_ternary(rng, 4)).is_symmetric());
}

TEST_CASE("Aronhold invariant")
{
	const Poly& ar = aronhold_invariant();
	CHECK(ar.size() == 25);
	std::mt19937_64 rng(29);
	for (int t = 0; t < 5; ++t) {
		CHECK(evaluate_on_form(ar, power_sum(rng, 3, 3)).is_zero());
		TernaryForm f = random_ternary(rng, 3);
		CHECK(value(aronhold_pfaffian(f)) == value(evaluate_on_form(ar, f)) * Q(-3));
	}
}

TEST_CASE("pfaffian of small skew matrices")
{
	Ring r = make_ring({"a", "b", "c", "d", "e", "f"});
	auto v = [&](int i) { return Poly::var(r, i); };
	Poly z(r);
	std::vector<std::vector<Poly>> m2 = {{z, v(0)}, {-v(0), z}};
	CHECK(pfaffian(m2) == v(0));
	std::vector<std::vector<Poly>> m4 = {{z, v(0), v(1), v(2)},
	                                     {-v(0), z, v(3), v(4)},
	                                     {-v(1), -v(3), z, v(5)},
	                                     {-v(2), -v(4), -v(5), z}};
	CHECK(pfaffian(m4) == v(0) * v(5) - v(1) * v(4) + v(2) * v(3));

	std::mt19937_64 rng(31);
	Ring e = make_ring({});
	std::vector<std::vector<Poly>> m6(6, std::vector<Poly>(6, Poly(e)));
	Matrix num(6, 6);
	for (int i = 0; i < 6; ++i)
		for (int j = i + 1; j < 6; ++j) {
			Q q = random_q(rng);
			m6[i][j] = Poly::constant(e, q);
			m6[j][i] = Poly::constant(e, -q);
			num(i, j) = q;
			num(j, i) = -q;
		}
	Q pf = value(pfaffian(m6));
	CHECK(pf * pf == num.det());
}

TEST_CASE("Scorza quartic")
{
	// the polar cubic of a Fermat quartic is diagonal, a sum of three cubes
	std::vector<Q> v(15, Q(0));
	v[ternary_position(4, {4, 0, 0})] = 1;
	v[ternary_position(4, {0, 4, 0})] = 1;
	v[ternary_position(4, {0, 0, 4})] = 1;
	CHECK(scorza_quartic(ternary_from_values(4, v)).is_zero());

	std::mt19937_64 rng(37);
	Poly s = scorza_quartic(random_ternary(rng, 4));
	CHECK_FALSE(s.is_zero());
	CHECK(s.is_homogeneous());
	CHECK(s.degree() == 4);
}
