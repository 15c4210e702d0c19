#include <doctest.h>

#include "linalg.hpp"
#include "poly.hpp"
#include "series.hpp"

using namespace invt;

TEST_CASE("rationals stay canonical")
{
	CHECK(make_q(6, -4) == Q(-3, 2));
	CHECK(q_str(make_q(6, -4)) == "-3/2");
	CHECK(q_str(make_q(8, 4)) == "2");
	CHECK(parse_q("10/4") == Q(5, 2));
	CHECK_THROWS_AS(parse_q("1/0"), std::invalid_argument);
	CHECK_THROWS_AS(parse_q("abc"), std::invalid_argument);
	CHECK(binom_q(5, 2) == 10);
	CHECK(binom_q(3, 5) == 0);
	CHECK(factorial_q(6) == 720);
}

TEST_CASE("polynomial arithmetic and printing")
{
	Ring r = make_ring({"x", "y"});
	Poly x = Poly::var(r, "x"), y = Poly::var(r, "y");
	Poly s = (x + y).pow(2);
	CHECK(s.str() == "x^2 + 2*x*y + y^2");
	CHECK((x * Q(2, 5)).str() == "2/5*x");
	CHECK((s - x * x - y * y) == x * y * Q(2));
	CHECK(s.diff(0) == x * Q(2) + y * Q(2));
	CHECK(s.eval({Q(1), Q(2)}) == 9);
	CHECK(s.degree() == 2);
	CHECK(s.is_homogeneous());
	CHECK_FALSE((s + x).is_homogeneous());
	CHECK((x * x * x + x * y).lead_mono() == Mono{3, 0});
	CHECK(s.coeff_of_power(0, 1) == y * Q(2));

	// x -> x + y, y -> x - y
	Poly t = s.subs({x + y, x - y});
	CHECK(t == x * x * Q(4));
}

TEST_CASE("parser round trip and errors")
{
	Ring r = make_ring({"a0", "a1", "a2"});
	Poly p = parse_poly(r, "3/2*a0^2*a1 - (a1 - a2)^2 + 7");
	CHECK(parse_poly(r, p.str()) == p);
	CHECK(p.coeff(Mono{0, 1, 1}) == 2);
	CHECK_THROWS(parse_poly(r, "a0 +"));
	CHECK_THROWS(parse_poly(r, "b1"));
	CHECK_THROWS(parse_poly(r, "(a0"));
}

TEST_CASE("ring changes")
{
	Ring r = make_ring({"x", "y"});
	Ring big = join_rings(r, make_ring({"y", "z"}));
	CHECK(big->size() == 3);
	Poly x = Poly::var(r, "x");
	CHECK(x.in_ring(big) == Poly::var(big, "x"));
	CHECK_THROWS_AS(Poly::var(big, "z").in_ring(r), std::invalid_argument);
}

TEST_CASE("series inverse, rational series and Phi")
{
	Ring z = make_ring({"z"});
	Poly one_minus = Poly::constant(z, Q(1)) - Poly::var(z, 0);
	Series inv = Series::from_poly(one_minus, 10).inverse();
	for (int k = 0; k <= 10; ++k)
		CHECK(inv.coeff(k) == 1);
	CHECK(inv * Series::from_poly(one_minus, 10) == Series::one(z, 10));

	Series even = rational_series(Poly::constant(z, Q(1)), {Mono{2}}, 12);
	CHECK(even.coeff(4) == 1);
	CHECK(even.coeff(5) == 0);
	Series halved = phi_j(even, 2);
	CHECK(halved.trunc() == 6);
	CHECK(halved == rational_series(Poly::constant(z, Q(1)), {Mono{1}}, 6));

	CHECK_THROWS(Series::from_poly(Poly::var(z, 0), 5).inverse());
	CHECK_THROWS(series_inverse_factor(z, Mono{0}, 5));
}

TEST_CASE("matrix rank, determinant, kernel, solve")
{
	Matrix m = Matrix::from_rows({{Q(2), Q(0), Q(1)}, {Q(1), Q(3), Q(2)}, {Q(1), Q(1), Q(2)}});
	CHECK(m.det() == 6);
	CHECK(m.rank() == 3);
	QVec x = solve(m, {Q(3), Q(6), Q(4)});
	CHECK(m.apply(x) == QVec{Q(3), Q(6), Q(4)});

	Matrix s = Matrix::from_rows({{Q(1), Q(2), Q(3)}, {Q(2), Q(4), Q(6)}});
	auto ker = kernel_basis(s);
	REQUIRE(ker.size() == 2);
	CHECK(ker[0] == QVec{Q(1), Q(0), Q(-1, 3)});
	CHECK(ker[1] == QVec{Q(0), Q(1), Q(-2, 3)});
	for (const auto& v : ker)
		CHECK(s.apply(v) == QVec{Q(0), Q(0)});

	Matrix sing = Matrix::from_rows({{Q(1), Q(2)}, {Q(2), Q(4)}});
	CHECK(sing.det() == 0);
	CHECK_THROWS(solve(sing, {Q(1), Q(1)}));
}
