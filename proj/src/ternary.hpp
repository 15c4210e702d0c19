#pragma once

#include "linalg.hpp"
#include "poly.hpp"

#include <array>
#include <string>
#include <vector>

namespace invt {

using TIndex = std::array<int, 3>;

// (i0,i1,i2) with i0+i1+i2 = d, i0 descending then i1 descending.
std::vector<TIndex> ternary_indices(int d);
int ternary_position(int d, const TIndex& t);

// f400, f310, … (digits concatenated; d ≤ 9).
Ring ternary_ring(int d, const std::string& prefix = "f");

std::vector<Mono> ternary_weight_space(int d, int g, const TIndex& w);
std::vector<Mono> ternary_isobaric_monomials(int d, int g);

Poly apply_D1(const Poly& P, int d);
Poly apply_D2(const Poly& P, int d);

std::vector<Poly> ternary_invariant_basis(int d, int g);

// f = Σ (d!/(i0!i1!i2!)) c_t x0^i0 x1^i1 x2^i2, c in ternary_indices order.
struct TernaryForm {
	int d = 0;
	Ring ring;
	std::vector<Poly> c;

	const Poly& at(const TIndex& t) const { return c[ternary_position(d, t)]; }
};

TernaryForm symbolic_ternary(int d, const std::string& prefix = "f");
TernaryForm ternary_from_values(int d, const std::vector<Q>& values);
// (l0 x0 + l1 x1 + l2 x2)^d
TernaryForm linear_power(const std::array<Q, 3>& l, int d);
TernaryForm ternary_sum(const TernaryForm& a, const TernaryForm& b);

Ring with_x012(const Ring& coeff_ring);
Poly ternary_form_poly(const TernaryForm& f, const Ring& r);

// Substitute the coefficients of f into a polynomial over ternary_ring(d).
Poly evaluate_on_form(const Poly& invariant, const TernaryForm& f);

// The normalized degree-3 invariant of plane quartics and the Aronhold invariant.
const Poly& quartic_cubic_invariant();
const Poly& aronhold_invariant();

// Symmetric trilinear form with A(f,f,f) equal to the cubic invariant.
Poly trilinear_A(const TernaryForm& f, const TernaryForm& g, const TernaryForm& h);

Matrix clebsch_catalecticant(const TernaryForm& f);

// 8×8 skew matrix of the contraction on End_0 and its pfaffian.
std::vector<std::vector<Poly>> aronhold_matrix(const TernaryForm& phi);
Poly aronhold_pfaffian(const TernaryForm& phi);
Poly pfaffian(const std::vector<std::vector<Poly>>& m);

// First polar Σ x_m ∂F/∂x_m, coefficients in the joined ring of F and x.
TernaryForm polar_cubic(const TernaryForm& F, const std::array<Poly, 3>& x);
// Aronhold invariant of the polar cubic as a quartic in x0, x1, x2.
Poly scorza_quartic(const TernaryForm& F);

} // namespace invt
