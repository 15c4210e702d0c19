#pragma once

#include "linalg.hpp"
#include "poly.hpp"

#include <string>
#include <vector>

namespace invt {

// a0 … ad (or another prefix), in that order.
Ring binary_ring(int d, const std::string& prefix = "a");

// Degree-g monomials in a0…ad of weight p (a_i has weight i), lex-descending.
std::vector<Mono> weight_space(int d, int g, int p);

struct WeightedMonomialSpace {
	int d = 0;
	int g = 0;
	int p = 0;
	std::vector<Mono> basis;
};

// The weight-dg/2 space; empty basis when dg is odd.
WeightedMonomialSpace isobaric_monomials(int d, int g);

Poly apply_D(const Poly& P, int d);
Poly apply_Delta(const Poly& P, int d);

std::vector<Poly> invariant_basis(int d, int g);

// Projection onto the invariants; P homogeneous of degree g in a0…ad.
Poly reynolds(const Poly& P, int d, int g);

// f = Σ C(d,i) c_i x^{d-i} y^i; coefficients live in `ring`.
struct BinaryForm {
	int d = 0;
	Ring ring;
	std::vector<Poly> c;
};

BinaryForm symbolic_binary(int d, const std::string& prefix = "a");
BinaryForm binary_from_values(const std::vector<Q>& values);
BinaryForm binary_from_polys(const Ring& ring, const std::vector<Poly>& coeffs);

// Polynomial in the coefficient ring extended by x, y.
Poly form_poly(const BinaryForm& f, const Ring& with_xy);
Ring with_xy(const Ring& coeff_ring);
BinaryForm form_from_poly(const Poly& p, int degree, const Ring& coeff_ring);

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int n);
Poly apolarity_pairing(const BinaryForm& f, const BinaryForm& g);

struct CubicCovariants {
	Poly disc;     // 4(a0a2−a1²)(a1a3−a2²) − (a0a3−a1a2)²
	BinaryForm H;  // (f,f)_2 / 72
	BinaryForm Qc; // (f,H)_1
	Poly syzygy;   // 36H³ + 9Δf² + Q², in the coefficient ring with x, y
};

CubicCovariants cubic_covariant_suite(const BinaryForm& f);

// Coefficients of t^0 … t^3 in det [[a0,a1,a2+t],[a1,a2−t/2,a3],[a2+t,a3,a4]].
std::vector<Poly> gherardelli_determinant(const BinaryForm& f);

Poly det3(const Poly m[3][3]);

// Named quartic invariants in a0…a4: I = a0a4 − 4a1a3 + 3a2² and the catalecticant J.
Poly quartic_I(const Ring& r);
Poly quartic_J(const Ring& r);

} // namespace invt
