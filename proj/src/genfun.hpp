#pragma once

#include "series.hpp"

#include <map>
#include <vector>

namespace invt {

// Gaussian binomial [d+g choose g]_x as a polynomial in x; coefficient p is
// the number of degree-g monomials in a0…ad of weight p.
Poly cayley_sylvester_polynomial(int d, int g);
std::vector<long> cayley_sylvester_coefficients(int d, int g);

long binary_invariant_dim(int d, int g);
// order e -> multiplicity of S^e in S^g(S^d)
std::map<int, long> covariant_multiplicities(int d, int g);

// Π_{i1+i2 ≤ d} 1/(1 − x1^i1 x2^i2 y), truncated at y-degree N.
Series ternary_weight_enumerator(int d, int trunc);
// dim of degree-g monomials in ternary coefficients with weight (p0,p1,p2).
long ternary_weight_count(const Series& enumerator, int g, int p0, int p1, int p2);
long bedratyuk_invariant_dim(int d, int g);

Series springer_covariant_series(int d, int e, int trunc);
// Ring (z, w) with weights (1, 0): z counts degree, w counts order.
Series springer_bigraded(int d, int trunc);

long howe_dimension(int d, int k);

// p(n) for n ≤ N.
std::vector<long> partition_counts(int trunc);

Ring univariate_ring(const std::string& name);

} // namespace invt
