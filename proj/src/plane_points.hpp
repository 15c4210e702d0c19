#pragma once

#include "line_points.hpp"

#include <array>
#include <random>
#include <vector>

namespace invt {

// Six (or more) points of the plane. Coordinates are polynomials in a ring
// that also holds x0, x1, x2; numeric configurations use constants.
struct PlaneConfig {
	Ring ring;
	std::vector<std::array<Poly, 3>> pts;
	std::array<Poly, 3> x;
};

PlaneConfig plane_config(const std::vector<std::array<Q, 3>>& points);
// Points with symbolic coordinates p<i>_<c>, i = 1…n.
PlaneConfig symbolic_plane_config(int n);
std::vector<std::array<Q, 3>> random_plane_points(std::mt19937_64& rng, int n);
PlaneConfig permute_config(const PlaneConfig& c, const std::vector<int>& perm); // point i ← point perm[i-1]

// Point indices are 0-based here: P0 … P5.
Poly bracket3(const PlaneConfig& c, int i, int j, int k);
Poly line_form(const PlaneConfig& c, int i, int j);

// [014][234][02x][13x] − [024][134][01x][23x] over P0…P4.
Poly conic_through_five(const PlaneConfig& c);
// [014][234][025][135] − [024][134][015][235]
Poly conic_invariant_d2(const PlaneConfig& c);

// (ij,kl,mn) = (ijm)(kln) − (ijn)(klm), labels 1…6.
Poly lagrange_bracket(const PlaneConfig& c, int i, int j, int k, int l, int m, int n);

struct CremonaData {
	std::vector<Poly> cubics; // a … f
	std::vector<Poly> bars;   // ā … f̄
};
CremonaData cremona_cubics(const PlaneConfig& c);

Poly morley_covariant(const CremonaData& cd);

// Restriction of a cubic in six variables a…f to the line of each pair
// partition, cut by Σa = 0 and Σ ā·a = 0. Returns partitions that fail.
std::vector<std::string> hexahedral_line_check(const Poly& cubic6, const std::vector<Q>& bars);
// The cubic a³ + … + f³ in ring a…f.
Poly hexahedral_sum_of_cubes();

std::vector<CheckItem> plane_checks(std::uint64_t seed, int trials = 20);

} // namespace invt
