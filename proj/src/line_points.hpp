#pragma once

#include "tableaux.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace invt {

using Edge = std::pair<int, int>;

// Edges are brackets (ij) of points on the line. Stored as two-label
// columns of a BracketExpr: (min,max) with the orientation sign absorbed.
struct GraphCombination {
	int d = 0;
	BracketExpr expr;

	bool is_zero() const { return expr.is_zero(); }
	std::string str() const; // "(12)(34) + (14)(23)"
	friend bool operator==(const GraphCombination& a, const GraphCombination& b)
	{
		return a.d == b.d && a.expr == b.expr;
	}
};

GraphCombination graph_from_arrows(int d, const std::vector<Edge>& arrows, const Q& c = Q(1));
GraphCombination operator+(const GraphCombination& a, const GraphCombination& b);
GraphCombination operator-(const GraphCombination& a, const GraphCombination& b);
GraphCombination operator*(const GraphCombination& a, const Q& c);

// "(13)(24)", "(65)(21)(43) - 2(12)^2(34)"; d = largest label unless given.
GraphCombination parse_graph(const std::string& text, int d = 0);

std::vector<int> valence(const BracketMono& m, int d);
bool edges_cross(const Column& e, const Column& f);
bool is_noncrossing(const BracketMono& m);

// Noncrossing multigraphs on 1…d with vertex i of degree h[i-1], sorted.
std::vector<BracketMono> noncrossing_matchings(int d, const std::vector<int>& h);

GraphCombination graph_straighten(const GraphCombination& G);

using LinePoint = std::array<Q, 2>;
Q graph_evaluate(const GraphCombination& G, const std::vector<LinePoint>& points);
std::vector<LinePoint> random_line_points(std::mt19937_64& rng, int d);

// Ring x1…xd, y1…yd; (ij) = x_i y_j − x_j y_i.
Ring line_point_ring(int d);
Poly graph_polynomial(const GraphCombination& G);

// σ acts on labels: vertex i becomes perm[i-1].
GraphCombination permute_graph(const GraphCombination& G, const std::vector<int>& perm);

// Six points.
const std::vector<GraphCombination>& six_point_t(); // t0 … t5
const std::vector<GraphCombination>& joubert();     // A … F
// Coordinates on t1 … t5 after straightening.
std::array<Q, 5> t_coordinates(const GraphCombination& G);

struct SignedIndex {
	int index = 0;
	int sign = 1;
};
// Image of each Joubert invariant under a point permutation, or nullopt when
// some image is not ± a Joubert invariant.
std::optional<std::vector<SignedIndex>> joubert_action(const std::vector<int>& perm);

struct CheckItem {
	std::string name;
	bool pass = false;
	std::string detail;
};

std::vector<CheckItem> coble_ring_checks(std::uint64_t seed, int trials = 20);

struct HallResult {
	bool perfect = false;
	std::vector<int> match;     // left vertex -> right vertex
	std::vector<int> violating; // left vertices Y with |N(Y)| < |Y|
};

// Bipartite graph with adjacency lists of left vertices into 0…right-1.
HallResult hall_perfect_matching(int left, int right, const std::vector<std::vector<int>>& adj);

} // namespace invt
