#include <doctest.h>

#include "line_points.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <numeric>

using namespace invt;

namespace {

std::string images(const std::vector<int>& perm)
{
	auto a = joubert_action(perm);
	if (!a)
		return "none";
	std::string s;
	for (const auto& si : *a)
		s += std::string(si.sign < 0 ? "-" : "+") + char('A' + si.index);
	return s;
}

int sign_of(const std::vector<int>& p)
{
	int s = 1;
	for (std::size_t i = 0; i < p.size(); ++i)
		for (std::size_t j = i + 1; j < p.size(); ++j)
			if (p[i] > p[j])
				s = -s;
	return s;
}

} // namespace

TEST_CASE("noncrossing matchings")
{
	CHECK(noncrossing_matchings(4, {1, 1, 1, 1}).size() == 2);
	CHECK(noncrossing_matchings(3, {2, 2, 2}).size() == 1);
	const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
	for (int n = 1; n <= 6; ++n)
		CHECK(noncrossing_matchings(2 * n, std::vector<int>(2 * n, 1)).size() == catalan[n]);
	for (const auto& m : noncrossing_matchings(6, {2, 2, 2, 2, 2, 2})) {
		CHECK(is_noncrossing(m));
		CHECK(valence(m, 6) == std::vector<int>(6, 2));
	}
	CHECK(noncrossing_matchings(3, {1, 1, 1}).empty());
	CHECK(edges_cross({1, 3}, {2, 4}));
	CHECK_FALSE(edges_cross({1, 4}, {2, 3}));
	CHECK_FALSE(edges_cross({1, 2}, {2, 3}));
}

TEST_CASE("graph straightening")
{
	CHECK(graph_straighten(parse_graph("(13)(24)")).str() == "(12)(34) + (14)(23)");
	CHECK(parse_graph("(21)") == parse_graph("-(12)"));
	CHECK(parse_graph("(11)(23)").is_zero());
	GraphCombination G = graph_straighten(parse_graph("(14)(25)(36)"));
	for (const auto& [m, c] : G.expr.terms())
		CHECK(is_noncrossing(m));
	CHECK(graph_straighten(G) == G);

	std::mt19937_64 rng(5);
	for (int t = 0; t < 100; ++t) {
		std::vector<int> stubs;
		for (int i = 1; i <= 6; ++i)
			for (int k = 0; k < 2; ++k)
				stubs.push_back(i);
		std::shuffle(stubs.begin(), stubs.end(), rng);
		std::vector<Edge> arrows;
		for (int i = 0; i < 12; i += 2)
			arrows.push_back({stubs[i], stubs[i + 1]});
		GraphCombination g = graph_from_arrows(6, arrows);
		GraphCombination s = graph_straighten(g);
		auto pts = random_line_points(rng, 6);
		CHECK(graph_evaluate(g, pts) == graph_evaluate(s, pts));
		for (const auto& [m, c] : s.expr.terms())
			CHECK(is_noncrossing(m));
	}
}

TEST_CASE("graph evaluation")
{
	std::vector<LinePoint> pts = {{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}, {Q(2), Q(1)}};
	CHECK(graph_evaluate(parse_graph("(12)", 4), pts) == 1);
	CHECK(graph_evaluate(parse_graph("(12)(34)", 4), pts) == -1);
	CHECK(graph_evaluate(parse_graph("(34)^2 - (13)"), pts) == 0);
	CHECK_THROWS(graph_evaluate(parse_graph("(15)", 5), pts));
	CHECK_THROWS(parse_graph("(1)"));
	CHECK_THROWS(parse_graph("(12"));
	Poly p = graph_polynomial(parse_graph("(12)"));
	CHECK(p == parse_poly(line_point_ring(2), "x1*y2 - x2*y1"));
}

TEST_CASE("Joubert invariants")
{
	const auto& J = joubert();
	REQUIRE(J.size() == 6);
	using R = std::array<Q, 5>;
	CHECK(t_coordinates(J[0]) == R{-4, -4, 2, 2, 2});
	CHECK(t_coordinates(J[1]) == R{0, 0, 2, 2, -2});
	CHECK(t_coordinates(J[2]) == R{0, 0, -2, 2, 2});
	CHECK(t_coordinates(J[3]) == R{0, 4, -2, -2, -2});
	CHECK(t_coordinates(J[4]) == R{4, 0, -2, -2, -2});
	CHECK(t_coordinates(J[5]) == R{0, 0, 2, -2, 2});

	// A … E span the degree-1 invariants
	Matrix m(5, 5);
	for (int i = 0; i < 5; ++i) {
		auto c = t_coordinates(J[i]);
		for (int j = 0; j < 5; ++j)
			m(i, j) = c[j];
	}
	CHECK(m.det() != 0);

	CHECK(images({2, 1, 3, 4, 5, 6}) == "-D-E-F-A-B-C");
	CHECK(images({3, 2, 1, 4, 5, 6}) == "-F-D-E-B-C-A");
	CHECK(images({2, 3, 4, 5, 6, 1}) == "-A-C-F-E-D-B");

	std::vector<int> p(6);
	std::iota(p.begin(), p.end(), 1);
	int count = 0;
	do {
		auto a = joubert_action(p);
		REQUIRE(a);
		std::vector<int> idx;
		for (const auto& si : *a) {
			CHECK(si.sign == sign_of(p));
			idx.push_back(si.index);
		}
		std::sort(idx.begin(), idx.end());
		CHECK(idx == std::vector<int>{0, 1, 2, 3, 4, 5});
		++count;
	} while (std::next_permutation(p.begin(), p.end()) && count < 720);
	CHECK(count == 720);
}

TEST_CASE("Hall matchings")
{
	std::vector<std::vector<int>> k33 = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
	CHECK(hall_perfect_matching(3, 3, k33).perfect);

	std::vector<std::vector<int>> gap = {{0}, {0}, {1, 2}};
	HallResult h = hall_perfect_matching(3, 3, gap);
	CHECK_FALSE(h.perfect);
	CHECK(h.violating.size() == 2);

	std::vector<std::vector<int>> isolated = {{0, 1}, {}, {1}};
	HallResult hi = hall_perfect_matching(3, 3, isolated);
	CHECK_FALSE(hi.perfect);
	CHECK(std::find(hi.violating.begin(), hi.violating.end(), 1) != hi.violating.end());

	// m-regular bipartite graphs always have a perfect matching
	std::mt19937_64 rng(3);
	for (int t = 0; t < 30; ++t) {
		const int n = 8, deg = 1 + t % 4;
		std::vector<std::vector<int>> adj(n);
		for (int r = 0; r < deg; ++r) {
			std::vector<int> perm(n);
			std::iota(perm.begin(), perm.end(), 0);
			std::shuffle(perm.begin(), perm.end(), rng);
			for (int i = 0; i < n; ++i)
				adj[i].push_back(perm[i]);
		}
		HallResult res = hall_perfect_matching(n, n, adj);
		REQUIRE(res.perfect);
		std::vector<int> used(res.match);
		std::sort(used.begin(), used.end());
		CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
		for (int i = 0; i < n; ++i)
			CHECK(std::find(adj[i].begin(), adj[i].end(), res.match[i]) != adj[i].end());
	}
}

TEST_CASE("relations in the ring of six points")
{
	for (const auto& c : coble_ring_checks(11, 5)) {
		INFO(c.name << ": " << c.detail);
		CHECK(c.pass);
	}
}
