#include <doctest.h>

#include "molien.hpp"

using namespace invt;

TEST_CASE("character tables are consistent")
{
	for (int n : {2, 3, 4, 6}) {
		const GroupData& G = symmetric_group(n);
		long total = 0;
		for (const auto& c : G.classes)
			total += c.size;
		CHECK(total == G.order);
		CHECK(static_cast<int>(G.character_names.size()) == G.class_count());
		for (const auto& a : G.character_names)
			for (const auto& b : G.character_names)
				CHECK(character_inner(G.characters.at(a), G.characters.at(b), G) == (a == b ? 1 : 0));
		// column orthogonality: Σ_χ χ(c)χ(c') = δ |G|/|c|
		for (int c = 0; c < G.class_count(); ++c)
			for (int c2 = 0; c2 < G.class_count(); ++c2) {
				long s = 0;
				for (const auto& nm : G.character_names)
					s += G.characters.at(nm)[c] * G.characters.at(nm)[c2];
				CHECK(s == (c == c2 ? G.order / G.classes[c].size : 0));
			}
	}
	CHECK(symmetric_group(6).subgroup_order(true) == 360);
	CHECK(&group_by_name("S4") == &symmetric_group(4));
	CHECK_THROWS(group_by_name("S5"));
	CHECK_THROWS(group_by_name("A4"));
}

TEST_CASE("power maps of S6")
{
	const GroupData& G = symmetric_group(6);
	auto row = [&](int k) {
		std::vector<std::string> out;
		for (int c = 0; c < G.class_count(); ++c)
			out.push_back(G.classes[G.power_class(c, k)].name);
		return out;
	};
	using V = std::vector<std::string>;
	CHECK(row(2) == V{"C1", "C1", "C1", "C1", "C5", "C5", "C7", "C3", "C3", "C10", "C7"});
	CHECK(row(3) == V{"C1", "C2", "C3", "C4", "C1", "C2", "C1", "C8", "C9", "C10", "C4"});
	CHECK(row(4) == V{"C1", "C1", "C1", "C1", "C5", "C5", "C7", "C1", "C1", "C10", "C7"});
	CHECK(row(5) == V{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C1", "C11"});
}

TEST_CASE("characteristic polynomials")
{
	const GroupData& G = symmetric_group(6);
	Ring r = make_ring({"q"});
	RepresentationCharacter std5 = character_of(G, "X2");
	CHECK(class_charpoly(std5, G, 0, r) == parse_poly(r, "(1 - q)^5"));
	CHECK(class_charpoly(std5, G, G.class_of({5}), r) == parse_poly(r, "1 - q^5"));
	CHECK(class_charpoly(std5, G, G.class_of({6}), r) == parse_poly(r, "1 + q + q^2 + q^3 + q^4 + q^5"));
	const GroupData& S2 = symmetric_group(2);
	CHECK(class_charpoly(character_of(S2, "sign"), S2, 1, r) == parse_poly(r, "1 + q"));
	// power sums of eigenvalues {1, -1}
	CHECK(charpoly_from_power_traces({Q(0), Q(2)}) == std::vector<Q>{Q(1), Q(0), Q(-1)});
}

TEST_CASE("Molien series")
{
	const GroupData& G = symmetric_group(6);
	const int N = 12;
	Ring r = make_ring({"t"});
	for (const auto& nm : G.character_names)
		for (bool even : {false, true}) {
			INFO(nm << (even ? " even" : ""));
			Series s = molien_series(character_of(G, nm), G, even, N);
			CHECK(s.coeff(0) == 1);
			for (int k = 0; k <= N; ++k) {
				Q c = s.coeff(k);
				CHECK(c >= 0);
				CHECK(c.get_den() == 1);
			}
			// agreement with symmetric power characters
			for (int k = 0; k <= 3; ++k)
				CHECK(s.coeff(k) == invariant_multiplicity(sym_power_character(character_of(G, nm), G, k), G, even));
		}
	// standard representation: symmetric functions e2 … e6
	Series std5 = molien_series(character_of(G, "X2"), G, false, N);
	CHECK(series_matches_rational(std5, Poly::constant(r, Q(1)), {2, 3, 4, 5, 6}));
	CHECK_FALSE(series_matches_rational(std5, Poly::constant(r, Q(1)), {2, 3, 4, 5}));
	// X5 and X8 differ by the sign character, so they agree on Alt(6)
	CHECK(molien_series(character_of(G, "X5"), G, true, N) == molien_series(character_of(G, "X8"), G, true, N));
	CHECK_FALSE(molien_series(character_of(G, "X5"), G, false, N) == molien_series(character_of(G, "X8"), G, false, N));
}

TEST_CASE("symmetric power characters")
{
	const GroupData& G = symmetric_group(6);
	CHECK(sym_power_character(character_of(G, "X5"), G, 2).dim == 15);
	CHECK(sym_power_character(character_of(G, "X5"), G, 3).dim == 35);
	CHECK_THROWS(sym_power_character(character_of(G, "X5"), G, 4));
	CHECK_THROWS(character_of(G, "X12"));
	RepresentationCharacter bad{3, {Q(1), Q(1)}};
	CHECK_THROWS(molien_series(bad, G, false, 4));
}
