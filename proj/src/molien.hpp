#pragma once

#include "series.hpp"

#include <map>
#include <string>
#include <vector>

namespace invt {

struct ConjugacyClass {
	std::string name;
	std::vector<int> cycle_type; // cycle lengths ≥ 2, descending; empty for the identity
	long size = 0;
};

// Character data of a symmetric group Σ_n (n ∈ {2,3,4,6}).
struct GroupData {
	std::string name;
	int n = 0;
	long order = 0;
	std::vector<ConjugacyClass> classes;
	std::vector<std::string> character_names;
	std::map<std::string, std::vector<long>> characters;

	int class_count() const { return static_cast<int>(classes.size()); }
	int class_of(std::vector<int> cycle_type) const;
	// Class of g^k for g in class c.
	int power_class(int c, int k) const;
	bool is_even(int c) const;
	long subgroup_order(bool even_only) const;
};

const GroupData& symmetric_group(int n);
// "S2", "S3", "S4", "S6"
const GroupData& group_by_name(const std::string& name);

struct RepresentationCharacter {
	int dim = 0;
	std::vector<Q> values; // per class
};

RepresentationCharacter character_of(const GroupData& G, const std::string& name);

// Elementary symmetric functions e0 … en of the eigenvalues from the power
// traces tr(g), …, tr(g^n).
std::vector<Q> charpoly_from_power_traces(const std::vector<Q>& traces);
// det(1 − q g) for g in class c, as a polynomial in q.
Poly class_charpoly(const RepresentationCharacter& rep, const GroupData& G, int c, const Ring& r);

Series molien_series(const RepresentationCharacter& rep, const GroupData& G, bool even_only, int trunc);

RepresentationCharacter sym_power_character(const RepresentationCharacter& rep, const GroupData& G, int k);
Q invariant_multiplicity(const RepresentationCharacter& chi, const GroupData& G, bool even_only);
// Σ size·χ_i·χ_j / |G|
Q character_inner(const std::vector<long>& a, const std::vector<long>& b, const GroupData& G);

// s · Π(1 − t^{e_i}) agrees with `numerator` up to the truncation of s.
bool series_matches_rational(const Series& s, const Poly& numerator, const std::vector<int>& denominator_exponents);

} // namespace invt
