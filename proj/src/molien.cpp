#include "molien.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace invt {

namespace {

struct ClassRow {
	const char* name;
	std::vector<int> type;
	long size;
};

GroupData build(const std::string& name, int n, const std::vector<ClassRow>& rows,
                const std::vector<std::pair<std::string, std::vector<long>>>& chars)
{
	GroupData G;
	G.name = name;
	G.n = n;
	for (const auto& r : rows) {
		G.classes.push_back({r.name, r.type, r.size});
		G.order += r.size;
	}
	for (const auto& [cname, vals] : chars) {
		if (static_cast<int>(vals.size()) != G.class_count())
			throw std::logic_error("character row length");
		G.character_names.push_back(cname);
		G.characters[cname] = vals;
	}
	return G;
}

GroupData make_s2()
{
	return build("S2", 2, {{"id", {}, 1}, {"(12)", {2}, 1}}, {{"trivial", {1, 1}}, {"sign", {1, -1}}});
}

GroupData make_s3()
{
	return build("S3", 3, {{"id", {}, 1}, {"(12)", {2}, 3}, {"(123)", {3}, 2}},
	             {{"trivial", {1, 1, 1}}, {"sign", {1, -1, 1}}, {"standard", {2, 0, -1}}});
}

GroupData make_s4()
{
	return build("S4", 4,
	             {{"id", {}, 1}, {"(12)", {2}, 6}, {"(12)(34)", {2, 2}, 3}, {"(123)", {3}, 8}, {"(1234)", {4}, 6}},
	             {{"trivial", {1, 1, 1, 1, 1}},
	              {"sign", {1, -1, 1, 1, -1}},
	              {"V2", {2, 0, 2, -1, 0}},
	              {"standard", {3, 1, -1, 0, -1}},
	              {"standard_sign", {3, -1, -1, 0, 1}}});
}

GroupData make_s6()
{
	return build("S6", 6,
	             {{"C1", {}, 1},
	              {"C2", {2}, 15},
	              {"C3", {2, 2}, 45},
	              {"C4", {2, 2, 2}, 15},
	              {"C5", {3}, 40},
	              {"C6", {3, 2}, 120},
	              {"C7", {3, 3}, 40},
	              {"C8", {4}, 90},
	              {"C9", {4, 2}, 90},
	              {"C10", {5}, 144},
	              {"C11", {6}, 120}},
	             {{"X1", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
	              {"X2", {5, 3, 1, -1, 2, 0, -1, 1, -1, 0, -1}},
	              {"X3", {9, 3, 1, 3, 0, 0, 0, -1, 1, -1, 0}},
	              {"X4", {10, 2, -2, -2, 1, -1, 1, 0, 0, 0, 1}},
	              {"X5", {5, 1, 1, -3, -1, 1, 2, -1, -1, 0, 0}},
	              {"X6", {16, 0, 0, 0, -2, 0, -2, 0, 0, 1, 0}},
	              {"X7", {10, -2, -2, 2, 1, 1, 1, 0, 0, 0, -1}},
	              {"X8", {5, -1, 1, 3, -1, -1, 2, 1, -1, 0, 0}},
	              {"X9", {9, -3, 1, -3, 0, 0, 0, 1, 1, -1, 0}},
	              {"X10", {5, -3, 1, 1, 2, 0, -1, -1, -1, 0, 1}},
	              {"X11", {1, -1, 1, -1, 1, -1, 1, -1, 1, 1, -1}}});
}

} // namespace

int GroupData::class_of(std::vector<int> cycle_type) const
{
	cycle_type.erase(std::remove(cycle_type.begin(), cycle_type.end(), 1), cycle_type.end());
	std::sort(cycle_type.rbegin(), cycle_type.rend());
	for (int c = 0; c < class_count(); ++c)
		if (classes[c].cycle_type == cycle_type)
			return c;
	throw std::logic_error("cycle type not in group");
}

int GroupData::power_class(int c, int k) const
{
	if (k < 0)
		throw std::invalid_argument("negative power");
	std::vector<int> out;
	for (int len : classes.at(c).cycle_type) {
		int g = std::gcd(len, k);
		for (int i = 0; i < g; ++i)
			out.push_back(len / g);
	}
	return class_of(out);
}

bool GroupData::is_even(int c) const
{
	int s = 0;
	for (int len : classes.at(c).cycle_type)
		s += len - 1;
	return s % 2 == 0;
}

long GroupData::subgroup_order(bool even_only) const
{
	long s = 0;
	for (int c = 0; c < class_count(); ++c)
		if (!even_only || is_even(c))
			s += classes[c].size;
	return s;
}

const GroupData& symmetric_group(int n)
{
	static const GroupData s2 = make_s2(), s3 = make_s3(), s4 = make_s4(), s6 = make_s6();
	switch (n) {
	case 2: return s2;
	case 3: return s3;
	case 4: return s4;
	case 6: return s6;
	default: throw std::invalid_argument("no character table for S" + std::to_string(n));
	}
}

const GroupData& group_by_name(const std::string& name)
{
	if (name.size() == 2 && name[0] == 'S')
		return symmetric_group(name[1] - '0');
	throw std::invalid_argument("unknown group: " + name);
}

RepresentationCharacter character_of(const GroupData& G, const std::string& name)
{
	auto it = G.characters.find(name);
	if (it == G.characters.end())
		throw std::invalid_argument("unknown character " + name + " of " + G.name);
	RepresentationCharacter r;
	r.dim = static_cast<int>(it->second[0]);
	for (long v : it->second)
		r.values.emplace_back(v);
	return r;
}

std::vector<Q> charpoly_from_power_traces(const std::vector<Q>& p)
{
	const int n = static_cast<int>(p.size());
	std::vector<Q> e(n + 1);
	e[0] = 1;
	for (int k = 1; k <= n; ++k) {
		Q s = 0;
		for (int i = 1; i <= k; ++i) {
			Q t = e[k - i] * p[i - 1];
			if (i % 2)
				s += t;
			else
				s -= t;
		}
		e[k] = s / k;
	}
	return e;
}

Poly class_charpoly(const RepresentationCharacter& rep, const GroupData& G, int c, const Ring& r)
{
	std::vector<Q> traces;
	for (int k = 1; k <= rep.dim; ++k)
		traces.push_back(rep.values[G.power_class(c, k)]);
	auto e = charpoly_from_power_traces(traces);
	Poly out(r);
	for (int i = 0; i <= rep.dim; ++i)
		out.add_term(Mono{i}, i % 2 ? Q(-e[i]) : e[i]);
	return out;
}

namespace {

void check_rep(const RepresentationCharacter& rep, const GroupData& G)
{
	if (static_cast<int>(rep.values.size()) != G.class_count())
		throw std::invalid_argument("character has wrong number of classes");
	if (rep.values[0] != rep.dim)
		throw std::invalid_argument("character value at identity differs from dimension");
}

} // namespace

Series molien_series(const RepresentationCharacter& rep, const GroupData& G, bool even_only, int trunc)
{
	check_rep(rep, G);
	Ring r = make_ring({"t"});
	Series acc(r, trunc);
	for (int c = 0; c < G.class_count(); ++c) {
		if (even_only && !G.is_even(c))
			continue;
		Series inv = Series::from_poly(class_charpoly(rep, G, c, r), trunc).inverse();
		acc += inv * Q(G.classes[c].size);
	}
	return acc * Q(1, G.subgroup_order(even_only));
}

RepresentationCharacter sym_power_character(const RepresentationCharacter& rep, const GroupData& G, int k)
{
	check_rep(rep, G);
	RepresentationCharacter out;
	out.values.resize(rep.values.size());
	for (int c = 0; c < G.class_count(); ++c) {
		const Q& x1 = rep.values[c];
		switch (k) {
		case 0: out.values[c] = 1; break;
		case 1: out.values[c] = x1; break;
		case 2: out.values[c] = (x1 * x1 + rep.values[G.power_class(c, 2)]) / 2; break;
		case 3: {
			const Q& x2 = rep.values[G.power_class(c, 2)];
			const Q& x3 = rep.values[G.power_class(c, 3)];
			out.values[c] = (x1 * x1 * x1 + 3 * x1 * x2 + 2 * x3) / 6;
			break;
		}
		default: throw std::invalid_argument("symmetric power character only for k <= 3");
		}
	}
	out.dim = static_cast<int>(out.values[0].get_num().get_si());
	return out;
}

Q invariant_multiplicity(const RepresentationCharacter& chi, const GroupData& G, bool even_only)
{
	check_rep(chi, G);
	Q s = 0;
	for (int c = 0; c < G.class_count(); ++c)
		if (!even_only || G.is_even(c))
			s += chi.values[c] * G.classes[c].size;
	return s / G.subgroup_order(even_only);
}

Q character_inner(const std::vector<long>& a, const std::vector<long>& b, const GroupData& G)
{
	Q s = 0;
	for (int c = 0; c < G.class_count(); ++c)
		s += Q(a[c]) * b[c] * G.classes[c].size;
	return s / G.order;
}

bool series_matches_rational(const Series& s, const Poly& numerator, const std::vector<int>& denominator_exponents)
{
	Series prod = s;
	for (int e : denominator_exponents) {
		Poly f = Poly::constant(s.ring(), Q(1));
		f.add_term(Mono{e}, Q(-1));
		prod = prod * Series::from_poly(f, s.trunc());
	}
	return prod == Series::from_poly(numerator.in_ring(s.ring()), s.trunc());
}

} // namespace invt
