#include "selftest.hpp"

#include "binary.hpp"
#include "genfun.hpp"
#include "line_points.hpp"
#include "molien.hpp"
#include "plane_points.hpp"
#include "tableaux.hpp"
#include "ternary.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace invt {

namespace {

struct Report {
	bool pass = true;
	std::ostringstream detail;

	void check(bool ok, const std::string& what)
	{
		if (!ok) {
			if (!pass)
				detail << "; ";
			detail << what;
			pass = false;
		}
	}
};

const char* kQuarticCubicInvariant =
    "f400*f040*f004 + 3*(f220^2*f004 + f202^2*f040 + f400*f022^2)"
    " + 12*(f202*f121^2 + f220*f112^2 + f022*f211^2) + 6*f220*f202*f022"
    " - 4*(f301*f103*f040 + f400*f031*f013 + f310*f130*f004)"
    " + 4*(f310*f103*f031 + f301*f130*f013)"
    " - 12*(f202*f130*f112 + f220*f121*f103 + f211*f202*f031 + f301*f121*f022"
    " + f310*f112*f022 + f220*f211*f013 + f211*f121*f112)"
    " + 12*(f310*f121*f013 + f211*f130*f103 + f301*f112*f031)";

// Ratio p/q when p is a scalar multiple of q, else 0.
Q proportionality(const Poly& p, const Poly& q)
{
	if (p.is_zero() || q.is_zero() || p.size() != q.size())
		return Q(0);
	Q r = p.lead_coeff() / q.lead_coeff();
	return p == q * r ? r : Q(0);
}

std::string series_head(const Series& s, int n)
{
	std::ostringstream o;
	for (int k = 0; k <= n && k <= s.trunc(); ++k)
		o << (k ? "," : "") << s.coeff(k);
	return o.str();
}

Poly upoly(const Ring& r, const std::vector<std::pair<int, long>>& terms)
{
	Poly p(r);
	for (auto [e, c] : terms)
		p.add_term(Mono{e}, Q(c));
	return p;
}

CriterionResult c1(std::uint64_t)
{
	Report r;
	Ring ring = binary_ring(4);
	auto b2 = invariant_basis(4, 2);
	auto b3 = invariant_basis(4, 3);
	r.check(b2.size() == 1 && b2[0] == quartic_I(ring), "degree-2 basis differs from I");
	Poly J = quartic_J(ring);
	r.check(b3.size() == 1 && b3[0] == J * (1 / J.lead_coeff()), "degree-3 basis differs from J");
	if (r.pass)
		r.detail << "I = " << b2[0].str() << "; J = " << b3[0].str();
	return {1, "binary quartic invariants I, J", r.pass, r.detail.str()};
}

CriterionResult c2(std::uint64_t)
{
	Report r;
	Ring ring = binary_ring(4);
	Poly I = quartic_I(ring);
	r.check(reynolds(parse_poly(ring, "a0*a4"), 4, 2) == I * Q(2, 5), "R(a0a4)");
	r.check(reynolds(parse_poly(ring, "a1*a3"), 4, 2) == I * Q(-1, 10), "R(a1a3)");
	r.check(reynolds(parse_poly(ring, "a2^2"), 4, 2) == I * Q(1, 15), "R(a2^2)");
	int zeros = 0, others = 0;
	for (int i = 0; i <= 4; ++i)
		for (int j = i; j <= 4; ++j) {
			if (i + j == 4)
				continue;
			++others;
			if (reynolds(Poly::var(ring, i) * Poly::var(ring, j), 4, 2).is_zero())
				++zeros;
		}
	r.check(zeros == others, "non-isobaric monomial with nonzero projection");
	if (r.pass)
		r.detail << "3 isobaric values exact, " << zeros << " other monomials project to 0";
	return {2, "Reynolds operator on S^2(S^4)", r.pass, r.detail.str()};
}

long total_monomials(const Series& e, int g)
{
	long s = 0;
	for (const auto& [m, c] : e.poly().terms())
		if (m[2] == g)
			s += c.get_num().get_si();
	return s;
}

CriterionResult c3(std::uint64_t)
{
	Report r;
	auto a = ternary_isobaric_monomials(4, 3).size();
	auto b = ternary_isobaric_monomials(3, 6).size();
	long ta = total_monomials(ternary_weight_enumerator(4, 3), 3);
	long tb = total_monomials(ternary_weight_enumerator(3, 6), 6);
	r.check(a == 23 && ta == 680, "quartics: " + std::to_string(a) + " of " + std::to_string(ta));
	r.check(b == 103 && tb == 5005, "cubics: " + std::to_string(b) + " of " + std::to_string(tb));
	if (r.pass)
		r.detail << "23 of 680, 103 of 5005";
	return {3, "ternary isobaric monomial counts", r.pass, r.detail.str()};
}

CriterionResult c4(std::uint64_t)
{
	Report r;
	Series e = ternary_weight_enumerator(4, 3);
	auto h = [&](int a, int b, int c) { return ternary_weight_count(e, 3, a, b, c); };
	// table entries in six-term order; the table is symmetric under permuting
	// the three weights, so the two positive corner terms are compared as a set
	long v[6] = {h(4, 4, 4), h(5, 3, 4), h(3, 4, 5), h(5, 2, 5), h(3, 3, 6), h(4, 2, 6)};
	r.check(v[0] == 23, "center " + std::to_string(v[0]));
	r.check(v[1] == 19 && v[2] == 19, "first ring " + std::to_string(v[1]) + "," + std::to_string(v[2]));
	r.check(std::min(v[3], v[4]) == 15 && std::max(v[3], v[4]) == 16,
	        "positive corners " + std::to_string(v[3]) + "," + std::to_string(v[4]));
	r.check(v[5] == 15, "last corner " + std::to_string(v[5]));
	long dim = bedratyuk_invariant_dim(4, 3);
	r.check(dim == 1, "six-term sum = " + std::to_string(dim));
	if (r.pass)
		r.detail << "23-19-19+16+15-15 = " << dim;
	return {4, "Bedratyuk six-term formula", r.pass, r.detail.str()};
}

CriterionResult c5(std::uint64_t)
{
	Report r;
	auto basis = ternary_invariant_basis(4, 3);
	Poly reference = parse_poly(ternary_ring(4), kQuarticCubicInvariant);
	r.check(basis.size() == 1, "kernel dimension " + std::to_string(basis.size()));
	if (r.pass) {
		Q k = proportionality(basis[0], reference);
		r.check(reference.size() == 23 && k != 0, "not proportional to the 23-term expression");
		if (r.pass)
			r.detail << "23 monomials, scalar " << k;
	}
	return {5, "cubic invariant of plane quartics", r.pass, r.detail.str()};
}

CriterionResult c6(std::uint64_t seed)
{
	Report r;
	const Poly& ar = aronhold_invariant();
	r.check(ar.size() == 25, "Aronhold invariant has " + std::to_string(ar.size()) + " monomials");
	std::mt19937_64 rng(seed);
	Q scalar = 0;
	int agree = 0;
	for (int t = 0; t < 20; ++t) {
		std::vector<Q> v;
		for (int i = 0; i < 10; ++i)
			v.push_back(random_q(rng));
		TernaryForm phi = ternary_from_values(3, v);
		Poly pf = aronhold_pfaffian(phi);
		Poly av = evaluate_on_form(ar, phi);
		Q a = av.is_zero() ? Q(0) : av.lead_coeff();
		Q p = pf.is_zero() ? Q(0) : pf.lead_coeff();
		if (a == 0) {
			agree += p == 0;
			continue;
		}
		if (scalar == 0)
			scalar = p / a;
		agree += p == scalar * a;
	}
	r.check(agree == 20, std::to_string(agree) + "/20 random cubics agree");
	std::vector<Q> fermat(10, Q(0));
	fermat[ternary_position(3, {3, 0, 0})] = 1;
	fermat[ternary_position(3, {0, 3, 0})] = 1;
	fermat[ternary_position(3, {0, 0, 3})] = 1;
	TernaryForm F = ternary_from_values(3, fermat);
	r.check(aronhold_pfaffian(F).is_zero(), "pfaffian nonzero on x^3+y^3+z^3");
	r.check(evaluate_on_form(ar, F).is_zero(), "invariant nonzero on x^3+y^3+z^3");
	if (r.pass)
		r.detail << "25 monomials, Pf = " << scalar << "*Ar on 20 cubics, vanishes on Fermat";
	return {6, "Aronhold invariant and pfaffian", r.pass, r.detail.str()};
}

CriterionResult c7(std::uint64_t)
{
	Report r;
	const int N = 20;
	Ring z = univariate_ring("z");
	Series s3 = springer_covariant_series(3, 0, N);
	Series s4 = springer_covariant_series(4, 0, N);
	r.check(s3 == rational_series(Poly::constant(z, Q(1)), {Mono{4}}, N), "d=3: " + series_head(s3, 12));
	r.check(s4 == rational_series(Poly::constant(z, Q(1)), {Mono{2}, Mono{3}}, N), "d=4: " + series_head(s4, 12));

	Ring zw = make_ring({"z", "w"});
	std::vector<int> w = {1, 0};
	Poly n3 = Poly::constant(zw, Q(1)) + Poly::monomial(zw, {3, 3});
	Poly n4 = Poly::constant(zw, Q(1)) + Poly::monomial(zw, {3, 6});
	Series f3 = rational_series(n3, {{4, 0}, {1, 3}, {2, 2}}, N, w);
	Series f4 = rational_series(n4, {{2, 0}, {3, 0}, {1, 4}, {2, 4}}, N, w);
	r.check(springer_bigraded(3, N) == f3, "bigraded d=3 differs");
	r.check(springer_bigraded(4, N) == f4, "bigraded d=4 differs");
	if (r.pass)
		r.detail << "univariate and bigraded series agree to z^" << N;
	return {7, "Springer Hilbert series", r.pass, r.detail.str()};
}

CriterionResult c8(std::uint64_t)
{
	Report r;
	const int N = 20;
	Ring t = make_ring({"t"});
	Poly one = Poly::constant(t, Q(1));
	const std::vector<int> den26 = {2, 3, 4, 5, 6};
	Series s4 = molien_series(character_of(symmetric_group(4), "V2"), symmetric_group(4), false, N);
	r.check(series_matches_rational(s4, one, {2, 3}), "S4 on V2: " + series_head(s4, 10));
	const GroupData& S6 = symmetric_group(6);
	Series a6 = molien_series(character_of(S6, "X5"), S6, true, N);
	r.check(series_matches_rational(a6, upoly(t, {{0, 1}, {15, 1}}), den26), "Alt(6) on X5: " + series_head(a6, 16));
	Series s6 = molien_series(character_of(S6, "X8"), S6, false, N);
	r.check(series_matches_rational(s6, one, den26), "S6 on X8: " + series_head(s6, 10));
	if (r.pass)
		r.detail << "three closed forms agree to t^" << N;
	return {8, "Molien series", r.pass, r.detail.str()};
}

CriterionResult c9(std::uint64_t)
{
	Report r;
	int cases = 0;
	for (int d = 1; d <= 6; ++d)
		for (int g = 1; g <= 8; ++g) {
			if ((d * g) % 2)
				continue;
			++cases;
			long cs = binary_invariant_dim(d, g);
			long ker = static_cast<long>(invariant_basis(d, g).size());
			r.check(cs == ker, "(" + std::to_string(d) + "," + std::to_string(g) + "): " + std::to_string(cs) +
			                       " vs " + std::to_string(ker));
		}
	if (r.pass)
		r.detail << cases << " (d,g) pairs agree";
	return {9, "Cayley-Sylvester vs kernel dimension", r.pass, r.detail.str()};
}

CriterionResult c10(std::uint64_t seed)
{
	Report r;
	auto nc = noncrossing_matchings(6, std::vector<int>(6, 1));
	r.check(nc.size() == 5, std::to_string(nc.size()) + " noncrossing matchings");
	auto checks = coble_ring_checks(seed, 1);
	for (const auto& c : checks)
		if (c.name.rfind("t0", 0) == 0 || c.name.rfind("Segre", 0) == 0)
			r.check(c.pass, c.name + ": " + c.detail);
	std::vector<int> content;
	for (int i = 1; i <= 6; ++i)
		content.insert(content.end(), {i, i});
	auto ss = semistandard_tableaux({6, 6}, content);
	r.check(ss.size() == 15, std::to_string(ss.size()) + " semistandard tableaux of weight 2^6");
	if (r.pass)
		r.detail << "5 matchings, t0 straightened, Segre relation zero, 15 tableaux";
	return {10, "Kempe basis and Segre cubic", r.pass, r.detail.str()};
}

CriterionResult c11(std::uint64_t seed)
{
	Report r;
	auto checks = coble_ring_checks(seed, 1);
	for (const auto& c : checks)
		if (c.name.rfind("e1", 0) == 0 || c.name.rfind("e3", 0) == 0 || c.name.rfind("A^3", 0) == 0)
			r.check(c.pass, c.name + ": " + c.detail);
	auto act = [](const std::vector<int>& perm) {
		auto a = joubert_action(perm);
		std::string s;
		if (!a)
			return std::string("none");
		for (const auto& si : *a)
			s += std::string(si.sign < 0 ? "-" : "+") + char('A' + si.index);
		return s;
	};
	// expected: (12) gives A→−D, B→−E, C→−F; (13) gives A→−F, B→−D, C→−E
	std::string s12 = act({2, 1, 3, 4, 5, 6}), s13 = act({3, 2, 1, 4, 5, 6}), s6 = act({2, 3, 4, 5, 6, 1});
	r.check(s12 == "-D-E-F-A-B-C", "(12) images " + s12);
	r.check(s13 == "-F-D-E-B-C-A", "(13) images " + s13);
	r.check(s6 == "-A-C-F-E-D-B", "(123456) images " + s6);
	if (r.pass)
		r.detail << "e1 = e3 = p3 = 0; (12): " << s12 << "; (123456): " << s6;
	return {11, "Joubert invariants", r.pass, r.detail.str()};
}

CriterionResult c12(std::uint64_t)
{
	Report r;
	r.check(howe_dimension(6, 1) == 5, "howe(6,1) = " + std::to_string(howe_dimension(6, 1)));
	Ring t = make_ring({"t"});
	Series s = rational_series(upoly(t, {{0, 1}, {1, 8}, {2, 22}, {3, 8}, {4, 1}}), std::vector<Mono>(6, Mono{1}), 8);
	for (int k = 0; k <= 8; ++k) {
		long h = howe_dimension(8, k);
		r.check(Q(h) == s.coeff(k), "howe(8," + std::to_string(k) + ") = " + std::to_string(h));
	}
	if (r.pass)
		r.detail << "d=8 values " << series_head(s, 8);
	return {12, "Howe dimension formula", r.pass, r.detail.str()};
}

CriterionResult c13(std::uint64_t seed)
{
	Report r;
	for (const auto& c : plane_checks(seed, 20)) {
		if (c.name.rfind("Morley", 0) == 0 || c.name.rfind("d2 odd", 0) == 0 || c.name.rfind("perturbed", 0) == 0)
			continue;
		r.check(c.pass, c.name + " " + c.detail);
	}
	if (r.pass)
		r.detail << "all identities hold on 20 configurations";
	return {13, "Cremona hexahedral equations", r.pass, r.detail.str()};
}

CriterionResult c14(std::uint64_t)
{
	Report r;
	auto cc = cubic_covariant_suite(symbolic_binary(3));
	r.check(cc.syzygy.is_zero(), std::to_string(cc.syzygy.size()) + " surviving terms");
	if (r.pass)
		r.detail << "36H^3 + 9 disc f^2 + Q^2 = 0";
	return {14, "binary cubic syzygy", r.pass, r.detail.str()};
}

CriterionResult c15(std::uint64_t)
{
	Report r;
	BinaryForm f = symbolic_binary(4);
	auto c = gherardelli_determinant(f);
	Poly I = quartic_I(f.ring), J = quartic_J(f.ring);
	r.check(c[0] == J, "t^0 coefficient is " + c[0].str());
	r.check(c[1] == I, "t^1 coefficient is " + c[1].str());
	r.check(c[2].is_zero(), "t^2 coefficient is " + c[2].str());
	r.check(c[3] == Poly::constant(f.ring, Q(1, 2)), "t^3 coefficient is " + c[3].str());
	if (r.pass)
		r.detail << "det = t^3/2 + t I + J";
	return {15, "Gherardelli determinant", r.pass, r.detail.str()};
}

BracketMono random_bracket_mono(std::mt19937_64& rng, int rows, int cols, int labels)
{
	BracketMono m;
	std::uniform_int_distribution<int> L(1, labels);
	for (int c = 0; c < cols; ++c) {
		Column col;
		while (static_cast<int>(col.size()) < rows) {
			int v = L(rng);
			if (std::find(col.begin(), col.end(), v) == col.end())
				col.push_back(v);
		}
		m.push_back(col);
	}
	return m;
}

CriterionResult c16(std::uint64_t seed)
{
	Report r;
	long checked = 0;
	for (int d = 1; d <= 5; ++d)
		for (int g = 1; g <= 4; ++g)
			for (int p = 0; p <= d * g; ++p)
				for (const auto& m : weight_space(d, g, p)) {
					Poly P = Poly::monomial(binary_ring(d), m);
					Poly comm = apply_D(apply_Delta(P, d), d) - apply_Delta(apply_D(P, d), d);
					++checked;
					if (!(comm == P * Q(d * g - 2 * p)))
						r.check(false, "commutator on " + P.str());
				}

	std::mt19937_64 rng(seed);
	int preserved = 0;
	const int trials = 100;
	for (int t = 0; t < trials; ++t) {
		int rows = t % 2 ? 3 : 2;
		BracketExpr B;
		B.add(random_bracket_mono(rng, rows, 3, 6), Q(1));
		BracketExpr S = pluecker_straighten(B);
		std::map<int, std::vector<Q>> pts;
		for (int i = 1; i <= 6; ++i)
			for (int k = 0; k < rows; ++k)
				pts[i].push_back(random_q(rng));
		bool ok = evaluate_brackets(B, pts) == evaluate_brackets(S, pts);
		for (const auto& [m, c] : S.terms())
			ok = ok && is_semistandard(m);
		GraphCombination G;
		G.d = 6;
		G.expr.add(random_bracket_mono(rng, 2, 4, 6), Q(1));
		auto lp = random_line_points(rng, 6);
		GraphCombination GS = graph_straighten(G);
		ok = ok && graph_evaluate(G, lp) == graph_evaluate(GS, lp);
		for (const auto& [m, c] : GS.expr.terms())
			ok = ok && is_noncrossing(m);
		preserved += ok;
	}
	r.check(preserved == trials, std::to_string(preserved) + "/100 straightenings preserve values");

	using Parts = std::vector<std::pair<YoungDiagram, int>>;
	Parts s24 = schur_decompose(plethysm_character(2, 4, 2));
	Parts want = {{{8}, 1}, {{6, 2}, 1}, {{4, 4}, 1}};
	std::sort(s24.begin(), s24.end());
	std::sort(want.begin(), want.end());
	r.check(s24 == want, "S^2(S^4 C^2) decomposition differs");
	if (r.pass)
		r.detail << checked << " commutator checks, 100 straightenings, S^2(S^4) = S^8 + S^{6,2} + S^{4,4}";
	return {16, "property suite", r.pass, r.detail.str()};
}

const std::vector<std::function<CriterionResult(std::uint64_t)>>& table()
{
	static const std::vector<std::function<CriterionResult(std::uint64_t)>> t = {
	    c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14, c15, c16};
	return t;
}

} // namespace

CriterionResult run_criterion(int id, std::uint64_t seed)
{
	if (id < 1 || id > criterion_count)
		throw std::invalid_argument("no criterion " + std::to_string(id));
	try {
		return table()[id - 1](seed);
	} catch (const std::exception& e) {
		return {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
	}
}

std::vector<CriterionResult> run_selftest(std::uint64_t seed)
{
	std::vector<CriterionResult> out;
	for (int i = 1; i <= criterion_count; ++i)
		out.push_back(run_criterion(i, seed));
	return out;
}

} // namespace invt
