#include "invt.h"

#include "binary.hpp"
#include "genfun.hpp"
#include "line_points.hpp"
#include "molien.hpp"
#include "plane_points.hpp"
#include "selftest.hpp"
#include "tableaux.hpp"
#include "ternary.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

using json = nlohmann::json;
using namespace invt;

struct invt_context {
	int trunc = 20;
	std::uint64_t seed = 1;
	std::string error;
};

struct invt_result {
	std::string text;
	std::string json;
};

struct invt_poly {
	Poly p;
	std::string str_cache;
	std::string json_cache;
};

namespace {

json poly_to_json(const Poly& p)
{
	json vars = json::array();
	if (p.ring())
		for (const auto& n : *p.ring())
			vars.push_back(n);
	json terms = json::object();
	for (const auto& [m, c] : p.terms()) {
		std::string key;
		for (std::size_t i = 0; i < m.size(); ++i)
			key += (i ? "," : "") + std::to_string(m[i]);
		terms[key] = q_str(c);
	}
	return {{"vars", vars}, {"terms", terms}};
}

Poly poly_from_json(const json& j)
{
	std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
	Ring r = make_ring(names);
	Poly p(r);
	for (const auto& [key, val] : j.at("terms").items()) {
		Mono m;
		std::stringstream ss(key);
		std::string part;
		while (std::getline(ss, part, ','))
			m.push_back(std::stoi(part));
		if (key.empty())
			m.clear();
		if (m.size() != names.size())
			throw std::invalid_argument("exponent key '" + key + "' has wrong length");
		p.add_term(m, parse_q(val.get<std::string>()));
	}
	return p;
}

// Terms in increasing weighted degree, then "+ O(z^{N+1})".
std::string series_str(const Series& s)
{
	std::vector<std::pair<Mono, Q>> terms(s.poly().terms().begin(), s.poly().terms().end());
	std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
		int da = s.wdeg(a.first), db = s.wdeg(b.first);
		return da != db ? da < db : a.first < b.first;
	});
	std::string out;
	for (const auto& [m, c] : terms) {
		std::string ms = mono_str(s.ring(), m);
		Q a = abs(c);
		if (out.empty())
			out += c < 0 ? "-" : "";
		else
			out += c < 0 ? " - " : " + ";
		if (ms.empty())
			out += q_str(a);
		else
			out += (a == 1 ? "" : q_str(a) + "*") + ms;
	}
	if (out.empty())
		out = "0";
	return out + " + O(" + (*s.ring())[0] + "^" + std::to_string(s.trunc() + 1) + ")";
}

json series_to_json(const Series& s)
{
	json j = poly_to_json(s.poly());
	j["trunc"] = s.trunc();
	j["weights"] = s.weights();
	return j;
}

json checks_to_json(const std::vector<CheckItem>& items, std::string& text, bool& all)
{
	json arr = json::array();
	all = true;
	for (const auto& c : items) {
		text += std::string(c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
		arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
		all = all && c.pass;
	}
	return arr;
}

std::vector<Q> parse_q_list(const char* text)
{
	std::vector<Q> out;
	std::stringstream ss(text);
	std::string part;
	while (std::getline(ss, part, ',')) {
		part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
		out.push_back(parse_q(part));
	}
	return out;
}

void need(bool ok, const std::string& what)
{
	if (!ok)
		throw std::invalid_argument(what);
}

// body(text, ok) returns the JSON document; ok = false marks a
// verification failure, whose report is still handed back.
template <class F>
int guarded(invt_context* ctx, invt_result** out, F&& body)
{
	if (!ctx || !out)
		return INVT_EINVAL;
	*out = nullptr;
	ctx->error.clear();
	auto* r = new invt_result;
	try {
		bool ok = true;
		json j = body(r->text, ok);
		r->json = j.dump();
		*out = r;
		if (!ok) {
			ctx->error = "verification failed";
			return INVT_EVERIFY;
		}
		return INVT_OK;
	} catch (const std::invalid_argument& e) {
		ctx->error = e.what();
	} catch (const std::domain_error& e) {
		ctx->error = e.what();
	} catch (const std::out_of_range& e) {
		ctx->error = e.what();
	} catch (const std::exception& e) {
		ctx->error = e.what();
		delete r;
		return INVT_EINTERNAL;
	}
	delete r;
	return INVT_EINVAL;
}

json basis_json(const std::vector<Poly>& basis, std::string& text)
{
	json arr = json::array();
	for (const auto& p : basis) {
		text += p.str() + "\n";
		arr.push_back(poly_to_json(p));
	}
	return arr;
}

} // namespace

extern "C" {

invt_context* invt_context_new(void)
{
	auto* c = new invt_context;
	if (const char* env = std::getenv("INVT_TRUNC")) {
		char* end = nullptr;
		long v = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && v >= 0 && v < 100000)
			c->trunc = static_cast<int>(v);
	}
	return c;
}

void invt_context_free(invt_context* ctx) { delete ctx; }
void invt_context_set_trunc(invt_context* ctx, int trunc) { ctx->trunc = trunc; }
int invt_context_trunc(const invt_context* ctx) { return ctx->trunc; }
void invt_context_set_seed(invt_context* ctx, uint64_t seed) { ctx->seed = seed; }
const char* invt_last_error(const invt_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

const char* invt_result_text(const invt_result* r) { return r ? r->text.c_str() : ""; }
const char* invt_result_json(const invt_result* r) { return r ? r->json.c_str() : ""; }
void invt_result_free(invt_result* r) { delete r; }

int invt_binary_invariants(invt_context* ctx, int d, int g, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(d >= 1 && g >= 0, "need d >= 1 and g >= 0");
		auto basis = invariant_basis(d, g);
		json j = {{"d", d}, {"g", g}, {"dimension", basis.size()}, {"basis", basis_json(basis, text)}};
		if (basis.empty())
			text += "0\n";
		return j;
	});
}

int invt_binary_dim(invt_context* ctx, int d, int g, const char* method, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(d >= 1 && g >= 0, "need d >= 1 and g >= 0");
		std::string m = method ? method : "cs";
		long dim;
		if (m == "cs")
			dim = binary_invariant_dim(d, g);
		else if (m == "kernel")
			dim = static_cast<long>(invariant_basis(d, g).size());
		else
			throw std::invalid_argument("method must be kernel or cs");
		text = std::to_string(dim) + "\n";
		return json{{"d", d}, {"g", g}, {"method", m}, {"dimension", dim}};
	});
}

int invt_reynolds(invt_context* ctx, int d, int g, const char* poly, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(poly != nullptr, "missing polynomial");
		need(d >= 1 && g >= 0, "need d >= 1 and g >= 0");
		Poly P = parse_poly(binary_ring(d), poly);
		need(P.is_zero() || (P.is_homogeneous() && P.degree() == g), "input must be homogeneous of degree g");
		Poly R = reynolds(P, d, g);
		text = R.str() + "\n";
		return json{{"input", poly_to_json(P)}, {"projection", poly_to_json(R)}};
	});
}

int invt_transvectant(invt_context* ctx, int df, int dg, int n, const char* fcoeffs, const char* gcoeffs, int same,
                      invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(df >= 0 && dg >= 0 && n >= 0, "degrees and order must be nonnegative");
		auto make = [](int d, const char* coeffs, const char* prefix) {
			if (!coeffs)
				return symbolic_binary(d, prefix);
			auto v = parse_q_list(coeffs);
			need(static_cast<int>(v.size()) == d + 1, "coefficient list needs d+1 entries");
			return binary_from_values(v);
		};
		BinaryForm f = make(df, fcoeffs, "a");
		BinaryForm g = same ? f : make(dg, gcoeffs, "b");
		need(n <= std::min(f.d, g.d), "order exceeds a degree");
		BinaryForm t = transvectant(f, g, n);
		Ring r = with_xy(t.ring ? t.ring : make_ring({}));
		Poly p = form_poly(t, r);
		text = p.str() + "\n";
		json coeffs = json::array();
		for (const auto& c : t.c)
			coeffs.push_back(poly_to_json(c));
		return json{{"order", t.d}, {"coefficients", coeffs}, {"form", poly_to_json(p)}};
	});
}

int invt_ternary_invariants(invt_context* ctx, int d, int g, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(d >= 1 && d <= 9 && g >= 0, "need 1 <= d <= 9 and g >= 0");
		auto basis = ternary_invariant_basis(d, g);
		json j = {{"d", d}, {"g", g}, {"dimension", basis.size()}, {"basis", basis_json(basis, text)}};
		if (basis.empty())
			text += "0\n";
		return j;
	});
}

int invt_bedratyuk(invt_context* ctx, int d, int g, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(d >= 1 && g >= 0, "need d >= 1 and g >= 0");
		long dim = bedratyuk_invariant_dim(d, g);
		text = std::to_string(dim) + "\n";
		json j = {{"d", d}, {"g", g}, {"dimension", dim}};
		if ((d * g) % 3 == 0) {
			int p = d * g / 3;
			Series e = ternary_weight_enumerator(d, g);
			auto h = [&](int a, int b, int c) { return ternary_weight_count(e, g, a, b, c); };
			j["terms"] = {h(p, p, p),         h(p + 1, p - 1, p),     h(p - 1, p, p + 1),
			              h(p + 1, p - 2, p + 1), h(p - 1, p - 1, p + 2), h(p, p - 2, p + 2)};
		}
		return j;
	});
}

int invt_springer(invt_context* ctx, int d, int e, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(d >= 1, "need d >= 1");
		Series s = e < 0 ? springer_bigraded(d, ctx->trunc) : springer_covariant_series(d, e, ctx->trunc);
		text = series_str(s) + "\n";
		json j = series_to_json(s);
		j["d"] = d;
		if (e >= 0)
			j["e"] = e;
		return j;
	});
}

int invt_molien(invt_context* ctx, const char* group, const char* rep, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(group && rep, "missing group or representation");
		std::string gname = group;
		bool even = false;
		if (gname == "A6") {
			gname = "S6";
			even = true;
		}
		const GroupData& G = group_by_name(gname);
		Series s = molien_series(character_of(G, rep), G, even, ctx->trunc);
		text = series_str(s) + "\n";
		json j = series_to_json(s);
		j["group"] = group;
		j["rep"] = rep;
		return j;
	});
}

int invt_howe(invt_context* ctx, int d, int k, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		long v = howe_dimension(d, k);
		text = std::to_string(v) + "\n";
		return json{{"d", d}, {"k", k}, {"dimension", v}};
	});
}

int invt_symbolic_expand(invt_context* ctx, const char* tableau, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(tableau != nullptr, "missing tableau");
		std::string spec = tableau;
		Tableau T;
		Q scale = 1;
		if (spec.find('[') != std::string::npos) {
			// "[12]^2[13]^2[23]^2": each bracket is a column
			BracketExpr B = parse_brackets(spec);
			need(B.terms().size() == 1, "bracket input must be a single monomial");
			const auto& [mono, c] = *B.terms().begin();
			scale = c;
			T.rows.assign(mono[0].size(), {});
			for (const auto& col : mono) {
				need(col.size() == T.rows.size(), "brackets of different sizes");
				for (std::size_t i = 0; i < col.size(); ++i)
					T.rows[i].push_back(col[i]);
			}
		} else {
			T = parse_tableau(spec);
		}
		need(!T.rows.empty(), "empty tableau");
		int n = static_cast<int>(T.rows.size()) - 1;
		int m = 0;
		for (const auto& row : T.rows)
			for (int v : row)
				m = std::max(m, v);
		int d = T.label_count(1);
		Poly p = symbolic_invariant(T, d, m, n) * scale;
		text = p.str() + "\n";
		return json{{"tableau", T.str()}, {"d", d}, {"m", m}, {"n", n}, {"poly", poly_to_json(p)}};
	});
}

int invt_straighten(invt_context* ctx, const char* expr, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(expr != nullptr, "missing expression");
		std::string s = expr;
		bool graph = s.find('(') != std::string::npos;
		need(!(graph && s.find('[') != std::string::npos), "mixing (ij) and [ij] notation");
		json terms = json::array();
		if (graph) {
			GraphCombination G = graph_straighten(parse_graph(s));
			text = G.str() + "\n";
			for (const auto& [m, c] : G.expr.terms())
				terms.push_back({{"edges", m}, {"coeff", q_str(c)}});
			return json{{"basis", "noncrossing"}, {"result", G.str()}, {"terms", terms}};
		}
		BracketExpr B = pluecker_straighten(parse_brackets(s));
		text = B.str() + "\n";
		for (const auto& [m, c] : B.terms())
			terms.push_back({{"columns", m}, {"coeff", q_str(c)}});
		return json{{"basis", "semistandard"}, {"result", B.str()}, {"terms", terms}};
	});
}

int invt_noncrossing(invt_context* ctx, int d, const int* h, int nh, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool&) {
		need(d >= 1, "need d >= 1");
		need(nh == 1 || nh == d, "give one valence or d valences");
		need(h != nullptr, "missing valences");
		std::vector<int> hv(h, h + nh);
		if (nh == 1)
			hv.assign(d, h[0]);
		auto list = noncrossing_matchings(d, hv);
		json arr = json::array();
		for (const auto& m : list) {
			GraphCombination G;
			G.d = d;
			G.expr.add(m, Q(1));
			text += G.str() + "\n";
			arr.push_back(m);
		}
		if (list.empty())
			text += "none\n";
		return json{{"d", d}, {"valence", hv}, {"count", list.size()}, {"graphs", arr}};
	});
}

int invt_six_line_checks(invt_context* ctx, int trials, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool& ok) {
		need(trials >= 1, "need at least one trial");
		return json{{"checks", checks_to_json(coble_ring_checks(ctx->seed, trials), text, ok)}, {"seed", ctx->seed}};
	});
}

int invt_six_plane_checks(invt_context* ctx, int trials, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool& ok) {
		need(trials >= 1, "need at least one trial");
		return json{{"checks", checks_to_json(plane_checks(ctx->seed, trials), text, ok)}, {"seed", ctx->seed}};
	});
}

int invt_selftest(invt_context* ctx, int criterion, invt_result** out)
{
	return guarded(ctx, out, [&](std::string& text, bool& ok) {
		need(criterion >= 0 && criterion <= criterion_count, "criterion out of range");
		std::vector<CriterionResult> res;
		if (criterion == 0)
			res = run_selftest(ctx->seed);
		else
			res.push_back(run_criterion(criterion, ctx->seed));
		json arr = json::array();
		for (const auto& c : res) {
			text += std::string(c.pass ? "PASS" : "FAIL") + " [" + std::to_string(c.id) + "] " + c.name + ": " +
			        c.detail + "\n";
			arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
			ok = ok && c.pass;
		}
		return json{{"seed", ctx->seed}, {"criteria", arr}};
	});
}

int invt_poly_parse(invt_context* ctx, const char* vars, const char* text, invt_poly** out)
{
	if (!ctx || !out || !vars || !text)
		return INVT_EINVAL;
	*out = nullptr;
	ctx->error.clear();
	try {
		std::vector<std::string> names;
		std::stringstream ss(vars);
		std::string part;
		while (std::getline(ss, part, ','))
			if (!part.empty())
				names.push_back(part);
		*out = new invt_poly{parse_poly(make_ring(names), text), {}, {}};
		return INVT_OK;
	} catch (const std::exception& e) {
		ctx->error = e.what();
		return INVT_EINVAL;
	}
}

int invt_poly_from_json(invt_context* ctx, const char* text, invt_poly** out)
{
	if (!ctx || !out || !text)
		return INVT_EINVAL;
	*out = nullptr;
	ctx->error.clear();
	try {
		*out = new invt_poly{poly_from_json(json::parse(text)), {}, {}};
		return INVT_OK;
	} catch (const std::exception& e) {
		ctx->error = e.what();
		return INVT_EINVAL;
	}
}

const char* invt_poly_str(invt_poly* p)
{
	if (!p)
		return "";
	p->str_cache = p->p.str();
	return p->str_cache.c_str();
}

const char* invt_poly_json(invt_poly* p)
{
	if (!p)
		return "";
	p->json_cache = poly_to_json(p->p).dump();
	return p->json_cache.c_str();
}

int invt_poly_equal(const invt_poly* a, const invt_poly* b)
{
	if (!a || !b)
		return 0;
	return a->p == b->p ? 1 : 0;
}

void invt_poly_free(invt_poly* p) { delete p; }

} // extern "C"
