#include "line_points.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace invt {

std::string GraphCombination::str() const
{
	std::string s = expr.str();
	std::replace(s.begin(), s.end(), '[', '(');
	std::replace(s.begin(), s.end(), ']', ')');
	return s;
}

GraphCombination graph_from_arrows(int d, const std::vector<Edge>& arrows, const Q& c)
{
	GraphCombination g;
	g.d = d;
	BracketMono m;
	for (auto [a, b] : arrows) {
		if (a < 1 || b < 1 || a > d || b > d)
			throw std::invalid_argument("edge label out of range");
		m.push_back({a, b});
	}
	g.expr.add(m, c);
	return g;
}

GraphCombination operator+(const GraphCombination& a, const GraphCombination& b)
{
	GraphCombination r = a;
	r.d = std::max(a.d, b.d);
	r.expr += b.expr;
	return r;
}

GraphCombination operator-(const GraphCombination& a, const GraphCombination& b) { return a + b * Q(-1); }

GraphCombination operator*(const GraphCombination& a, const Q& c)
{
	GraphCombination r;
	r.d = a.d;
	r.expr = a.expr * c;
	return r;
}

GraphCombination parse_graph(const std::string& text, int d)
{
	std::string t = text;
	std::replace(t.begin(), t.end(), '(', '[');
	std::replace(t.begin(), t.end(), ')', ']');
	GraphCombination g;
	g.expr = parse_brackets(t);
	int mx = 0;
	for (const auto& [m, c] : g.expr.terms())
		for (const auto& col : m) {
			if (col.size() != 2)
				throw std::invalid_argument("graph edges join exactly two points");
			mx = std::max(mx, col[1]);
			if (col[0] < 1)
				throw std::invalid_argument("point labels start at 1");
		}
	if (d && mx > d)
		throw std::invalid_argument("edge label exceeds point count");
	g.d = d ? d : mx;
	return g;
}

std::vector<int> valence(const BracketMono& m, int d)
{
	std::vector<int> v(d, 0);
	for (const auto& col : m)
		for (int x : col)
			++v.at(x - 1);
	return v;
}

bool edges_cross(const Column& e, const Column& f)
{
	int i = e[0], j = e[1], k = f[0], l = f[1];
	return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

bool is_noncrossing(const BracketMono& m)
{
	for (std::size_t p = 0; p < m.size(); ++p)
		for (std::size_t q = p + 1; q < m.size(); ++q)
			if (edges_cross(m[p], m[q]))
				return false;
	return true;
}

std::vector<BracketMono> noncrossing_matchings(int d, const std::vector<int>& h)
{
	if (static_cast<int>(h.size()) != d)
		throw std::invalid_argument("valence vector length differs from d");
	std::vector<int> owner; // slot -> vertex
	for (int i = 0; i < d; ++i) {
		if (h[i] < 0)
			throw std::invalid_argument("negative valence");
		for (int k = 0; k < h[i]; ++k)
			owner.push_back(i + 1);
	}
	if (owner.size() % 2)
		return {};
	using Segment = std::pair<int, int>; // half-open slot range
	std::set<BracketMono> found;
	BracketMono cur;
	std::function<void(std::vector<Segment>)> rec = [&](std::vector<Segment> segs) {
		while (!segs.empty() && segs.back().first == segs.back().second)
			segs.pop_back();
		if (segs.empty()) {
			BracketMono m = cur;
			std::sort(m.begin(), m.end());
			found.insert(m);
			return;
		}
		auto [lo, hi] = segs.back();
		segs.pop_back();
		for (int k = lo + 1; k < hi; k += 2) {
			if (owner[lo] == owner[k])
				continue;
			cur.push_back({owner[lo], owner[k]});
			auto next = segs;
			next.push_back({k + 1, hi});
			next.push_back({lo + 1, k});
			rec(next);
			cur.pop_back();
		}
	};
	rec({{0, static_cast<int>(owner.size())}});
	return {found.begin(), found.end()};
}

GraphCombination graph_straighten(const GraphCombination& G)
{
	BracketExpr work = G.expr, done;
	while (!work.is_zero()) {
		auto it = work.terms().begin();
		BracketMono m = it->first;
		Q c = it->second;
		work.add(m, -c);
		std::size_t p = 0, q = 0;
		bool found = false;
		for (p = 0; p < m.size() && !found; ++p)
			for (q = p + 1; q < m.size(); ++q)
				if (edges_cross(m[p], m[q])) {
					found = true;
					break;
				}
		if (!found) {
			done.add(m, c);
			continue;
		}
		--p;
		std::array<int, 4> v = {m[p][0], m[p][1], m[q][0], m[q][1]};
		std::sort(v.begin(), v.end());
		BracketMono rest;
		for (std::size_t r = 0; r < m.size(); ++r)
			if (r != p && r != q)
				rest.push_back(m[r]);
		// (ik)(jl) = (ij)(kl) + (il)(jk)
		BracketMono a = rest, b = rest;
		a.push_back({v[0], v[1]});
		a.push_back({v[2], v[3]});
		b.push_back({v[0], v[3]});
		b.push_back({v[1], v[2]});
		work.add(a, c);
		work.add(b, c);
	}
	GraphCombination out;
	out.d = G.d;
	out.expr = done;
	return out;
}

Q graph_evaluate(const GraphCombination& G, const std::vector<LinePoint>& points)
{
	if (static_cast<int>(points.size()) != G.d)
		throw std::invalid_argument("graph_evaluate needs one point per vertex");
	Q total = 0;
	for (const auto& [m, c] : G.expr.terms()) {
		Q prod = c;
		for (const auto& e : m) {
			const auto& p = points[e[0] - 1];
			const auto& q = points[e[1] - 1];
			prod *= p[0] * q[1] - q[0] * p[1];
			if (prod == 0)
				break;
		}
		total += prod;
	}
	return total;
}

std::vector<LinePoint> random_line_points(std::mt19937_64& rng, int d)
{
	std::vector<LinePoint> pts;
	for (int i = 0; i < d; ++i)
		pts.push_back({random_q(rng), random_q(rng)});
	return pts;
}

Ring line_point_ring(int d)
{
	std::vector<std::string> names;
	for (int i = 1; i <= d; ++i)
		names.push_back("x" + std::to_string(i));
	for (int i = 1; i <= d; ++i)
		names.push_back("y" + std::to_string(i));
	return make_ring(names);
}

Poly graph_polynomial(const GraphCombination& G)
{
	Ring r = line_point_ring(G.d);
	std::vector<Poly> edge_cache;
	Poly total(r);
	for (const auto& [m, c] : G.expr.terms()) {
		Poly prod = Poly::constant(r, c);
		for (const auto& e : m) {
			Mono u(2 * G.d, 0), w(2 * G.d, 0);
			u[e[0] - 1] = 1;
			u[G.d + e[1] - 1] = 1;
			w[e[1] - 1] = 1;
			w[G.d + e[0] - 1] = 1;
			Poly br(r);
			br.add_term(u, Q(1));
			br.add_term(w, Q(-1));
			prod = prod * br;
		}
		total += prod;
	}
	return total;
}

GraphCombination permute_graph(const GraphCombination& G, const std::vector<int>& perm)
{
	if (static_cast<int>(perm.size()) != G.d)
		throw std::invalid_argument("permutation size differs from d");
	GraphCombination out;
	out.d = G.d;
	for (const auto& [m, c] : G.expr.terms()) {
		BracketMono n;
		for (const auto& e : m)
			n.push_back({perm[e[0] - 1], perm[e[1] - 1]});
		out.expr.add(n, c);
	}
	return out;
}

namespace {

GraphCombination from_pair_string(const std::string& s)
{
	std::vector<Edge> arrows;
	for (std::size_t i = 0; i + 1 < s.size(); i += 2)
		arrows.push_back({s[i] - '0', s[i + 1] - '0'});
	return graph_from_arrows(6, arrows);
}

} // namespace

const std::vector<GraphCombination>& six_point_t()
{
	static const std::vector<GraphCombination> t = [] {
		std::vector<GraphCombination> v;
		for (const char* s : {"632541", "652143", "612345", "652341", "612543", "632145"})
			v.push_back(from_pair_string(s));
		return v;
	}();
	return t;
}

const std::vector<GraphCombination>& joubert()
{
	static const std::vector<GraphCombination> j = [] {
		const std::vector<std::vector<std::string>> rows = {
		    {"251346", "514236", "143526", "432156", "325416"},
		    {"531246", "142356", "253416", "314526", "425136"},
		    {"534126", "342516", "421356", "215436", "153246"},
		    {"453126", "532416", "412536", "321546", "214356"},
		    {"312456", "125346", "254136", "543216", "431526"},
		    {"423516", "231456", "315246", "154326", "542136"},
		};
		std::vector<GraphCombination> v;
		for (const auto& row : rows) {
			GraphCombination g;
			g.d = 6;
			for (const auto& s : row)
				g = g + from_pair_string(s);
			v.push_back(g);
		}
		return v;
	}();
	return j;
}

std::array<Q, 5> t_coordinates(const GraphCombination& G)
{
	if (G.d != 6)
		throw std::invalid_argument("t-coordinates need six points");
	const auto& t = six_point_t();
	GraphCombination s = graph_straighten(G);
	std::array<Q, 5> out;
	for (const auto& [m, c] : s.expr.terms()) {
		bool hit = false;
		for (int i = 1; i <= 5 && !hit; ++i) {
			const auto& [tm, tc] = *t[i].expr.terms().begin();
			if (tm == m) {
				out[i - 1] += c / tc;
				hit = true;
			}
		}
		if (!hit)
			throw std::invalid_argument("graph is not of valence 1^6");
	}
	return out;
}

std::optional<std::vector<SignedIndex>> joubert_action(const std::vector<int>& perm)
{
	const auto& J = joubert();
	std::vector<std::array<Q, 5>> coords;
	for (const auto& g : J)
		coords.push_back(t_coordinates(g));
	std::vector<SignedIndex> out;
	for (const auto& g : J) {
		auto img = t_coordinates(permute_graph(g, perm));
		bool hit = false;
		for (int k = 0; k < 6 && !hit; ++k) {
			std::array<Q, 5> neg;
			for (int i = 0; i < 5; ++i)
				neg[i] = -coords[k][i];
			if (img == coords[k]) {
				out.push_back({k, 1});
				hit = true;
			} else if (img == neg) {
				out.push_back({k, -1});
				hit = true;
			}
		}
		if (!hit)
			return std::nullopt;
	}
	return out;
}

namespace {

Poly elementary(const std::vector<Poly>& xs, int k)
{
	Poly total(xs[0].ring());
	std::vector<int> idx(k);
	std::function<void(int, int, Poly)> rec = [&](int start, int depth, Poly acc) {
		if (depth == k) {
			total += acc;
			return;
		}
		for (int i = start; i < static_cast<int>(xs.size()); ++i)
			rec(i + 1, depth + 1, acc * xs[i]);
	};
	rec(0, 0, Poly::constant(xs[0].ring(), Q(1)));
	return total;
}

Q b15(const std::vector<Q>& v)
{
	Q p = 1;
	for (std::size_t i = 0; i < v.size(); ++i)
		for (std::size_t j = i + 1; j < v.size(); ++j)
			p *= v[i] - v[j];
	return p;
}

std::vector<Q> joubert_values(const std::vector<LinePoint>& pts)
{
	std::vector<Q> v;
	for (const auto& g : joubert())
		v.push_back(graph_evaluate(g, pts));
	return v;
}

} // namespace

std::vector<CheckItem> coble_ring_checks(std::uint64_t seed, int trials)
{
	std::vector<CheckItem> out;
	const auto& t = six_point_t();
	std::vector<Poly> tp;
	for (const auto& g : t)
		tp.push_back(graph_polynomial(g));

	{
		GraphCombination rhs = t[1] * Q(-1) - t[2] + t[3] + t[4] + t[5];
		bool ok = graph_straighten(t[0]) == graph_straighten(rhs);
		out.push_back({"t0 = -t1 - t2 + t3 + t4 + t5", ok, graph_straighten(t[0]).str()});
	}
	{
		Poly lin = -tp[1] - tp[2] + tp[3] + tp[4] + tp[5];
		Poly segre = tp[1] * tp[2] * lin - tp[3] * tp[4] * tp[5];
		out.push_back({"Segre cubic relation", segre.is_zero(), std::to_string(segre.size()) + " surviving terms"});
	}
	std::vector<Poly> jp;
	for (const auto& g : joubert())
		jp.push_back(graph_polynomial(g));
	for (int k : {1, 3}) {
		Poly e = elementary(jp, k);
		out.push_back({"e" + std::to_string(k) + "(A..F) = 0", e.is_zero(),
		               std::to_string(e.size()) + " surviving terms"});
	}
	{
		Poly s(jp[0].ring());
		for (const auto& p : jp)
			s += p * p * p;
		out.push_back({"A^3 + ... + F^3 = 0", s.is_zero(), std::to_string(s.size()) + " surviving terms"});
	}
	std::mt19937_64 rng(seed);
	const std::vector<std::pair<std::string, std::vector<int>>> gens = {{"(12)", {2, 1, 3, 4, 5, 6}},
	                                                                    {"(123456)", {2, 3, 4, 5, 6, 1}}};
	for (const auto& [name, perm] : gens) {
		int bad = 0, degenerate = 0;
		for (int k = 0; k < trials; ++k) {
			auto pts = random_line_points(rng, 6);
			std::vector<LinePoint> moved(6);
			for (int i = 0; i < 6; ++i)
				moved[i] = pts[perm[i] - 1];
			Q before = b15(joubert_values(pts));
			Q after = b15(joubert_values(moved));
			if (before == 0)
				++degenerate;
			if (before != after)
				++bad;
		}
		out.push_back({"b15 fixed by " + name, bad == 0,
		               std::to_string(trials - bad) + "/" + std::to_string(trials) + " agree, " +
		                   std::to_string(degenerate) + " degenerate"});
	}
	return out;
}

HallResult hall_perfect_matching(int left, int right, const std::vector<std::vector<int>>& adj)
{
	if (static_cast<int>(adj.size()) != left)
		throw std::invalid_argument("adjacency size differs from left vertex count");
	std::vector<int> match_r(right, -1), match_l(left, -1);
	std::vector<char> seen;
	std::function<bool(int)> augment = [&](int u) {
		for (int v : adj[u]) {
			if (v < 0 || v >= right)
				throw std::invalid_argument("neighbour out of range");
			if (seen[v])
				continue;
			seen[v] = 1;
			if (match_r[v] < 0 || augment(match_r[v])) {
				match_r[v] = u;
				match_l[u] = v;
				return true;
			}
		}
		return false;
	};
	for (int u = 0; u < left; ++u) {
		seen.assign(right, 0);
		augment(u);
	}
	HallResult res;
	res.match = match_l;
	int free = -1;
	for (int u = 0; u < left; ++u)
		if (match_l[u] < 0) {
			free = u;
			break;
		}
	res.perfect = free < 0 && left == right;
	if (free >= 0) {
		// left vertices reachable from `free` by alternating paths
		std::vector<char> inY(left, 0), inN(right, 0);
		std::vector<int> stack = {free};
		inY[free] = 1;
		while (!stack.empty()) {
			int u = stack.back();
			stack.pop_back();
			for (int v : adj[u]) {
				if (inN[v])
					continue;
				inN[v] = 1;
				int w = match_r[v];
				if (w >= 0 && !inY[w]) {
					inY[w] = 1;
					stack.push_back(w);
				}
			}
		}
		for (int u = 0; u < left; ++u)
			if (inY[u])
				res.violating.push_back(u);
	}
	return res;
}

} // namespace invt
