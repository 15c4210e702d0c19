#include "tableaux.hpp"

#include "binary.hpp"
#include "ternary.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace invt {

YoungDiagram Tableau::shape() const
{
	YoungDiagram s;
	for (const auto& r : rows)
		s.push_back(static_cast<int>(r.size()));
	return s;
}

bool Tableau::is_rectangular() const
{
	if (rows.empty())
		return true;
	return std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r.size() == rows[0].size(); });
}

int Tableau::label_count(int label) const
{
	int c = 0;
	for (const auto& r : rows)
		c += static_cast<int>(std::count(r.begin(), r.end(), label));
	return c;
}

std::string Tableau::str() const
{
	std::string s;
	for (std::size_t i = 0; i < rows.size(); ++i) {
		if (i)
			s += ',';
		for (int v : rows[i])
			s += std::to_string(v);
	}
	return s;
}

bool valid_diagram(const YoungDiagram& shape)
{
	for (std::size_t i = 0; i < shape.size(); ++i) {
		if (shape[i] <= 0)
			return false;
		if (i && shape[i] > shape[i - 1])
			return false;
	}
	return true;
}

namespace {

// Fill cells row by row; `pick` supplies candidate labels for a cell.
void fill_tableaux(const YoungDiagram& shape, const std::function<std::vector<int>()>& candidates,
                   const std::function<bool(int)>& take, const std::function<void(int)>& give_back,
                   std::vector<Tableau>& out)
{
	Tableau t;
	for (int len : shape)
		t.rows.emplace_back(len, 0);
	std::vector<std::pair<int, int>> cells;
	for (std::size_t r = 0; r < shape.size(); ++r)
		for (int c = 0; c < shape[r]; ++c)
			cells.emplace_back(static_cast<int>(r), c);
	std::function<void(std::size_t)> rec = [&](std::size_t k) {
		if (k == cells.size()) {
			out.push_back(t);
			return;
		}
		auto [r, c] = cells[k];
		for (int v : candidates()) {
			if (c > 0 && v < t.rows[r][c - 1])
				continue;
			if (r > 0 && v <= t.rows[r - 1][c])
				continue;
			if (!take(v))
				continue;
			t.rows[r][c] = v;
			rec(k + 1);
			t.rows[r][c] = 0;
			give_back(v);
		}
	};
	rec(0);
}

} // namespace

std::vector<Tableau> semistandard_tableaux(const YoungDiagram& shape, std::vector<int> content)
{
	if (!valid_diagram(shape))
		throw std::invalid_argument("not a Young diagram");
	std::vector<Tableau> out;
	int cells = 0;
	for (int l : shape)
		cells += l;
	if (cells != static_cast<int>(content.size()))
		return out;
	std::map<int, int> left;
	for (int v : content)
		++left[v];
	std::vector<int> labels;
	for (const auto& kv : left)
		labels.push_back(kv.first);
	fill_tableaux(
	    shape, [&] { return labels; },
	    [&](int v) {
		    if (left[v] == 0)
			    return false;
		    --left[v];
		    return true;
	    },
	    [&](int v) { ++left[v]; }, out);
	return out;
}

std::vector<Tableau> semistandard_tableaux_bounded(const YoungDiagram& shape, int n)
{
	if (!valid_diagram(shape))
		throw std::invalid_argument("not a Young diagram");
	std::vector<int> labels;
	for (int i = 1; i <= n; ++i)
		labels.push_back(i);
	std::vector<Tableau> out;
	fill_tableaux(
	    shape, [&] { return labels; }, [](int) { return true; }, [](int) {}, out);
	return out;
}

long standard_tableaux_count(const YoungDiagram& shape)
{
	std::vector<int> content;
	int cells = 0;
	for (int l : shape)
		cells += l;
	for (int i = 1; i <= cells; ++i)
		content.push_back(i);
	return static_cast<long>(semistandard_tableaux(shape, content).size());
}

Tableau parse_tableau(const std::string& text)
{
	Tableau t;
	std::vector<int> row;
	for (char ch : text) {
		if (ch == ',' || ch == '/') {
			t.rows.push_back(row);
			row.clear();
		} else if (std::isdigit(static_cast<unsigned char>(ch))) {
			row.push_back(ch - '0');
		} else if (!std::isspace(static_cast<unsigned char>(ch))) {
			throw std::invalid_argument("bad tableau character");
		}
	}
	t.rows.push_back(row);
	if (!valid_diagram(t.shape()))
		throw std::invalid_argument("tableau rows do not form a Young diagram");
	return t;
}

namespace {

// Sort in place; returns the permutation sign, or 0 on a repeated label.
int sort_with_sign(Column& c)
{
	int sign = 1;
	for (std::size_t i = 1; i < c.size(); ++i)
		for (std::size_t j = i; j > 0 && c[j - 1] >= c[j]; --j) {
			if (c[j - 1] == c[j])
				return 0;
			std::swap(c[j - 1], c[j]);
			sign = -sign;
		}
	return sign;
}

} // namespace

void BracketExpr::add(BracketMono mono, const Q& c)
{
	if (c == 0)
		return;
	int sign = 1;
	for (auto& col : mono) {
		int s = sort_with_sign(col);
		if (s == 0)
			return;
		sign *= s;
	}
	std::sort(mono.begin(), mono.end());
	Q v = sign > 0 ? c : Q(-c);
	auto [it, fresh] = terms_.try_emplace(mono, v);
	if (!fresh) {
		it->second += v;
		if (it->second == 0)
			terms_.erase(it);
	}
}

BracketExpr& BracketExpr::operator+=(const BracketExpr& o)
{
	for (const auto& [m, c] : o.terms_)
		add(m, c);
	return *this;
}

BracketExpr BracketExpr::operator*(const Q& c) const
{
	BracketExpr r;
	for (const auto& [m, v] : terms_)
		r.add(m, v * c);
	return r;
}

BracketExpr operator-(const BracketExpr& a, const BracketExpr& b)
{
	BracketExpr r = a;
	r += b * Q(-1);
	return r;
}

namespace {

std::string column_str(const Column& c)
{
	bool small = std::all_of(c.begin(), c.end(), [](int v) { return v >= 0 && v < 10; });
	std::string s = "[";
	for (std::size_t i = 0; i < c.size(); ++i) {
		if (i && !small)
			s += ',';
		s += std::to_string(c[i]);
	}
	return s + "]";
}

} // namespace

std::string BracketExpr::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto& [m, c] : terms_) {
		Q a = abs(c);
		if (first)
			out += c < 0 ? "-" : "";
		else
			out += c < 0 ? " - " : " + ";
		first = false;
		if (a != 1)
			out += q_str(a);
		for (const auto& col : m)
			out += column_str(col);
	}
	return out;
}

BracketExpr tableau_to_bracket(const Tableau& T)
{
	if (!T.is_rectangular() || T.rows.empty())
		throw std::invalid_argument("tableau_to_bracket needs a rectangular tableau");
	BracketMono m;
	for (std::size_t c = 0; c < T.rows[0].size(); ++c) {
		Column col;
		for (const auto& r : T.rows)
			col.push_back(r[c]);
		m.push_back(col);
	}
	BracketExpr e;
	e.add(m, Q(1));
	return e;
}

bool is_semistandard(const BracketMono& m)
{
	for (std::size_t j = 1; j < m.size(); ++j)
		for (std::size_t r = 0; r < m[j].size(); ++r)
			if (m[j - 1][r] > m[j][r])
				return false;
	return true;
}

namespace {

int perm_sign(const std::vector<int>& seq)
{
	int inv = 0;
	for (std::size_t i = 0; i < seq.size(); ++i)
		for (std::size_t j = i + 1; j < seq.size(); ++j)
			if (seq[i] > seq[j])
				++inv;
	return inv % 2 ? -1 : 1;
}

// Rewrites the monomial through the shuffle syzygy on its first row
// violation; returns false if already semistandard.
bool straighten_step(const BracketMono& m, const Q& coeff, BracketExpr& out)
{
	for (std::size_t j = 1; j < m.size(); ++j) {
		const Column& a = m[j - 1];
		const Column& b = m[j];
		const int k = static_cast<int>(a.size());
		int r = -1;
		for (int i = 0; i < k; ++i)
			if (a[i] > b[i]) {
				r = i;
				break;
			}
		if (r < 0)
			continue;
		// S = a[r..k-1] ∪ b[0..r], listed in that order
		std::vector<int> S(a.begin() + r, a.end());
		S.insert(S.end(), b.begin(), b.begin() + r + 1);
		const int s = static_cast<int>(S.size());
		const int take = k - r;
		// iterate over all splits via a sorted selection mask
		std::vector<int> mask(s, 0);
		std::fill(mask.end() - take, mask.end(), 1);
		do {
			std::vector<int> pos, X, Y;
			for (int i = 0; i < s; ++i)
				if (mask[i]) {
					pos.push_back(i);
					X.push_back(S[i]);
				}
			for (int i = 0; i < s; ++i)
				if (!mask[i]) {
					pos.push_back(i);
					Y.push_back(S[i]);
				}
			bool identity = true;
			for (int i = 0; i < s; ++i)
				if (pos[i] != i)
					identity = false;
			if (identity)
				continue;
			int sg = perm_sign(pos);
			BracketMono t;
			for (std::size_t l = 0; l < m.size(); ++l)
				if (l != j - 1 && l != j)
					t.push_back(m[l]);
			Column c1(a.begin(), a.begin() + r);
			c1.insert(c1.end(), X.begin(), X.end());
			Column c2 = Y;
			c2.insert(c2.end(), b.begin() + r + 1, b.end());
			t.push_back(c1);
			t.push_back(c2);
			out.add(t, sg > 0 ? Q(-coeff) : coeff);
		} while (std::next_permutation(mask.begin(), mask.end()));
		return true;
	}
	return false;
}

} // namespace

BracketExpr pluecker_straighten(const BracketExpr& B)
{
	BracketExpr done;
	BracketExpr work = B;
	const long cap = 10000000;
	long steps = 0;
	while (!work.is_zero()) {
		if (++steps > cap)
			throw std::runtime_error("straightening did not terminate");
		// the largest monomial first guarantees progress in lex order of monomials
		auto it = std::prev(work.terms().end());
		BracketMono m = it->first;
		Q c = it->second;
		BracketExpr next = work;
		next.add(m, -c);
		if (is_semistandard(m)) {
			done.add(m, c);
		} else {
			straighten_step(m, c, next);
		}
		work = std::move(next);
	}
	return done;
}

BracketExpr parse_brackets(const std::string& text)
{
	BracketExpr out;
	std::size_t i = 0;
	auto skip = [&] {
		while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
			++i;
	};
	skip();
	if (i == text.size())
		throw std::invalid_argument("empty bracket expression");
	while (i < text.size()) {
		Q sign = 1;
		skip();
		if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
			if (text[i] == '-')
				sign = -1;
			++i;
			skip();
		}
		Q coeff = 1;
		std::size_t start = i;
		while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
			++i;
		if (i > start)
			coeff = parse_q(text.substr(start, i - start));
		skip();
		if (i < text.size() && text[i] == '*')
			++i;
		BracketMono mono;
		for (;;) {
			skip();
			if (i >= text.size() || text[i] != '[')
				break;
			++i;
			std::size_t close = text.find(']', i);
			if (close == std::string::npos)
				throw std::invalid_argument("unterminated bracket");
			std::string body = text.substr(i, close - i);
			i = close;
			// "[134]" lists digits; "[1,10]" lists comma separated labels
			Column col;
			if (body.find(',') == std::string::npos) {
				for (char ch : body) {
					if (std::isdigit(static_cast<unsigned char>(ch)))
						col.push_back(ch - '0');
					else if (!std::isspace(static_cast<unsigned char>(ch)))
						throw std::invalid_argument("bad bracket character");
				}
			} else {
				std::stringstream ss(body);
				std::string part;
				while (std::getline(ss, part, ',')) {
					std::size_t used = 0;
					int v = 0;
					try {
						v = std::stoi(part, &used);
					} catch (const std::exception&) {
						throw std::invalid_argument("bad bracket label");
					}
					if (part.find_first_not_of(" \t", used) != std::string::npos)
						throw std::invalid_argument("bad bracket label");
					col.push_back(v);
				}
			}
			++i;
			int power = 1;
			skip();
			if (i < text.size() && text[i] == '^') {
				++i;
				std::size_t ps = i;
				while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
					++i;
				if (ps == i)
					throw std::invalid_argument("bracket power expected");
				power = std::stoi(text.substr(ps, i - ps));
			}
			for (int p = 0; p < power; ++p)
				mono.push_back(col);
			skip();
			if (i < text.size() && text[i] == '*')
				++i;
		}
		if (mono.empty())
			throw std::invalid_argument("bracket monomial expected");
		out.add(mono, sign * coeff);
		skip();
	}
	return out;
}

Q evaluate_brackets(const BracketExpr& B, const std::map<int, std::vector<Q>>& points)
{
	Q total = 0;
	for (const auto& [mono, c] : B.terms()) {
		Q prod = c;
		for (const auto& col : mono) {
			const int k = static_cast<int>(col.size());
			std::vector<std::vector<Q>> rows;
			for (int label : col) {
				auto it = points.find(label);
				if (it == points.end() || static_cast<int>(it->second.size()) != k)
					throw std::invalid_argument("missing or malformed point for bracket label");
				rows.push_back(it->second);
			}
			// small determinant by elimination
			Q det = 1;
			for (int cc = 0; cc < k; ++cc) {
				int p = -1;
				for (int i = cc; i < k; ++i)
					if (rows[i][cc] != 0) {
						p = i;
						break;
					}
				if (p < 0) {
					det = 0;
					break;
				}
				if (p != cc) {
					std::swap(rows[p], rows[cc]);
					det = -det;
				}
				det *= rows[cc][cc];
				for (int i = cc + 1; i < k; ++i) {
					Q f = rows[i][cc] / rows[cc][cc];
					for (int j = cc; j < k; ++j)
						rows[i][j] -= f * rows[cc][j];
				}
			}
			prod *= det;
		}
		total += prod;
	}
	return total;
}

Poly symbolic_invariant(const Tableau& T, int d, int m, int n)
{
	if (n != 1 && n != 2)
		throw std::invalid_argument("symbolic expansion supports n = 1 or 2");
	if (!T.is_rectangular() || static_cast<int>(T.rows.size()) != n + 1)
		throw std::invalid_argument("tableau must have n+1 equal rows");
	for (int k = 1; k <= m; ++k)
		if (T.label_count(k) != d)
			throw std::invalid_argument("each label 1..m must appear exactly d times");
	int cells = static_cast<int>(T.rows.size() * T.rows[0].size());
	if (cells != m * d)
		throw std::invalid_argument("tableau has labels outside 1..m");

	Ring coeff = n == 1 ? binary_ring(d) : ternary_ring(d);
	std::vector<std::string> names = *coeff;
	for (int k = 1; k <= m; ++k)
		for (int c = 0; c <= n; ++c)
			names.push_back("_b" + std::to_string(k) + "_" + std::to_string(c));
	Ring r = make_ring(names);
	const int nc = static_cast<int>(coeff->size());
	auto bvar = [&](int label, int c) { return nc + (label - 1) * (n + 1) + c; };

	const int g = static_cast<int>(T.rows[0].size());
	std::vector<int> last(m + 1, -1);
	for (int col = 0; col < g; ++col)
		for (const auto& row : T.rows)
			last[row[col]] = col;

	Poly acc = Poly::constant(r, Q(1));
	for (int col = 0; col < g; ++col) {
		// determinant of the column's linear forms
		std::vector<int> labels;
		for (const auto& row : T.rows)
			labels.push_back(row[col]);
		Poly det(r);
		std::vector<int> perm(n + 1);
		for (int i = 0; i <= n; ++i)
			perm[i] = i;
		do {
			Mono mm(r->size(), 0);
			for (int i = 0; i <= n; ++i)
				mm[bvar(labels[i], perm[i])] += 1;
			det.add_term(mm, Q(perm_sign(perm)));
		} while (std::next_permutation(perm.begin(), perm.end()));
		acc = acc * det;
		// contract every label whose last column this was
		for (int label = 1; label <= m; ++label) {
			if (last[label] != col)
				continue;
			Poly contracted(r);
			for (const auto& [mono, c] : acc.terms()) {
				Mono mm = mono;
				TIndex e = {0, 0, 0};
				for (int cc = 0; cc <= n; ++cc) {
					e[cc] = mm[bvar(label, cc)];
					mm[bvar(label, cc)] = 0;
				}
				int idx = n == 1 ? e[1] : ternary_position(d, e);
				mm[idx] += 1;
				contracted.add_term(mm, c);
			}
			acc = std::move(contracted);
		}
	}
	return acc.in_ring(coeff);
}

Ring symmetric_ring(int nvars)
{
	std::vector<std::string> names;
	for (int i = 1; i <= nvars; ++i)
		names.push_back("x" + std::to_string(i));
	return make_ring(names);
}

Poly schur_polynomial(const YoungDiagram& shape, int nvars)
{
	Ring r = symmetric_ring(nvars);
	Poly s(r);
	YoungDiagram sh;
	for (int p : shape)
		if (p > 0)
			sh.push_back(p);
	if (sh.empty())
		return Poly::constant(r, Q(1));
	for (const auto& t : semistandard_tableaux_bounded(sh, nvars)) {
		Mono m(nvars, 0);
		for (const auto& row : t.rows)
			for (int v : row)
				m[v - 1] += 1;
		s.add_term(m, Q(1));
	}
	return s;
}

Poly plethysm_character(int k, int d, int nvars)
{
	Ring r = symmetric_ring(nvars);
	// monomials of degree d
	std::vector<Mono> mons;
	Mono cur(nvars, 0);
	std::function<void(int, int)> rec = [&](int i, int left) {
		if (i == nvars - 1) {
			cur[i] = left;
			mons.push_back(cur);
			cur[i] = 0;
			return;
		}
		for (int e = left; e >= 0; --e) {
			cur[i] = e;
			rec(i + 1, left - e);
		}
		cur[i] = 0;
	};
	rec(0, d);
	Poly out(r);
	std::vector<int> pick;
	std::function<void(int, int)> choose = [&](int start, int left) {
		if (left == 0) {
			Mono m(nvars, 0);
			for (int p : pick)
				for (int i = 0; i < nvars; ++i)
					m[i] += mons[p][i];
			out.add_term(m, Q(1));
			return;
		}
		for (int p = start; p < static_cast<int>(mons.size()); ++p) {
			pick.push_back(p);
			choose(p, left - 1);
			pick.pop_back();
		}
	};
	choose(0, k);
	return out;
}

std::vector<std::pair<YoungDiagram, int>> schur_decompose(const Poly& sym)
{
	const int n = sym.nvars();
	for (const auto& [m, c] : sym.terms()) {
		Mono s = m;
		std::sort(s.begin(), s.end());
		do {
			if (sym.coeff(s) != c)
				throw std::invalid_argument("input is not symmetric");
		} while (std::next_permutation(s.begin(), s.end()));
	}
	std::vector<std::pair<YoungDiagram, int>> out;
	Poly rest = sym;
	while (!rest.is_zero()) {
		// lex-largest monomial of top degree is a partition
		int top = rest.degree();
		Mono lead;
		Q c;
		for (const auto& [m, v] : rest.terms())
			if (mono_degree(m) == top) {
				lead = m;
				c = v;
				break;
			}
		if (c < 0 || c.get_den() != 1)
			throw std::invalid_argument("negative or fractional Schur multiplicity");
		YoungDiagram lam;
		for (int e : lead)
			if (e > 0)
				lam.push_back(e);
		Poly s = schur_polynomial(lam, n).in_ring(sym.ring());
		rest -= s * c;
		out.emplace_back(lam, static_cast<int>(c.get_num().get_si()));
	}
	return out;
}

} // namespace invt
