#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace invt {

int mono_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool grlex_greater(const Mono& a, const Mono& b)
{
	int da = mono_degree(a), db = mono_degree(b);
	if (da != db)
		return da > db;
	return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool GrlexDesc::operator()(const Mono& a, const Mono& b) const { return grlex_greater(a, b); }

Ring make_ring(std::vector<std::string> names)
{
	return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Ring join_rings(const Ring& a, const Ring& b)
{
	if (!a)
		return b;
	if (!b)
		return a;
	std::vector<std::string> names = *a;
	for (const auto& n : *b)
		if (std::find(names.begin(), names.end(), n) == names.end())
			names.push_back(n);
	return make_ring(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b)
{
	if (a == b)
		return true;
	if (!a || !b)
		return false;
	return *a == *b;
}

int ring_index(const Ring& r, const std::string& name)
{
	if (!r)
		return -1;
	auto it = std::find(r->begin(), r->end(), name);
	return it == r->end() ? -1 : static_cast<int>(it - r->begin());
}

Poly Poly::constant(Ring r, const Q& c)
{
	Poly p(r);
	p.add_term(Mono(p.nvars(), 0), c);
	return p;
}

Poly Poly::var(Ring r, int i)
{
	Poly p(r);
	if (i < 0 || i >= p.nvars())
		throw std::out_of_range("variable index");
	Mono m(p.nvars(), 0);
	m[i] = 1;
	p.add_term(m, Q(1));
	return p;
}

Poly Poly::var(Ring r, const std::string& name)
{
	int i = ring_index(r, name);
	if (i < 0)
		throw std::invalid_argument("unknown variable " + name);
	return var(r, i);
}

Poly Poly::monomial(Ring r, Mono m, const Q& c)
{
	Poly p(r);
	if (static_cast<int>(m.size()) != p.nvars())
		throw std::invalid_argument("monomial length");
	p.add_term(m, c);
	return p;
}

Q Poly::coeff(const Mono& m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Q(0) : it->second;
}

void Poly::add_term(const Mono& m, const Q& c)
{
	if (c == 0)
		return;
	auto [it, fresh] = terms_.try_emplace(m, c);
	if (!fresh) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

void Poly::adopt(const Poly& o)
{
	if (same_ring(ring_, o.ring_))
		return;
	if (!ring_ && terms_.empty()) {
		ring_ = o.ring_;
		return;
	}
	if (!o.ring_ && o.terms_.empty())
		return;
	throw std::invalid_argument("polynomials over different rings");
}

Poly& Poly::operator+=(const Poly& o)
{
	adopt(o);
	for (const auto& [m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
	adopt(o);
	for (const auto& [m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

Poly& Poly::operator*=(const Q& c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& t : terms_)
		t.second *= c;
	return *this;
}

Poly Poly::operator-() const
{
	Poly r = *this;
	for (auto& t : r.terms_)
		t.second = -t.second;
	return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
	Poly r;
	r.ring_ = a.ring_ ? a.ring_ : b.ring_;
	if (a.is_zero() || b.is_zero())
		return r;
	if (!same_ring(a.ring_, b.ring_))
		throw std::invalid_argument("polynomials over different rings");
	const int n = a.nvars();
	Mono m(n);
	for (const auto& [ma, ca] : a.terms_) {
		for (const auto& [mb, cb] : b.terms_) {
			for (int i = 0; i < n; ++i)
				m[i] = ma[i] + mb[i];
			r.add_term(m, ca * cb);
		}
	}
	return r;
}

bool operator==(const Poly& a, const Poly& b)
{
	if (a.is_zero() && b.is_zero())
		return true;
	if (!same_ring(a.ring_, b.ring_))
		return false;
	return a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned e) const
{
	Poly result = constant(ring_, Q(1));
	Poly base = *this;
	while (e) {
		if (e & 1u)
			result = result * base;
		e >>= 1;
		if (e)
			base = base * base;
	}
	return result;
}

Poly Poly::diff(int var) const
{
	Poly r(ring_);
	for (const auto& [m, c] : terms_) {
		if (m[var] == 0)
			continue;
		Mono mm = m;
		mm[var] -= 1;
		r.add_term(mm, c * m[var]);
	}
	return r;
}

Q Poly::eval(const std::vector<Q>& point) const
{
	if (static_cast<int>(point.size()) != nvars())
		throw std::invalid_argument("evaluation point has wrong length");
	Q total = 0;
	for (const auto& [m, c] : terms_) {
		Q t = c;
		for (int i = 0; i < nvars(); ++i) {
			for (int k = 0; k < m[i]; ++k)
				t *= point[i];
		}
		total += t;
	}
	return total;
}

Poly Poly::subs(const std::vector<Poly>& images) const
{
	if (static_cast<int>(images.size()) != nvars())
		throw std::invalid_argument("substitution has wrong length");
	Ring target;
	for (const auto& im : images)
		if (im.ring())
			target = im.ring();
	Poly result(target);
	// powers are reused across terms
	std::vector<std::vector<Poly>> powers(nvars());
	auto power = [&](int i, int k) -> const Poly& {
		auto& v = powers[i];
		if (v.empty())
			v.push_back(constant(target, Q(1)));
		while (static_cast<int>(v.size()) <= k)
			v.push_back(v.back() * images[i]);
		return v[k];
	};
	for (const auto& [m, c] : terms_) {
		Poly t = constant(target, c);
		for (int i = 0; i < nvars(); ++i)
			if (m[i])
				t = t * power(i, m[i]);
		result += t;
	}
	return result;
}

Poly Poly::in_ring(const Ring& target) const
{
	if (same_ring(ring_, target))
		return *this;
	std::vector<int> map(nvars());
	for (int i = 0; i < nvars(); ++i) {
		map[i] = ring_index(target, (*ring_)[i]);
		if (map[i] < 0) {
			bool used = std::any_of(terms_.begin(), terms_.end(),
			                        [i](const auto& t) { return t.first[i] != 0; });
			if (used)
				throw std::invalid_argument("variable " + (*ring_)[i] + " missing from target ring");
		}
	}
	Poly r(target);
	Mono mm(target->size());
	for (const auto& [m, c] : terms_) {
		std::fill(mm.begin(), mm.end(), 0);
		for (int i = 0; i < nvars(); ++i)
			if (map[i] >= 0)
				mm[map[i]] = m[i];
		r.add_term(mm, c);
	}
	return r;
}

int Poly::degree() const
{
	int d = -1;
	for (const auto& t : terms_)
		d = std::max(d, mono_degree(t.first));
	return d;
}

bool Poly::is_homogeneous() const
{
	if (terms_.empty())
		return true;
	int d = mono_degree(terms_.begin()->first);
	return std::all_of(terms_.begin(), terms_.end(),
	                   [d](const auto& t) { return mono_degree(t.first) == d; });
}

int Poly::degree_in(int var) const
{
	int d = -1;
	for (const auto& t : terms_)
		d = std::max(d, t.first[var]);
	return d;
}

Poly Poly::coeff_of_power(int var, int k) const
{
	Poly r(ring_);
	for (const auto& [m, c] : terms_) {
		if (m[var] != k)
			continue;
		Mono mm = m;
		mm[var] = 0;
		r.add_term(mm, c);
	}
	return r;
}

std::string mono_str(const Ring& r, const Mono& m)
{
	std::string s;
	for (std::size_t i = 0; i < m.size(); ++i) {
		if (!m[i])
			continue;
		if (!s.empty())
			s += '*';
		s += (*r)[i];
		if (m[i] > 1)
			s += '^' + std::to_string(m[i]);
	}
	return s;
}

std::string Poly::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto& [m, c] : terms_) {
		Q a = abs(c);
		std::string ms = mono_str(ring_, m);
		if (first)
			out += (c < 0) ? "-" : "";
		else
			out += (c < 0) ? " - " : " + ";
		first = false;
		if (ms.empty())
			out += q_str(a);
		else if (a == 1)
			out += ms;
		else
			out += q_str(a) + "*" + ms;
	}
	return out;
}

namespace {

class Parser {
public:
	Parser(const Ring& r, const std::string& s) : ring_(r), s_(s) {}

	Poly parse()
	{
		Poly p = expr();
		skip();
		if (pos_ != s_.size())
			fail("trailing input");
		return p;
	}

private:
	[[noreturn]] void fail(const std::string& what)
	{
		throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + what);
	}

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool eat(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	Poly expr()
	{
		Poly acc(ring_);
		bool neg = false;
		if (eat('-'))
			neg = true;
		else
			eat('+');
		Poly t = term();
		acc += neg ? -t : t;
		for (;;) {
			if (eat('+'))
				acc += term();
			else if (eat('-'))
				acc -= term();
			else
				break;
		}
		return acc;
	}

	Poly term()
	{
		Poly t = factor();
		while (eat('*'))
			t = t * factor();
		return t;
	}

	Poly factor()
	{
		Poly b = primary();
		if (eat('^')) {
			skip();
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			if (start == pos_)
				fail("exponent expected");
			b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
		}
		return b;
	}

	Poly primary()
	{
		skip();
		if (pos_ >= s_.size())
			fail("unexpected end");
		char c = s_[pos_];
		if (c == '(') {
			++pos_;
			Poly p = expr();
			if (!eat(')'))
				fail("')' expected");
			return p;
		}
		if (c == '-') {
			++pos_;
			return -factor();
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
				++pos_;
			return Poly::constant(ring_, parse_q(s_.substr(start, pos_ - start)));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			std::size_t start = pos_;
			while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				++pos_;
			std::string name = s_.substr(start, pos_ - start);
			if (ring_index(ring_, name) < 0)
				fail("unknown variable " + name);
			return Poly::var(ring_, name);
		}
		fail(std::string("unexpected '") + c + "'");
	}

	const Ring& ring_;
	const std::string& s_;
	std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const Ring& r, const std::string& text) { return Parser(r, text).parse(); }

} // namespace invt
