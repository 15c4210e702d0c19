#pragma once

#include "rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace invt {

using Mono = std::vector<int>;

// Graded lex, larger first: a monomial precedes another of smaller total
// degree; ties are broken lexicographically along the ring's variable order.
struct GrlexDesc {
	bool operator()(const Mono& a, const Mono& b) const;
};

bool grlex_greater(const Mono& a, const Mono& b);
int mono_degree(const Mono& m);

using Ring = std::shared_ptr<const std::vector<std::string>>;

Ring make_ring(std::vector<std::string> names);
Ring join_rings(const Ring& a, const Ring& b);
bool same_ring(const Ring& a, const Ring& b);
int ring_index(const Ring& r, const std::string& name); // -1 if absent

class Poly {
public:
	using TermMap = std::map<Mono, Q, GrlexDesc>;

	Poly() = default;
	explicit Poly(Ring r) : ring_(std::move(r)) {}

	static Poly constant(Ring r, const Q& c);
	static Poly var(Ring r, int i);
	static Poly var(Ring r, const std::string& name);
	static Poly monomial(Ring r, Mono m, const Q& c = Q(1));

	const Ring& ring() const { return ring_; }
	int nvars() const { return ring_ ? static_cast<int>(ring_->size()) : 0; }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	Q coeff(const Mono& m) const;
	void add_term(const Mono& m, const Q& c);

	// Leading term in grlex order; undefined on zero.
	const Mono& lead_mono() const { return terms_.begin()->first; }
	const Q& lead_coeff() const { return terms_.begin()->second; }

	Poly& operator+=(const Poly& o);
	Poly& operator-=(const Poly& o);
	Poly& operator*=(const Q& c);
	Poly operator-() const;

	friend Poly operator+(Poly a, const Poly& b) { return a += b; }
	friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
	friend Poly operator*(const Poly& a, const Poly& b);
	friend Poly operator*(Poly a, const Q& c) { return a *= c; }
	friend Poly operator*(const Q& c, Poly a) { return a *= c; }
	friend bool operator==(const Poly& a, const Poly& b);

	Poly pow(unsigned e) const;
	Poly diff(int var) const;
	Q eval(const std::vector<Q>& point) const;
	// Variable i is replaced by images[i]; all images share one ring.
	Poly subs(const std::vector<Poly>& images) const;
	// Same polynomial over a ring containing every used variable name.
	Poly in_ring(const Ring& target) const;

	int degree() const; // -1 for zero
	bool is_homogeneous() const;
	int degree_in(int var) const;

	// Coefficient of var^k, as a polynomial in the same ring.
	Poly coeff_of_power(int var, int k) const;

	std::string str() const;

private:
	void adopt(const Poly& o);

	Ring ring_;
	TermMap terms_;
};

std::string mono_str(const Ring& r, const Mono& m);

// Recursive-descent parser: rationals, names of the ring, + - * ^ and parentheses.
Poly parse_poly(const Ring& r, const std::string& text);

} // namespace invt
