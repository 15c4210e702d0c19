#pragma once

#include "poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace invt {

using YoungDiagram = std::vector<int>;

struct Tableau {
	std::vector<std::vector<int>> rows;

	YoungDiagram shape() const;
	bool is_rectangular() const;
	int label_count(int label) const;
	std::string str() const; // rows joined by ','
	friend bool operator==(const Tableau&, const Tableau&) = default;
};

bool valid_diagram(const YoungDiagram& shape);

// Fillings with exactly this multiset of labels, in lexicographic order of
// the row reading word.
std::vector<Tableau> semistandard_tableaux(const YoungDiagram& shape, std::vector<int> content);
// Labels 1…n with repetition allowed.
std::vector<Tableau> semistandard_tableaux_bounded(const YoungDiagram& shape, int n);
long standard_tableaux_count(const YoungDiagram& shape);

// "111122,223333" -> two rows
Tableau parse_tableau(const std::string& text);

using Column = std::vector<int>;
using BracketMono = std::vector<Column>;

// Linear combination of bracket monomials. Columns are kept sorted with the
// sign absorbed; a column with a repeated label vanishes.
class BracketExpr {
public:
	void add(BracketMono mono, const Q& c);
	const std::map<BracketMono, Q>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	BracketExpr& operator+=(const BracketExpr& o);
	BracketExpr operator*(const Q& c) const;
	friend BracketExpr operator-(const BracketExpr& a, const BracketExpr& b);
	friend bool operator==(const BracketExpr& a, const BracketExpr& b) { return a.terms_ == b.terms_; }
	std::string str() const;

private:
	std::map<BracketMono, Q> terms_;
};

BracketExpr tableau_to_bracket(const Tableau& T);
bool is_semistandard(const BracketMono& m);
// Normal form on semistandard monomials.
BracketExpr pluecker_straighten(const BracketExpr& B);
// "[13][24] - 2[12]^2[34]"
BracketExpr parse_brackets(const std::string& text);

// Evaluate with point coordinates; points[label] has n+1 entries.
Q evaluate_brackets(const BracketExpr& B, const std::map<int, std::vector<Q>>& points);

// Symmetrized tableau function for m forms of degree d in n+1 variables,
// over binary_ring(d) (n = 1) or ternary_ring(d) (n = 2).
Poly symbolic_invariant(const Tableau& T, int d, int m, int n);

Ring symmetric_ring(int nvars); // x1 … xn
Poly schur_polynomial(const YoungDiagram& shape, int nvars);
// Character of S^k(S^d C^n) as a symmetric polynomial.
Poly plethysm_character(int k, int d, int nvars);
std::vector<std::pair<YoungDiagram, int>> schur_decompose(const Poly& sym);

} // namespace invt
