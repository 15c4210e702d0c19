#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace invt {

// Exact rational. mpq_class keeps lowest terms once canonicalized.
using Q = mpq_class;

inline Q make_q(long num, long den = 1)
{
	Q r(num, den);
	r.canonicalize();
	return r;
}

// "num/den", or "num" when the denominator is 1.
inline std::string q_str(const Q& q) { return q.get_str(); }

inline Q parse_q(const std::string& s)
{
	Q r;
	if (r.set_str(s, 10) != 0)
		throw std::invalid_argument("bad rational: " + s);
	if (r.get_den() == 0)
		throw std::invalid_argument("zero denominator: " + s);
	r.canonicalize();
	return r;
}

inline Q binom_q(long n, long k)
{
	if (k < 0 || n < 0 || k > n)
		return Q(0);
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
	return Q(r);
}

inline Q factorial_q(long n)
{
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
	return Q(r);
}

// Small random rationals for randomized identity checks.
inline Q random_q(std::mt19937_64& rng, int num_range = 9, int den_max = 5)
{
	std::uniform_int_distribution<int> n(-num_range, num_range);
	std::uniform_int_distribution<int> d(1, den_max);
	return make_q(n(rng), d(rng));
}

} // namespace invt
