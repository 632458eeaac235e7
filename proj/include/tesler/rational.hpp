#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "tesler/errors.hpp"

namespace tesler {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat a rational kept in lowest terms with positive denominator
// (the canonical form maintained by GMP).
using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Builds num/den in canonical form. mpq_class does not reduce on
// construction, so this is the one safe way to make a Rat from parts.
Rat ratio(const Int& num, const Int& den);
Rat ratio(long num, long den);

bool is_integral(const Rat& q);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& q);

// Accepts "p" and "p/q", with optional sign. Throws Error on malformed
// input or zero denominator.
Rat parse_rat(const std::string& s);

Rat dot(const RatVec& x, const RatVec& y);

// Divides by the gcd of the entries. Throws Error on the zero vector.
std::vector<Int> primitive_vector(std::vector<Int> v);

}  // namespace tesler
