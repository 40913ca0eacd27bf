#ifndef SEMISPACE_RATIONAL_HPP
#define SEMISPACE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace semispace {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after every arithmetic operation, which is exactly the invariant the rest
// of the library relies on. All coefficient arithmetic in this project is
// exact; floating point appears only in arrangement::minimize_region.
using BigRational = mpq_class;

using QVector = std::vector<BigRational>;

// Parses "p/q", "p", or "-p/q". Throws InputError on malformed text or q = 0.
BigRational rat_parse(const std::string& text);

// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const BigRational& value);

double rat_to_double(const BigRational& value);

QVector qvec_from_ints(const std::vector<long>& entries);
std::string qvec_to_string(const QVector& v);

bool qvec_is_zero(const QVector& v);

BigRational dot(const QVector& a, const QVector& b);

}  // namespace semispace

#endif
