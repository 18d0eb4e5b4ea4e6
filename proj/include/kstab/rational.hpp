#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace kstab {

// All arithmetic in this library is exact: rationals over arbitrary-precision
// integers.  Rat is always kept canonicalized (coprime, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;
using QVec = std::vector<Rat>;

// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).  Throws InputError
// on anything else, including q = 0.
Rat parse_rat(const std::string& s);

// Serializes as "p" for integers and "p/q" otherwise.
std::string rat_str(const Rat& x);

QVec parse_rat_vec(const std::vector<std::string>& parts);

Rat dot(const QVec& a, const QVec& b);
QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_scale(const Rat& c, const QVec& a);
bool vec_is_zero(const QVec& a);

// Strict lexicographic comparison, used for every canonical ordering.
bool lex_less(const QVec& a, const QVec& b);

// Scales a nonzero rational vector by the unique positive factor making it an
// integer vector with content 1.  Zero vectors pass through unchanged.
QVec primitive(const QVec& a);

// primitive() followed by a sign flip making the first nonzero entry positive.
QVec primitive_signed(const QVec& a);

std::vector<long> to_long_vec(const QVec& a);
QVec from_long_vec(const std::vector<long>& a);

}  // namespace kstab
