#ifndef STATCERT_RATIONAL_HPP
#define STATCERT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace statcert {

/**
 * Exact rational scalar. GMP keeps values canonical (lowest terms,
 * positive denominator), which the serialization layer relies on.
 */
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/** -1, 0, or +1. */
int sign(const Rational& v);

/**
 * Parse "p", "-p", or "p/q". The text must be canonical: q > 0,
 * gcd(|p|, q) = 1, and no "0/q" spelling. Throws InputError otherwise.
 */
Rational parse_rational(const std::string& text);

/** Canonical text form: "p" for integers, "p/q" otherwise. */
std::string format_rational(const Rational& v);

RVector make_rvector(std::initializer_list<Rational> entries);
RVector zero_vector(Eigen::Index n);

/** Strict lexicographic order on equally sized vectors. */
bool lex_less(const RVector& a, const RVector& b);

/** Exact componentwise equality (false on size mismatch). */
bool vec_equal(const RVector& a, const RVector& b);

/** True when every entry is zero. */
bool is_zero(const RVector& v);

/** Sum of absolute entries. */
Rational one_norm(const RVector& v);

/** Exact square root when v is a perfect square of a rational. */
std::optional<Rational> exact_sqrt(const Rational& v);

/**
 * Canonical representative of a ray direction: v divided by its 1-norm.
 * Returns nullopt for the zero vector.
 */
std::optional<RVector> normalize_ray(const RVector& v);

/** True when a == t*b for some t > 0 (both nonzero). */
bool same_direction(const RVector& a, const RVector& b);

std::string format_vector(const RVector& v);

}  // namespace statcert

#endif
