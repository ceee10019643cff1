#include "statcert/rational.hpp"

#include "statcert/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace statcert {

int sign(const Rational& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw InputError("empty rational literal");
    const auto slash = text.find('/');
    Rational r;
    try {
        if (slash == std::string::npos) {
            r = Rational(Integer(text));
        } else {
            if (text.find('/', slash + 1) != std::string::npos)
                throw InputError("rational literal with more than one '/': " + text);
            Integer p(text.substr(0, slash));
            Integer q(text.substr(slash + 1));
            if (q <= 0)
                throw InputError("rational denominator must be positive: " + text);
            if (p == 0)
                throw InputError("zero must be written without a denominator: " + text);
            if (gcd(abs(p), q) != 1)
                throw InputError("rational literal not in lowest terms: " + text);
            if (q == 1)
                throw InputError("integer written with a denominator: " + text);
            r = Rational(p);
            r /= q;
        }
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational literal: " + text);
    }
    // the number parser tolerates spellings the wire format does not
    // (whitespace, leading zeros), so insist on an exact round trip
    if (format_rational(r) != text)
        throw InputError("rational literal not canonical: " + text);
    return r;
}

std::string format_rational(const Rational& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

RVector make_rvector(std::initializer_list<Rational> entries) {
    RVector v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const auto& e : entries) v(i++) = e;
    return v;
}

RVector zero_vector(Eigen::Index n) {
    return RVector::Zero(n);
}

bool lex_less(const RVector& a, const RVector& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (a(i) > b(i)) return false;
    }
    return a.size() < b.size();
}

bool vec_equal(const RVector& a, const RVector& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

bool is_zero(const RVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) return false;
    return true;
}

Rational one_norm(const RVector& v) {
    Rational s = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += abs(v(i));
    return s;
}

std::optional<Rational> exact_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    const Integer num = numerator(v), den = denominator(v);
    const Integer sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn) / Rational(sd);
}

std::optional<RVector> normalize_ray(const RVector& v) {
    const Rational s = one_norm(v);
    if (s == 0) return std::nullopt;
    RVector out = v;
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= s;
    return out;
}

bool same_direction(const RVector& a, const RVector& b) {
    const auto na = normalize_ray(a);
    const auto nb = normalize_ray(b);
    return na && nb && vec_equal(*na, *nb);
}

std::string format_vector(const RVector& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v(i));
    }
    out += ")";
    return out;
}

}  // namespace statcert
