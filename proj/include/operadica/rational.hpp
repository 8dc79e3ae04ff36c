#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace operadica {

// Exact rational scalar for the whole engine. Backed by GMP; always kept in
// lowest terms with positive denominator (mpq_class canonical form).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "3", "-1/3", "2/5". Returns nullopt on malformed input or zero
// denominator.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& r);

// n! as an exact integer value.
Rational factorial(int n);

// Binomial coefficient C(n, k), zero outside the triangle.
Rational binomial(int n, int k);

}  // namespace operadica
