#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liedeform {

// GMP keeps every mpq_class canonical: gcd(|p|, q) = 1, q > 0, zero is 0/1.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q", or "p" when q = 1; the sign is carried by the numerator.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q", "-p/q" (optional leading '+'). q must be nonzero.
/// Non-canonical input such as "2/4" is reduced. Throws ParseError.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Rational& s, const Vector& b);

std::string to_string(const Vector& v);

}  // namespace liedeform
