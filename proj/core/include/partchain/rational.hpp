#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace partchain {

namespace mp = boost::multiprecision;

// Expression templates are disabled so that both types behave as plain
// values (usable as map keys, in std::variant, with auto deduction).
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

/// num/den in lowest terms with positive denominator; throws DomainError on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or a bare integer "p".
Rational parse_rational(const std::string& text);

/// Always emits the sign on the numerator and an explicit denominator: "3/2", "-1/1", "5/1".
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

bool is_integral(const Rational& value);

/// Throws DomainError unless the value is an integer.
Integer to_integer(const Rational& value);

Integer factorial(long n);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Generalized C(x, m) = x(x-1)...(x-m+1)/m! for rational x; zero when m < 0.
Rational rational_binomial(const Rational& x, long m);

/// Exact integer power; exp < 0 requires a nonzero base. 0^0 = 1.
Rational rational_pow(const Rational& base, long exp);

}  // namespace partchain
