#include "partchain/rational.hpp"

#include "partchain/errors.hpp"

namespace partchain {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    if (den < 0) {
        return Rational(-num, -den);
    }
    return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
    const auto bad = [&] { return DomainError("malformed rational '" + text + "'"); };
    if (text.empty()) {
        throw bad();
    }
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) {
            throw bad();
        }
        return make_rational(Integer(num), Integer(den));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string format_rational(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

bool is_integral(const Rational& value) {
    return denominator(value) == 1;
}

Integer to_integer(const Rational& value) {
    if (!is_integral(value)) {
        throw DomainError("expected an integer, got " + format_rational(value));
    }
    return numerator(value);
}

Integer factorial(long n) {
    if (n < 0) {
        throw DomainError("factorial of negative argument");
    }
    Integer out = 1;
    for (long i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer out = 1;
    for (long i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

Rational rational_binomial(const Rational& x, long m) {
    if (m < 0) {
        return 0;
    }
    Rational out = 1;
    for (long i = 0; i < m; ++i) {
        out *= x - i;
    }
    return out / Rational(factorial(m));
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) {
            throw DomainError("negative power of zero");
        }
        return 1 / rational_pow(base, -exp);
    }
    Rational out = 1;
    Rational b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) {
            out *= b;
        }
        b *= b;
    }
    return out;
}

}  // namespace partchain
