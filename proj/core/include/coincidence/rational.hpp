#pragma once

// Exact rational arithmetic used for every probability that is built from
// integer counts. Values are converted to double only for reporting and for
// the Monte Carlo samplers.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coincidence {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "p", or a plain decimal such as "0.125" (converted exactly).
// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Integer factorial(unsigned n);
Integer binomial_coefficient(unsigned n, unsigned k);

// Probability helpers shared by several modules.
bool is_probability(const Rational& r);
bool is_probability(double p);

// A draw weight: a finite nonnegative rational or infinity (a forced draw).
class Weight {
public:
    Weight() = default;
    explicit Weight(Rational value);

    static Weight infinite();

    // Accepts what parse_rational accepts plus "inf".
    static Weight parse(std::string_view text);

    bool is_infinite() const { return infinite_; }
    // Precondition: !is_infinite().
    const Rational& value() const { return value_; }

    std::string to_string() const;

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    bool infinite_ = false;
    Rational value_ = 0;
};

}  // namespace coincidence
