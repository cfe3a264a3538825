#include "coincidence/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace coincidence {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational out;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        Integer d{std::string(den), 10};
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        out = Rational(Integer(std::string(num), 10), d);
        out.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer digits{std::string(whole.empty() ? "0" : whole) + std::string(frac), 10};
        out = Rational(digits, scale);
        out.canonicalize();
    } else {
        if (!all_digits(s)) bad(text);
        out = Rational(Integer(std::string(s), 10));
    }
    return negative ? Rational(-out) : out;
}

double to_double(const Rational& r) { return r.get_d(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial_coefficient(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

bool is_probability(const Rational& r) { return r >= 0 && r <= 1; }

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

Weight::Weight(Rational value) : value_(std::move(value)) {
    if (value_ < 0) throw std::invalid_argument("weight must be nonnegative, got " + coincidence::to_string(value_));
}

Weight Weight::infinite() {
    Weight w;
    w.infinite_ = true;
    return w;
}

Weight Weight::parse(std::string_view text) {
    auto s = trim(text);
    if (s == "inf" || s == "Inf" || s == "INF" || s == "infinity") return infinite();
    return Weight(parse_rational(s));
}

std::string Weight::to_string() const { return infinite_ ? "inf" : coincidence::to_string(value_); }

}  // namespace coincidence
