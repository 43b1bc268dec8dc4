#include "resknap/rat.hpp"

#include <cmath>

namespace resknap {

Rat rat_from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = (text[pos] == '-');
        ++pos;
    }
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    bool seen_digit = false, seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((ch == 'e' || ch == 'E') && seen_digit) {
            std::size_t parsed = 0;
            std::string tail(text.substr(pos + 1));
            try {
                exponent = std::stol(tail, &parsed);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed number: " + std::string(text));
            }
            if (parsed != tail.size())
                throw std::invalid_argument("malformed number: " + std::string(text));
            break;
        } else {
            throw std::invalid_argument("malformed number: " + std::string(text));
        }
    }
    if (!seen_digit) throw std::invalid_argument("malformed number: " + std::string(text));
    mpz_class num(digits.empty() ? "0" : digits, 10);
    mpz_class den(1);
    for (long i = exponent; i < frac_digits; ++i) den *= 10;
    for (long i = frac_digits; i < exponent; ++i) num *= 10;
    Rat r(num, den);
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

Rat rat_floor_to_denom(const Rat& x, const mpz_class& scale_denom) {
    mpz_class scaled_num = x.get_num() * scale_denom;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, scale_denom);
    r.canonicalize();
    return r;
}

namespace {

mpz_class pow10(int decimals) {
    mpz_class d(1);
    for (int i = 0; i < decimals; ++i) d *= 10;
    return d;
}

}  // namespace

Rat rat_from_double_floor(double x, int decimals) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    mpz_class scale = pow10(decimals);
    Rat exact(x);  // exact binary expansion of the double
    return rat_floor_to_denom(exact, scale);
}

Rat rat_from_double_ceil(double x, int decimals) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    mpz_class scale = pow10(decimals);
    Rat exact(x);
    Rat floored = rat_floor_to_denom(exact, scale);
    if (floored == exact) return floored;
    return floored + Rat(1, scale);
}

}  // namespace resknap
