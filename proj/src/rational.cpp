#include "hdx/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hdx {

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational harmonic(long a, long b) {
    Rational sum = 0;
    for (long i = a; i <= b; ++i) sum += make_rational(1, i);
    return sum;
}

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double to_double(const Rational& q) { return q.get_d(); }

std::string rational_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto bad = [&] { return std::invalid_argument("parse_rational: cannot parse '" + text + "'"); };

    auto parse_int = [&](const std::string& t) -> Int {
        if (t.empty()) throw bad();
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (std::size_t p = i; p < t.size(); ++p)
            if (!std::isdigit(static_cast<unsigned char>(t[p]))) throw bad();
        Int v(t.substr(i), 10);
        return (t[0] == '-') ? Int(-v) : v;
    };

    if (auto slash = text.find('/'); slash != std::string::npos) {
        Int num = parse_int(text.substr(0, slash));
        Int den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
        return make_rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string head = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.empty()) throw bad();
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
        bool neg = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") head += "0";
        Int whole = parse_int(head);
        Int scale = 1;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Int num = whole * scale;
        Int fnum(frac, 10);
        num += neg ? -fnum : fnum;
        return make_rational(num, scale);
    }
    return Rational(parse_int(text));
}

}  // namespace hdx
