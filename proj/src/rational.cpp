#include "tropline/rational.hpp"

#include <cctype>

#include "tropline/error.hpp"

namespace tropline {

Rat make_rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rat r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string_view body = text.substr(i);
    Rat r;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num)) throw ParseError("bad numerator", i);
        if (!all_digits(den)) throw ParseError("bad denominator", i + slash + 1);
        BigInt d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator", i + slash + 1);
        r = Rat(BigInt(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw ParseError("empty number", i);
        if (!ip.empty() && !all_digits(ip)) throw ParseError("bad integer part", i);
        if (!fp.empty() && !all_digits(fp)) throw ParseError("bad fractional part", i + dot + 1);
        BigInt scale = 1;
        for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
        BigInt whole(ip.empty() ? std::string("0") : std::string(ip));
        BigInt frac(fp.empty() ? std::string("0") : std::string(fp));
        r = Rat(whole * scale + frac, scale);
    } else {
        if (!all_digits(body)) throw ParseError("bad number", i);
        r = Rat(BigInt(std::string(body)));
    }
    r.canonicalize();
    return negative ? Rat(-r) : r;
}

BigInt floor(const Rat& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigInt ceil(const Rat& r) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

double to_double(const Rat& r) { return r.get_d(); }

}  // namespace tropline
