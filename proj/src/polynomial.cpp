#include "tropline/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tropline/error.hpp"

namespace tropline {

TropicalPolynomial::TropicalPolynomial(std::map<LatticePoint3, Rat> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw PreconditionError("a tropical polynomial needs at least one term");
    for (const auto& [a, c] : terms_) {
        if (a[0] < 0 || a[1] < 0 || a[2] < 0) throw PreconditionError("negative exponent " + to_string(a));
        degree_ = std::max<int>(degree_, static_cast<int>(a[0] + a[1] + a[2]));
    }
}

std::vector<LatticePoint3> TropicalPolynomial::exponents() const {
    std::vector<LatticePoint3> out;
    for (const auto& kv : terms_) out.push_back(kv.first);
    return out;
}

std::vector<Rat> TropicalPolynomial::coefficients() const {
    std::vector<Rat> out;
    for (const auto& kv : terms_) out.push_back(kv.second);
    return out;
}

const Rat& TropicalPolynomial::coefficient(const LatticePoint3& a) const {
    auto it = terms_.find(a);
    if (it == terms_.end()) throw PreconditionError("no term with exponent " + to_string(a));
    return it->second;
}

bool TropicalPolynomial::newton_is_full_simplex() const {
    const Coord d = degree_;
    return has_term({0, 0, 0}) && has_term({d, 0, 0}) && has_term({0, d, 0}) && has_term({0, 0, d});
}

namespace {

class Parser {
public:
    Parser(std::string_view s) : s_(s) {}

    std::map<LatticePoint3, Rat> run() {
        std::map<LatticePoint3, Rat> terms;
        bool negate_next = false;
        while (true) {
            skip();
            std::size_t start = pos_;
            auto [exp, coef] = term();
            if (negate_next) coef = -coef;
            if (!terms.emplace(exp, coef).second)
                throw ParseError("duplicate exponent " + to_string(exp), start);
            skip();
            if (pos_ == s_.size()) break;
            if (s_[pos_] == '+') {
                negate_next = false;
            } else if (s_[pos_] == '-') {
                negate_next = true;
            } else {
                throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
            }
            ++pos_;
        }
        return terms;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool digit_at(std::size_t i) const {
        return i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]));
    }

    Rat coefficient() {
        skip();
        bool negative = false;
        while (pos_ < s_.size() && s_[pos_] == '-') {
            negative = !negative;
            ++pos_;
            skip();
        }
        std::size_t start = pos_;
        while (digit_at(pos_)) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (digit_at(pos_)) ++pos_;
        } else if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            if (!digit_at(pos_)) throw ParseError("expected denominator", pos_);
            while (digit_at(pos_)) ++pos_;
        }
        if (start == pos_) throw ParseError("expected coefficient", start);
        std::string_view tok = s_.substr(start, pos_ - start);
        if (tok == ".") throw ParseError("expected coefficient", start);
        Rat r;
        try {
            r = parse_rational(tok);
        } catch (const ParseError& e) {
            throw ParseError("malformed coefficient", start);
        }
        return negative ? Rat(-r) : r;
    }

    std::pair<LatticePoint3, Rat> term() {
        Rat c = coefficient();
        LatticePoint3 exp{0, 0, 0};
        bool seen[3] = {false, false, false};
        while (true) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] != '*') break;
            ++pos_;
            skip();
            if (pos_ >= s_.size()) throw ParseError("expected variable", pos_);
            char v = s_[pos_];
            int k = v == 'x' ? 0 : v == 'y' ? 1 : v == 'z' ? 2 : -1;
            if (k < 0) throw ParseError(std::string("unknown variable '") + v + "'", pos_);
            if (seen[k]) throw ParseError(std::string("repeated variable '") + v + "'", pos_);
            seen[k] = true;
            ++pos_;
            skip();
            Coord e = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError("negative exponent", pos_);
                std::size_t start = pos_;
                while (digit_at(pos_)) ++pos_;
                if (start == pos_) throw ParseError("expected exponent", start);
                if (pos_ - start > 9) throw ParseError("exponent too large", start);
                e = std::stoll(std::string(s_.substr(start, pos_ - start)));
            }
            exp[k] = e;
        }
        return {exp, c};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string coef_text(const Rat& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace

TropicalPolynomial parse_polynomial(std::string_view text, const ParseOptions& opts) {
    Parser p(text);
    TropicalPolynomial f(p.run());
    if (f.degree() == 0 && !opts.allow_degree_zero) throw ParseError("polynomial has degree 0", 0);
    return f;
}

std::string render(const TropicalPolynomial& f) {
    std::vector<std::pair<LatticePoint3, Rat>> t(f.terms().begin(), f.terms().end());
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
        Coord da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    const char* names = "xyz";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += " + ";
        out += coef_text(t[i].second);
        for (int k = 0; k < 3; ++k) {
            Coord e = t[i].first[k];
            if (e == 0) continue;
            out += '*';
            out += names[k];
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

Evaluation evaluate(const TropicalPolynomial& f, const QPoint3& p) {
    Evaluation ev;
    bool first = true;
    for (const auto& [a, c] : f.terms()) {
        Rat v = c + p[0] * static_cast<long>(a[0]) + p[1] * static_cast<long>(a[1]) +
                p[2] * static_cast<long>(a[2]);
        if (first || v > ev.value) {
            ev.value = v;
            ev.argmax.assign(1, a);
            first = false;
        } else if (v == ev.value) {
            ev.argmax.push_back(a);
        }
    }
    return ev;
}

Permutation identity_permutation() { return {1, 2, 3, 4}; }

Permutation compose(const Permutation& s, const Permutation& t) {
    Permutation r{};
    for (int i = 0; i < 4; ++i) r[i] = s[t[i] - 1];
    return r;
}

Permutation inverse(const Permutation& s) {
    Permutation r{};
    for (int i = 0; i < 4; ++i) r[s[i] - 1] = i + 1;
    return r;
}

Permutation transposition(int i, int j) {
    Permutation r = identity_permutation();
    std::swap(r[i - 1], r[j - 1]);
    return r;
}

std::vector<Permutation> all_permutations() {
    std::vector<Permutation> out;
    Permutation p = identity_permutation();
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

LatticePoint3 s4_exponent(const Permutation& s, const LatticePoint3& a, int delta) {
    std::array<Coord, 4> h{a[0], a[1], a[2], delta - a[0] - a[1] - a[2]};
    if (h[3] < 0) throw PreconditionError("exponent " + to_string(a) + " exceeds the homogenizing degree");
    std::array<Coord, 4> b{};
    for (int i = 0; i < 4; ++i) b[s[i] - 1] = h[i];
    return {b[0], b[1], b[2]};
}

QPoint3 s4_point(const Permutation& s, const QPoint3& p) {
    std::array<Rat, 4> h{p[0], p[1], p[2], Rat(0)};
    std::array<Rat, 4> y;
    for (int i = 0; i < 4; ++i) y[s[i] - 1] = h[i];
    return {y[0] - y[3], y[1] - y[3], y[2] - y[3]};
}

Vec3 s4_vector(const Permutation& s, const Vec3& v) {
    std::array<Coord, 4> h{v[0], v[1], v[2], 0};
    std::array<Coord, 4> y{};
    for (int i = 0; i < 4; ++i) y[s[i] - 1] = h[i];
    return {y[0] - y[3], y[1] - y[3], y[2] - y[3]};
}

TropicalPolynomial s4_action(const Permutation& s, const TropicalPolynomial& f, int delta) {
    if (delta < 0) delta = f.degree();
    std::map<LatticePoint3, Rat> out;
    for (const auto& [a, c] : f.terms()) out.emplace(s4_exponent(s, a, delta), c);
    return TropicalPolynomial(std::move(out));
}

}  // namespace tropline
