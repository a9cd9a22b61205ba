#include "legann/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace legann {

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_)
            r.add_term({ex.a + ey.a, ex.z + ey.z, ex.s + ey.s}, cx * cy);
    return r;
}

namespace {
int get_exp(const Exponents& e, char var) {
    switch (var) {
        case 'a': return e.a;
        case 'z': return e.z;
        default: return e.s;
    }
}
}  // namespace

LaurentPoly LaurentPoly::coeff_of(char var, int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (get_exp(e, var) != k) continue;
        Exponents f = e;
        switch (var) {
            case 'a': f.a = 0; break;
            case 'z': f.z = 0; break;
            default: f.s = 0; break;
        }
        r.add_term(f, c);
    }
    return r;
}

std::optional<int> LaurentPoly::min_exp(char var) const {
    std::optional<int> m;
    for (const auto& [e, c] : terms_) {
        int k = get_exp(e, var);
        if (!m || k < *m) m = k;
    }
    return m;
}

std::optional<int> LaurentPoly::max_exp(char var) const {
    std::optional<int> m;
    for (const auto& [e, c] : terms_) {
        int k = get_exp(e, var);
        if (!m || k > *m) m = k;
    }
    return m;
}

bool LaurentPoly::uses(char var) const {
    for (const auto& [e, c] : terms_)
        if (get_exp(e, var) != 0) return true;
    return false;
}

namespace {

// Exact division of f by d in Z[a^{+-1}, s^{+-1}] where d is a pure
// s-polynomial with unit leading coefficient.  Returns nothing when the
// division leaves a remainder.
std::optional<LaurentPoly> divide_by_s_poly(const LaurentPoly& f, const LaurentPoly& d) {
    if (f.is_zero()) return LaurentPoly();
    // divisor as dense coefficient vector over s
    int dlo = *d.min_exp('s'), dhi = *d.max_exp('s');
    std::vector<BigInt> dv(dhi - dlo + 1);
    for (const auto& [e, c] : d.terms()) dv[e.s - dlo] = c;
    const BigInt& lead = dv.back();
    assert(lead.is_one() || (-lead).is_one());

    // group dividend by a-power
    std::map<int, std::map<int, BigInt>> groups;  // a-exp -> (s-exp -> coeff)
    for (const auto& [e, c] : f.terms()) {
        assert(e.z == 0);
        groups[e.a][e.s] = c;
    }

    LaurentPoly q;
    for (auto& [aexp, g] : groups) {
        int flo = g.begin()->first, fhi = g.rbegin()->first;
        std::vector<BigInt> fv(fhi - flo + 1);
        for (auto& [se, c] : g) fv[se - flo] = c;
        // long division, highest degree first
        int qlen = static_cast<int>(fv.size()) - static_cast<int>(dv.size()) + 1;
        if (qlen < 0) return std::nullopt;
        std::vector<BigInt> qv(qlen);
        for (int i = static_cast<int>(fv.size()) - 1;
             i >= static_cast<int>(dv.size()) - 1; --i) {
            BigInt c = fv[i];
            if (c.is_zero()) continue;
            int qi = i - (static_cast<int>(dv.size()) - 1);
            BigInt factor = lead.is_one() ? c : -c;
            qv[qi] = factor;
            for (size_t j = 0; j < dv.size(); ++j)
                fv[qi + j] -= factor * dv[j];
        }
        for (const BigInt& rem : fv)
            if (!rem.is_zero()) return std::nullopt;
        for (int i = 0; i < qlen; ++i)
            if (!qv[i].is_zero())
                q.add_term({aexp, 0, flo - dlo + i}, qv[i]);
    }
    return q;
}

}  // namespace

LaurentPoly LaurentPoly::subst_z() const {
    if (uses('s'))
        throw std::invalid_argument("subst_z: input already involves s");
    const LaurentPoly zs = var_s(1) - var_s(-1);

    int zmin = 0;
    if (auto m = min_exp('z')) zmin = std::min(0, *m);

    // shift all z-exponents by -zmin so they are non-negative, expand, then
    // divide by (s - s^{-1})^{-zmin}
    std::vector<LaurentPoly> zs_pow;  // zs_pow[k] = (s - 1/s)^k
    zs_pow.emplace_back(1);
    LaurentPoly shifted;
    for (const auto& [e, c] : terms_) {
        int k = e.z - zmin;
        while (static_cast<int>(zs_pow.size()) <= k)
            zs_pow.push_back(zs_pow.back() * zs);
        shifted += LaurentPoly::monomial(c, e.a, 0, 0) * zs_pow[k];
    }
    if (zmin == 0) return shifted;
    while (static_cast<int>(zs_pow.size()) <= -zmin)
        zs_pow.push_back(zs_pow.back() * zs);
    auto q = divide_by_s_poly(shifted, zs_pow[-zmin]);
    if (!q)
        throw NonUnitSubstitution(
            "subst_z: z^{-1} terms do not divide out after z = s - s^{-1}");
    return *q;
}

// ---------------------------------------------------------------------------
// rendering / parsing

namespace {

void render_zs_monomial(std::ostream& os, const BigInt& c, int ez, int es,
                        bool leading) {
    BigInt mag = c.sign() < 0 ? -c : c;
    if (!leading)
        os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0)
        os << "-";
    bool has_var = ez != 0 || es != 0;
    bool printed = false;
    if (!mag.is_one() || !has_var) {
        os << mag.to_string();
        printed = true;
    }
    if (ez != 0) {
        if (printed) os << "*";
        os << "z";
        if (ez != 1) os << "^" << ez;
        printed = true;
    }
    if (es != 0) {
        if (printed) os << "*";
        os << "s";
        if (es != 1) os << "^" << es;
    }
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    // group by a-exponent, descending
    std::map<int, std::vector<std::pair<Exponents, BigInt>>, std::greater<int>> groups;
    for (const auto& [e, c] : terms_) groups[e.a].push_back({e, c});
    for (auto& [ae, v] : groups)
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
            if (x.first.z != y.first.z) return x.first.z < y.first.z;
            return x.first.s < y.first.s;
        });

    std::ostringstream os;
    bool first_group = true;
    for (const auto& [ae, v] : groups) {
        std::ostringstream gs;
        if (ae != 0) {
            gs << "a";
            if (ae != 1) gs << "^" << ae;
            gs << "*(";
        }
        bool lead = true;
        for (const auto& [e, c] : v) {
            render_zs_monomial(gs, c, e.z, e.s, lead);
            lead = false;
        }
        if (ae != 0) gs << ")";
        std::string g = gs.str();
        if (first_group) {
            os << g;
        } else if (!g.empty() && g[0] == '-') {
            os << " - " << g.substr(1);
        } else {
            os << " + " << g;
        }
        first_group = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits) throw PolyParseError("expected integer at offset " +
                                                std::to_string(start));
        return std::stoi(text.substr(start, pos - start));
    }

    LaurentPoly parse_factor() {
        skip_ws();
        if (pos >= text.size()) throw PolyParseError("unexpected end of input");
        char c = text[pos];
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (c == '(') {
            ++pos;
            LaurentPoly e = parse_expr();
            if (!eat(')')) throw PolyParseError("missing ')'");
            return e;
        }
        if (c == 'a' || c == 'z' || c == 's') {
            ++pos;
            int k = 1;
            if (eat('^')) k = parse_int();
            switch (c) {
                case 'a': return LaurentPoly::var_a(k);
                case 'z': return LaurentPoly::var_z(k);
                default: return LaurentPoly::var_s(k);
            }
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            return LaurentPoly(BigInt::from_string(text.substr(start, pos - start)));
        }
        throw PolyParseError(std::string("unexpected character '") + c + "'");
    }

    LaurentPoly parse_term() {
        LaurentPoly p = parse_factor();
        while (eat('*')) p *= parse_factor();
        return p;
    }

    LaurentPoly parse_expr() {
        LaurentPoly acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly t = parse_term();
        acc += neg ? -t : t;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                LaurentPoly u = parse_term();
                acc += (c == '-') ? -u : u;
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Parser p(text);
    LaurentPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw PolyParseError("trailing characters at offset " + std::to_string(p.pos));
    return r;
}

// ---------------------------------------------------------------------------
// TruncSeries

TruncSeries::TruncSeries(int order, std::vector<LaurentPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
    assert(f.order() == g.order());
    TruncSeries r(f.order());
    for (int k = 0; k <= f.order(); ++k) r[k] = f[k] + g[k];
    return r;
}

TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
    assert(f.order() == g.order());
    TruncSeries r(f.order());
    for (int i = 0; i <= f.order(); ++i) {
        if (f[i].is_zero()) continue;
        for (int j = 0; i + j <= f.order(); ++j) {
            if (g[j].is_zero()) continue;
            r[i + j] += f[i] * g[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (coeffs_.empty() || !(coeffs_[0] == LaurentPoly(1)))
        throw NotInvertible("series inverse requires constant coefficient 1");
    TruncSeries g(order());
    g[0] = LaurentPoly(1);
    for (int k = 1; k <= order(); ++k) {
        LaurentPoly acc;
        for (int j = 1; j <= k; ++j) acc += coeffs_[j] * g[k - j];
        g[k] = -acc;
    }
    return g;
}

}  // namespace legann
