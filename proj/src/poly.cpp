#include "schubert/poly.hpp"

#include <cctype>
#include <sstream>

namespace schubert {

namespace {

void check_var(int j) {
    if (j < 0 || j >= kMaxVars)
        throw std::invalid_argument("variable index out of range");
}

void require_compatible(const Poly& a, const Poly& b) {
    if (a.kind() != b.kind() || a.nvars() != b.nvars())
        throw std::invalid_argument("polynomial kind/rank mismatch");
}

char kind_letter(VarKind k) { return k == VarKind::alpha ? 'a' : 't'; }

}  // namespace

Monomial Monomial::var(int j, int e) {
    check_var(j);
    if (e < 0 || e > 255) throw std::invalid_argument("bad exponent");
    Monomial m;
    m.deg = e;
    m.w[j >> 3] = static_cast<std::uint64_t>(e) << (8 * (7 - (j & 7)));
    return m;
}

Monomial Monomial::from_exps(const std::vector<int>& exps) {
    Monomial m;
    for (int j = 0; j < static_cast<int>(exps.size()); ++j) {
        if (exps[j] == 0) continue;
        m = m * var(j, exps[j]);
    }
    return m;
}

std::vector<int> Monomial::exps(int nvars) const {
    std::vector<int> e(nvars);
    for (int j = 0; j < nvars; ++j) e[j] = exp(j);
    return e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.deg = a.deg + b.deg;
    // Per-byte sums are bounded by the total degree, so the byte fields
    // cannot carry while deg <= 255.
    if (r.deg > 255) throw invariant_error("monomial degree overflow");
    r.w[0] = a.w[0] + b.w[0];
    r.w[1] = a.w[1] + b.w[1];
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.deg = a.deg - b.deg;
    r.w[0] = a.w[0] - b.w[0];
    r.w[1] = a.w[1] - b.w[1];
    return r;
}

bool divides(const Monomial& b, const Monomial& a) {
    for (int j = 0; j < kMaxVars; ++j)
        if (b.exp(j) > a.exp(j)) return false;
    return true;
}

Poly::Poly(VarKind kind, int nvars) : kind_(kind), nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars)
        throw std::invalid_argument("polynomial rank out of range");
}

Poly Poly::constant(VarKind kind, int nvars, Int c) {
    Poly p(kind, nvars);
    if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

Poly Poly::variable(VarKind kind, int nvars, int j) {
    if (j < 0 || j >= nvars) throw std::invalid_argument("variable index out of range");
    Poly p(kind, nvars);
    p.terms_.emplace(Monomial::var(j), 1);
    return p;
}

Poly Poly::linear_form(VarKind kind, const std::vector<int>& coeffs) {
    Poly p(kind, static_cast<int>(coeffs.size()));
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j)
        if (coeffs[j] != 0) p.terms_.emplace(Monomial::var(j), coeffs[j]);
    return p;
}

Poly Poly::term(VarKind kind, int nvars, const Monomial& m, Int c) {
    Poly p(kind, nvars);
    if (c != 0) p.terms_.emplace(m, std::move(c));
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() &&
           terms_.begin()->second == 1;
}

int Poly::degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.deg;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.deg;
    return terms_.rbegin()->first.deg == d;
}

bool Poly::is_homogeneous_of_degree(int d) const {
    if (terms_.empty()) return true;
    return is_homogeneous() && degree() == d;
}

bool Poly::has_nonnegative_coeffs() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

Int Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    require_compatible(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_compatible(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_compatible(a, b);
    Poly r(a.kind(), a.nvars());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator-(Poly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly r = Poly::one(kind_, nvars_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Poly exact_div(const Poly& a, const Poly& b) {
    require_compatible(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly rem = a;
    Poly q(a.kind(), a.nvars());
    const auto& [mb, cb] = *b.terms().begin();
    while (!rem.is_zero()) {
        const auto& [ma, ca] = *rem.terms().begin();
        if (!divides(mb, ma))
            throw invariant_error("non-exact polynomial division (monomial)");
        Int qc = ca / cb;
        if (qc * cb != ca)
            throw invariant_error("non-exact polynomial division (coefficient)");
        Monomial qm = ma / mb;
        q.add_term(qm, qc);
        rem -= b * Poly::term(a.kind(), a.nvars(), qm, qc);
    }
    return q;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (abs != 1 || m.is_one()) {
            out << abs;
            printed = true;
        }
        for (int j = 0; j < nvars_; ++j) {
            int e = m.exp(j);
            if (e == 0) continue;
            if (printed) out << '*';
            out << kind_letter(kind_) << (j + 1);
            if (e > 1) out << '^' << e;
            printed = true;
        }
    }
    return out.str();
}

namespace {

// Recursive-descent parser. Accepts the canonical sum-of-monomials grammar
// plus parenthesised subexpressions, e.g. "(a1 + a2)*(a2 + a3)^2 - 4".
struct PolyParser {
    const std::string& s;
    size_t i = 0;
    VarKind kind;
    int nvars;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " +
                                    std::to_string(i) + ": " + what);
    }
    Int integer() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return Int(s.substr(start, i - start));
    }
    Poly factor() {
        skip();
        if (i >= s.size()) fail("unexpected end");
        Poly base(kind, nvars);
        if (s[i] == '(') {
            ++i;
            base = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            base = Poly::constant(kind, nvars, integer());
        } else if (s[i] == 'a' || s[i] == 't') {
            if (s[i] != kind_letter(kind)) fail("wrong variable kind");
            ++i;
            Int ix = integer();
            if (ix < 1 || ix > nvars) fail("variable index out of range");
            base = Poly::variable(kind, nvars, static_cast<int>(ix) - 1);
        } else {
            fail("expected factor");
        }
        if (eat('^')) {
            Int e = integer();
            base = base.pow(static_cast<int>(e));
        }
        return base;
    }
    Poly product() {
        Poly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }
    Poly expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly p = product();
        if (neg) p = -p;
        for (;;) {
            skip();
            if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
            bool minus = s[i] == '-';
            ++i;
            Poly t = product();
            if (minus) p -= t;
            else p += t;
        }
        return p;
    }
};

}  // namespace

Poly Poly::parse(const std::string& text, VarKind kind, int nvars) {
    PolyParser p{text, 0, kind, nvars};
    Poly r = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing characters");
    return r;
}

Poly substitute_vars(const Poly& p, VarKind out_kind, int out_nvars,
                     const std::vector<Poly>& images) {
    Poly r(out_kind, out_nvars);
    for (const auto& [m, c] : p.terms()) {
        Poly prod = Poly::constant(out_kind, out_nvars, c);
        for (int j = 0; j < p.nvars(); ++j) {
            int e = m.exp(j);
            if (e == 0) continue;
            prod = prod * images[j].pow(e);
        }
        r += prod;
    }
    return r;
}

Poly alpha_to_t(const Poly& p) {
    if (p.kind() != VarKind::alpha)
        throw std::invalid_argument("alpha_to_t expects an alpha polynomial");
    const int n = p.nvars();
    std::vector<Poly> images;
    images.reserve(n);
    for (int i = 1; i <= n; ++i) {
        Poly im(VarKind::t, n + 1);
        // a_i -> t_{n+2-i} - t_{n+1-i}; indices here are always in 1..n+1.
        im += Poly::variable(VarKind::t, n + 1, n + 2 - i - 1);
        im -= Poly::variable(VarKind::t, n + 1, n + 1 - i - 1);
        images.push_back(im);
    }
    return substitute_vars(p, VarKind::t, n + 1, images);
}

Poly t_to_alpha(const Poly& p) {
    if (p.kind() != VarKind::t)
        throw std::invalid_argument("t_to_alpha expects a t polynomial");
    const int n = p.nvars() - 1;
    std::vector<Poly> images;
    images.reserve(n + 1);
    for (int j = 1; j <= n + 1; ++j) {
        // t_j -> a_{n+2-j} + ... + a_n (empty for j = 1).
        Poly im(VarKind::alpha, n);
        for (int i = n + 2 - j; i <= n; ++i)
            im += Poly::variable(VarKind::alpha, n, i - 1);
        images.push_back(im);
    }
    Poly r = substitute_vars(p, VarKind::alpha, n, images);
    if (alpha_to_t(r) != p)
        throw invariant_error("t polynomial is not in the image of Z[a1..an]");
    return r;
}

}  // namespace schubert
