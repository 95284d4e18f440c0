#include "schubert/quantum.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace schubert {

FlagShape::FlagShape(int n_, std::vector<int> steps_) : n(n_), steps(std::move(steps_)) {
    if (n < 1) throw std::invalid_argument("flag shape rank must be positive");
    if (steps.empty()) throw std::invalid_argument("flag shape needs at least one step");
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] < 1 || steps[i] > n) throw std::invalid_argument("flag step out of range");
        if (i > 0 && steps[i] <= steps[i - 1])
            throw std::invalid_argument("flag steps must be strictly increasing");
    }
}

FlagShape FlagShape::grassmannian(int m, int ambient) {
    return FlagShape(ambient - 1, {m});
}

FlagShape FlagShape::full(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i + 1;
    return FlagShape(n, std::move(s));
}

int FlagShape::step(int i) const {
    if (i == 0) return 0;
    if (i == k() + 1) return n + 1;
    return steps.at(i - 1);
}

ParabolicSubset FlagShape::parabolic() const {
    std::vector<int> delta;
    size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
        if (pos < steps.size() && steps[pos] == i) { ++pos; continue; }
        delta.push_back(i);
    }
    return ParabolicSubset{std::move(delta)};
}

bool FlagShape::in_wp(const WeylElement& w) const {
    const OneLine& p = w.perm();
    for (int i = 1; i <= k() + 1; ++i)
        for (int pos = step(i - 1) + 1; pos < step(i); ++pos)
            if (p[pos - 1] > p[pos]) return false;
    return true;
}

bool is_effective(const QDeg& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

long qdeg_total(const QDeg& d) {
    long t = 0;
    for (int x : d) t += x;
    return t;
}

namespace {
std::atomic<long> g_positivity_checks{0};
}

long positivity_checks_performed() { return g_positivity_checks.load(); }

void QuantumClass::add(const WeylElement& w, const QDeg& q, const Poly& coeff) {
    if (coeff.is_zero()) return;
    ClassKey key{w, q};
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void QuantumClass::add_checked(const WeylElement& w, const QDeg& q, const Poly& coeff,
                               long expected_degree) {
    if (coeff.is_zero()) return;
    if (expected_degree < 0)
        throw invariant_error("nonzero coefficient with negative expected degree");
    if (!is_effective(q))
        throw invariant_error("nonzero coefficient at a non-effective quantum degree");
    if (!coeff.is_homogeneous_of_degree(static_cast<int>(expected_degree)))
        throw invariant_error("coefficient is not homogeneous of degree " +
                              std::to_string(expected_degree) + ": " + coeff.to_string());
    if (!coeff.has_nonnegative_coeffs())
        throw invariant_error("coefficient has a negative term: " + coeff.to_string());
    g_positivity_checks.fetch_add(1, std::memory_order_relaxed);
    add(w, q, coeff);
}

const Poly* QuantumClass::find(const WeylElement& w, const QDeg& q) const {
    auto it = terms_.find(ClassKey{w, q});
    return it == terms_.end() ? nullptr : &it->second;
}

QuantumClass QuantumClass::classical_limit() const {
    QuantumClass out;
    for (const auto& [key, poly] : terms_)
        if (qdeg_total(key.q) == 0) out.terms_.emplace(key, poly);
    return out;
}

QuantumClass QuantumClass::nonequivariant_limit() const {
    QuantumClass out;
    for (const auto& [key, poly] : terms_) {
        Int c = poly.constant_term();
        if (c != 0)
            out.terms_.emplace(key, Poly::constant(poly.kind(), poly.nvars(), std::move(c)));
    }
    return out;
}

QuantumClass& QuantumClass::operator+=(const QuantumClass& o) {
    for (const auto& [key, poly] : o.terms_) add(key.w, key.q, poly);
    return *this;
}

namespace {

std::string qdeg_to_string(const QDeg& d) {
    std::ostringstream out;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out << ',';
        out << d[i];
    }
    return out.str();
}

QDeg parse_qdeg(const std::string& s) {
    QDeg d;
    std::string norm = s;
    for (char& c : norm)
        if (c == ',') c = ' ';
    std::istringstream in(norm);
    int v;
    while (in >> v) d.push_back(v);
    return d;
}

}  // namespace

std::string to_table(const QuantumClass& c, const FlagShape& shape) {
    std::ostringstream out;
    out << "#space A n=" << shape.n << " flag=";
    for (size_t i = 0; i < shape.steps.size(); ++i) {
        if (i) out << ',';
        out << shape.steps[i];
    }
    out << '\n';
    for (const auto& [key, poly] : c.terms()) {
        out << "w=" << oneline_to_string(key.w.perm()) << " q=" << qdeg_to_string(key.q)
            << " c=" << poly.to_string() << '\n';
    }
    return out.str();
}

QuantumClass parse_table(const std::string& text, FlagShape* shape_out) {
    std::istringstream in(text);
    std::string line;
    FlagShape shape;
    bool have_shape = false;
    QuantumClass out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            int n = 0;
            size_t npos = line.find("n=");
            size_t fpos = line.find("flag=");
            if (npos == std::string::npos || fpos == std::string::npos)
                throw std::invalid_argument("bad table header: " + line);
            n = std::stoi(line.substr(npos + 2));
            QDeg steps = parse_qdeg(line.substr(fpos + 5));
            shape = FlagShape(n, std::vector<int>(steps.begin(), steps.end()));
            have_shape = true;
            continue;
        }
        if (!have_shape) throw std::invalid_argument("table entry before #space header");
        size_t wpos = line.find("w=");
        size_t qpos = line.find(" q=");
        size_t cpos = line.find(" c=");
        if (wpos != 0 || qpos == std::string::npos || cpos == std::string::npos)
            throw std::invalid_argument("bad table line: " + line);
        OneLine w = parse_permutation(line.substr(2, qpos - 2), shape.n + 1);
        QDeg q = parse_qdeg(line.substr(qpos + 3, cpos - (qpos + 3)));
        Poly coeff = Poly::parse(line.substr(cpos + 3), VarKind::alpha, shape.n);
        out.add(WeylElement::from_perm(std::move(w)), q, coeff);
    }
    if (!have_shape) throw std::invalid_argument("table has no #space header");
    if (shape_out) *shape_out = shape;
    return out;
}

namespace {

// Shared layout for plain/latex term rendering.
struct TermText {
    std::string coeff;   // empty when the coefficient is 1
    bool coeff_parens = false;
    std::string cls;     // empty for the identity class
    std::string qpart;   // empty when q-degree is zero
};

std::string join_term(const TermText& t, const std::string& mul) {
    std::vector<std::string> parts;
    if (!t.coeff.empty()) parts.push_back(t.coeff_parens ? "(" + t.coeff + ")" : t.coeff);
    if (!t.cls.empty()) parts.push_back(t.cls);
    if (!t.qpart.empty()) parts.push_back(t.qpart);
    if (parts.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += mul;
        out += parts[i];
    }
    return out;
}

std::string render(const QuantumClass& c, const FlagShape& shape, bool latex) {
    if (c.terms().empty()) return "0";
    const bool grass = shape.k() == 1;
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, poly] : c.terms()) {
        TermText t;
        if (!poly.is_one()) {
            t.coeff = latex ? [&] {
                std::string s = poly.to_string();
                // a3 -> \alpha_3 etc.
                std::string r;
                for (size_t i = 0; i < s.size(); ++i) {
                    if ((s[i] == 'a' || s[i] == 't') && i + 1 < s.size() &&
                        std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                        r += s[i] == 'a' ? "\\alpha_{" : "t_{";
                        while (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))
                            r += s[++i];
                        r += '}';
                    } else if (s[i] == '*') {
                        r += ' ';
                    } else {
                        r += s[i];
                    }
                }
                return r;
            }() : poly.to_string();
            t.coeff_parens = poly.terms().size() > 1 || poly.constant_term() < 0;
        }
        if (!key.w.is_identity()) {
            if (grass) {
                Partition a = grassmannian_partition(shape.steps[0], shape.ambient(), key.w);
                std::ostringstream cs;
                cs << (latex ? "\\sigma^{(" : "s(");
                for (int i = 1; i <= a.rows(); ++i) {
                    if (i > 1) cs << ',';
                    cs << a.part(i);
                }
                cs << (latex ? ")}" : ")");
                t.cls = cs.str();
            } else {
                t.cls = (latex ? "\\sigma^{" + oneline_to_string(key.w.perm()) + "}"
                               : "s" + oneline_to_string(key.w.perm()));
            }
        }
        {
            std::ostringstream qs;
            for (size_t j = 0; j < key.q.size(); ++j) {
                if (key.q[j] == 0) continue;
                if (qs.tellp() > 0) qs << (latex ? "" : "*");
                if (latex)
                    qs << (key.q.size() == 1 ? std::string("q") : "\\bar q_" + std::to_string(j + 1));
                else
                    qs << (key.q.size() == 1 ? std::string("q") : "q" + std::to_string(j + 1));
                if (key.q[j] > 1) qs << '^' << key.q[j];
            }
            t.qpart = qs.str();
        }
        if (!first) out << " + ";
        out << join_term(t, latex ? " " : "*");
        first = false;
    }
    return out.str();
}

}  // namespace

std::string to_plain(const QuantumClass& c, const FlagShape& shape) {
    return render(c, shape, false);
}

std::string to_latex(const QuantumClass& c, const FlagShape& shape) {
    return render(c, shape, true);
}

}  // namespace schubert
