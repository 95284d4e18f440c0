#include "schubert/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace schubert {

OneLine oneline_identity(int n_values) {
    OneLine w(n_values);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

int oneline_length(const OneLine& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

OneLine oneline_compose(const OneLine& x, const OneLine& y) {
    if (x.size() != y.size()) throw std::invalid_argument("permutation size mismatch");
    OneLine r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[y[i] - 1];
    return r;
}

OneLine oneline_inverse(const OneLine& w) {
    OneLine r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[w[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

std::string oneline_to_string(const OneLine& w) {
    std::ostringstream out;
    out << '[';
    const bool commas = w.size() > 9;
    for (size_t i = 0; i < w.size(); ++i) {
        if (commas && i > 0) out << ',';
        out << w[i];
    }
    out << ']';
    return out.str();
}

OneLine cycles_to_oneline(const std::vector<std::vector<int>>& cycles, int n_values) {
    OneLine w = oneline_identity(n_values);
    std::vector<bool> used(n_values + 1, false);
    for (const auto& cyc : cycles) {
        for (int v : cyc) {
            if (v < 1 || v > n_values) throw std::invalid_argument("cycle value out of range");
            if (used[v]) throw std::invalid_argument("cycles are not disjoint");
            used[v] = true;
        }
        for (size_t i = 0; i < cyc.size(); ++i)
            w[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    }
    return w;
}

namespace {

void validate_permutation(const OneLine& w) {
    std::vector<bool> seen(w.size() + 1, false);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[v])
            throw std::invalid_argument("not a permutation: " + oneline_to_string(w));
        seen[v] = true;
    }
}

std::vector<int> parse_int_list(const std::string& body) {
    std::vector<int> vals;
    if (body.find(',') != std::string::npos || body.find(' ') != std::string::npos) {
        std::string normalized = body;
        for (char& c : normalized)
            if (c == ',') c = ' ';
        std::istringstream in(normalized);
        int v;
        while (in >> v) vals.push_back(v);
        if (!in.eof()) throw std::invalid_argument("bad integer list: " + body);
    } else {
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad permutation text: " + body);
            vals.push_back(c - '0');
        }
    }
    return vals;
}

}  // namespace

OneLine parse_permutation(const std::string& text, int n_values) {
    std::string s = text;
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty permutation");
    s = s.substr(a, b - a + 1);
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated one-line form");
        OneLine w = parse_int_list(s.substr(1, s.size() - 2));
        if (n_values > 0 && static_cast<int>(w.size()) != n_values)
            throw std::invalid_argument("permutation has wrong size");
        validate_permutation(w);
        return w;
    }
    if (s.front() == '(') {
        if (n_values <= 0) throw std::invalid_argument("cycle form needs the ambient size");
        std::vector<std::vector<int>> cycles;
        size_t i = 0;
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
            if (s[i] != '(') throw std::invalid_argument("expected '('");
            size_t close = s.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("unterminated cycle");
            cycles.push_back(parse_int_list(s.substr(i + 1, close - i - 1)));
            i = close + 1;
        }
        return cycles_to_oneline(cycles, n_values);
    }
    throw std::invalid_argument("unrecognised permutation text: " + text);
}

WeylElement WeylElement::from_perm(OneLine w) {
    validate_permutation(w);
    WeylElement e;
    e.len_ = oneline_length(w);
    e.perm_ = std::move(w);
    return e;
}

ParabolicSubset ParabolicSubset::of(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return ParabolicSubset{std::move(indices)};
}

std::vector<int> ParabolicSubset::complement(int n) const {
    std::vector<int> out;
    size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
        if (pos < delta_p.size() && delta_p[pos] == i) { ++pos; continue; }
        out.push_back(i);
    }
    return out;
}

long RootSystem::enumeration_budget() {
    static const long budget = [] {
        if (const char* env = std::getenv("SCHUBERT_MAX_W")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 40320L;
    }();
    return budget;
}

RootSystem RootSystem::type_a(int n) {
    if (n < 1) throw std::invalid_argument("type A rank must be at least 1");
    RootSystem rs;
    rs.n_ = n;
    rs.type_a_ = true;
    rs.cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        rs.cartan_[i][i] = 2;
        if (i + 1 < n) rs.cartan_[i][i + 1] = rs.cartan_[i + 1][i] = -1;
    }
    rs.generate_roots();
    return rs;
}

RootSystem RootSystem::type_b(int n) {
    if (n < 2) throw std::invalid_argument("type B rank must be at least 2");
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    c[n - 2][n - 1] = -2;  // <alpha_{n-1}, alpha_n^vee>, alpha_n short
    return from_cartan(std::move(c));
}

RootSystem RootSystem::type_c(int n) {
    if (n < 2) throw std::invalid_argument("type C rank must be at least 2");
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    c[n - 1][n - 2] = -2;
    return from_cartan(std::move(c));
}

RootSystem RootSystem::type_g2() {
    return from_cartan({{2, -1}, {-3, 2}});
}

RootSystem RootSystem::from_cartan(std::vector<std::vector<int>> cartan) {
    const int n = static_cast<int>(cartan.size());
    if (n < 1) throw std::invalid_argument("empty Cartan matrix");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(cartan[i].size()) != n)
            throw std::invalid_argument("Cartan matrix is not square");
        if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (int j = 0; j < n; ++j) {
            if (i != j && cartan[i][j] > 0)
                throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw std::invalid_argument("Cartan zero pattern must be symmetric");
        }
    }
    RootSystem rs;
    rs.n_ = n;
    rs.cartan_ = std::move(cartan);
    rs.generate_roots();
    return rs;
}

void RootSystem::generate_roots() {
    const int n = n_;
    std::set<std::vector<int>> seen;
    std::vector<RootDatum> all;
    for (int i = 0; i < n; ++i) {
        RootDatum d;
        d.root.assign(n, 0);
        d.coroot.assign(n, 0);
        d.root[i] = d.coroot[i] = 1;
        seen.insert(d.root);
        all.push_back(std::move(d));
    }
    // Orbit of the simple roots under the simple reflections.
    for (size_t head = 0; head < all.size(); ++head) {
        if (all.size() > 600)
            throw budget_error("root generation exceeded cap; Cartan matrix is not of finite type");
        RootDatum cur = all[head];
        for (int i = 0; i < n; ++i) {
            long pr = 0, pc = 0;
            for (int j = 0; j < n; ++j) {
                pr += static_cast<long>(cur.root[j]) * cartan_[j][i];
                pc += static_cast<long>(cur.coroot[j]) * cartan_[i][j];
            }
            RootDatum nxt = cur;
            nxt.root[i] -= static_cast<int>(pr);
            nxt.coroot[i] -= static_cast<int>(pc);
            if (seen.insert(nxt.root).second) all.push_back(std::move(nxt));
        }
    }
    positive_.clear();
    for (auto& d : all) {
        bool nonneg = std::all_of(d.root.begin(), d.root.end(), [](int c) { return c >= 0; });
        if (nonneg) positive_.push_back(std::move(d));
    }
    std::sort(positive_.begin(), positive_.end(), [](const RootDatum& a, const RootDatum& b) {
        int ha = std::accumulate(a.root.begin(), a.root.end(), 0);
        int hb = std::accumulate(b.root.begin(), b.root.end(), 0);
        if (ha != hb) return ha < hb;
        return a.root < b.root;
    });
    pos_lookup_keys_.clear();
    pos_lookup_vals_.clear();
    std::vector<std::pair<std::vector<int>, int>> lk;
    for (int i = 0; i < static_cast<int>(positive_.size()); ++i) lk.emplace_back(positive_[i].root, i);
    std::sort(lk.begin(), lk.end());
    for (auto& [k, v] : lk) {
        pos_lookup_keys_.push_back(std::move(k));
        pos_lookup_vals_.push_back(v);
    }
}

int RootSystem::positive_root_index(const std::vector<int>& root) const {
    auto it = std::lower_bound(pos_lookup_keys_.begin(), pos_lookup_keys_.end(), root);
    if (it == pos_lookup_keys_.end() || *it != root) return -1;
    return pos_lookup_vals_[it - pos_lookup_keys_.begin()];
}

long RootSystem::pairing(const std::vector<int>& root, const std::vector<int>& coroot) const {
    long s = 0;
    for (int r = 0; r < n_; ++r) {
        if (root[r] == 0) continue;
        for (int c = 0; c < n_; ++c)
            s += static_cast<long>(root[r]) * coroot[c] * cartan_[r][c];
    }
    return s;
}

long RootSystem::two_rho_pairing(const std::vector<int>& coroot) {
    long s = 0;
    for (int c : coroot) s += c;
    return 2 * s;
}

Poly RootSystem::root_linear_form(const std::vector<int>& root) const {
    return Poly::linear_form(VarKind::alpha, root);
}

WeylElement RootSystem::make_matrix_identity() const {
    WeylElement e;
    e.rank_ = n_;
    e.rmat_.assign(n_ * n_, 0);
    e.cmat_.assign(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) e.rmat_[i * n_ + i] = e.cmat_[i * n_ + i] = 1;
    e.len_ = 0;
    return e;
}

int RootSystem::matrix_length(const std::vector<int>& rmat) const {
    int len = 0;
    for (const auto& d : positive_) {
        bool nonpos = true;
        for (int r = 0; r < n_ && nonpos; ++r) {
            long y = 0;
            for (int c = 0; c < n_; ++c) y += static_cast<long>(rmat[r * n_ + c]) * d.root[c];
            if (y > 0) nonpos = false;
        }
        if (nonpos) ++len;
    }
    return len;
}

WeylElement RootSystem::identity() const {
    if (type_a_) return WeylElement::from_perm(oneline_identity(n_ + 1));
    return make_matrix_identity();
}

WeylElement RootSystem::simple_reflection(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("simple reflection index out of range");
    if (type_a_) {
        OneLine w = oneline_identity(n_ + 1);
        std::swap(w[i - 1], w[i]);
        return WeylElement::from_perm(std::move(w));
    }
    WeylElement e = make_matrix_identity();
    for (int j = 0; j < n_; ++j) {
        e.rmat_[(i - 1) * n_ + j] -= cartan_[j][i - 1];
        e.cmat_[(i - 1) * n_ + j] -= cartan_[i - 1][j];
    }
    e.len_ = 1;
    return e;
}

WeylElement RootSystem::reflection(int pos_root_idx) const {
    const auto& d = positive_.at(pos_root_idx);
    if (type_a_) {
        int first = -1, last = -1;
        for (int j = 0; j < n_; ++j)
            if (d.root[j] != 0) {
                if (first < 0) first = j;
                last = j;
            }
        OneLine w = oneline_identity(n_ + 1);
        std::swap(w[first], w[last + 1]);  // transposition (i, j+1)
        return WeylElement::from_perm(std::move(w));
    }
    WeylElement e = make_matrix_identity();
    for (int j = 0; j < n_; ++j) {
        long pr = 0, pc = 0;
        for (int r = 0; r < n_; ++r) {
            pr += static_cast<long>(d.coroot[r]) * cartan_[j][r];  // <alpha_j, gamma^vee>
            pc += static_cast<long>(d.root[r]) * cartan_[r][j];    // <gamma, alpha_j^vee>
        }
        for (int r = 0; r < n_; ++r) {
            e.rmat_[r * n_ + j] -= static_cast<int>(pr) * d.root[r];
            e.cmat_[r * n_ + j] -= static_cast<int>(pc) * d.coroot[r];
        }
    }
    e.len_ = matrix_length(e.rmat_);
    return e;
}

WeylElement RootSystem::multiply(const WeylElement& x, const WeylElement& y) const {
    if (type_a_) return WeylElement::from_perm(oneline_compose(x.perm(), y.perm()));
    WeylElement e;
    e.rank_ = n_;
    e.rmat_.assign(n_ * n_, 0);
    e.cmat_.assign(n_ * n_, 0);
    for (int r = 0; r < n_; ++r)
        for (int k = 0; k < n_; ++k) {
            const int xr = x.rmat_[r * n_ + k], xc = x.cmat_[r * n_ + k];
            if (xr == 0 && xc == 0) continue;
            for (int c = 0; c < n_; ++c) {
                e.rmat_[r * n_ + c] += xr * y.rmat_[k * n_ + c];
                e.cmat_[r * n_ + c] += xc * y.cmat_[k * n_ + c];
            }
        }
    e.len_ = matrix_length(e.rmat_);
    return e;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
    if (type_a_) return WeylElement::from_perm(oneline_inverse(w.perm()));
    WeylElement e;
    e.rank_ = n_;
    e.rmat_.assign(n_ * n_, 0);
    e.cmat_.assign(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) {
        std::vector<int> target(n_, 0);
        target[i] = 1;
        bool found = false;
        for (const auto& d : positive_) {
            for (int sign : {1, -1}) {
                std::vector<int> g(n_);
                for (int j = 0; j < n_; ++j) g[j] = sign * d.root[j];
                if (act_on_root(w, g) == target) {
                    for (int r = 0; r < n_; ++r) {
                        e.rmat_[r * n_ + i] = sign * d.root[r];
                        e.cmat_[r * n_ + i] = sign * d.coroot[r];
                    }
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw invariant_error("inverse: no preimage of a simple root");
    }
    e.len_ = w.len_;
    return e;
}

WeylElement RootSystem::right_simple(const WeylElement& w, int i) const {
    if (type_a_) {
        OneLine p = w.perm();
        std::swap(p[i - 1], p[i]);
        return WeylElement::from_perm(std::move(p));
    }
    return multiply(w, simple_reflection(i));
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
    WeylElement e = identity();
    for (int i : word) e = right_simple(e, i);
    return e;
}

std::vector<int> RootSystem::act_on_root(const WeylElement& w, const std::vector<int>& root) const {
    if (type_a_) {
        const OneLine& p = w.perm();
        const int N = n_ + 1;
        std::vector<int> x(N, 0), y(N, 0), out(n_, 0);
        for (int j = 0; j < N; ++j) {
            int cj = j < n_ ? root[j] : 0;
            int cjm1 = j > 0 ? root[j - 1] : 0;
            x[j] = cj - cjm1;
        }
        for (int a = 0; a < N; ++a) y[p[a] - 1] = x[a];
        int acc = 0;
        for (int j = 0; j < n_; ++j) {
            acc += y[j];
            out[j] = acc;
        }
        return out;
    }
    std::vector<int> out(n_, 0);
    for (int r = 0; r < n_; ++r) {
        long s = 0;
        for (int c = 0; c < n_; ++c) s += static_cast<long>(w.rmat_[r * n_ + c]) * root[c];
        out[r] = static_cast<int>(s);
    }
    return out;
}

std::vector<int> RootSystem::act_on_coroot(const WeylElement& w, const std::vector<int>& coroot) const {
    if (type_a_) return act_on_root(w, coroot);
    std::vector<int> out(n_, 0);
    for (int r = 0; r < n_; ++r) {
        long s = 0;
        for (int c = 0; c < n_; ++c) s += static_cast<long>(w.cmat_[r * n_ + c]) * coroot[c];
        out[r] = static_cast<int>(s);
    }
    return out;
}

bool RootSystem::sgn(const WeylElement& w, int beta) const {
    if (beta < 1 || beta > n_) throw std::invalid_argument("sgn: root index out of range");
    if (type_a_) return w.perm()[beta - 1] > w.perm()[beta];
    for (int r = 0; r < n_; ++r)
        if (w.rmat_[r * n_ + (beta - 1)] > 0) return false;
    return true;
}

std::vector<int> RootSystem::reduced_word(const WeylElement& w) const {
    std::vector<int> letters;
    WeylElement x = w;
    while (x.length() > 0) {
        int i = 1;
        while (i <= n_ && !sgn(x, i)) ++i;
        if (i > n_) throw invariant_error("element of positive length with no descent");
        x = right_simple(x, i);
        letters.push_back(i);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

WeylElement RootSystem::longest_element(const std::vector<int>& subset) const {
    for (int i : subset)
        if (i < 1 || i > n_) throw std::invalid_argument("longest_element: index out of range");
    WeylElement w = identity();
    for (;;) {
        bool moved = false;
        for (int i : subset) {
            if (!sgn(w, i)) {
                w = right_simple(w, i);
                moved = true;
                break;
            }
        }
        if (!moved) return w;
    }
}

bool RootSystem::in_wp(const ParabolicSubset& p, const WeylElement& w) const {
    for (int i : p.delta_p)
        if (sgn(w, i)) return false;
    return true;
}

std::pair<WeylElement, WeylElement> RootSystem::coset_decompose(const ParabolicSubset& p,
                                                                const WeylElement& w) const {
    WeylElement x = w;
    WeylElement par = identity();
    for (;;) {
        bool moved = false;
        for (int i : p.delta_p) {
            if (sgn(x, i)) {
                x = right_simple(x, i);
                par = multiply(simple_reflection(i), par);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (x.length() + par.length() != w.length())
        throw invariant_error("coset decomposition is not length-additive");
    return {x, par};
}

long RootSystem::weyl_order() const {
    // Orbit-counting is enough at our scale; for type A use the factorial.
    if (type_a_) {
        long f = 1;
        for (int i = 2; i <= n_ + 1; ++i) f *= i;
        return f;
    }
    return -1;  // unknown up front; enumerate_w checks the budget as it grows
}

std::vector<WeylElement> RootSystem::enumerate_w() const {
    const long budget = enumeration_budget();
    if (type_a_) {
        if (weyl_order() > budget) throw budget_error("Weyl group exceeds enumeration budget");
        OneLine p = oneline_identity(n_ + 1);
        std::vector<WeylElement> out;
        do {
            out.push_back(WeylElement::from_perm(p));
        } while (std::next_permutation(p.begin(), p.end()));
        std::sort(out.begin(), out.end());
        return out;
    }
    std::set<WeylElement> all;
    std::vector<WeylElement> frontier{identity()};
    all.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier)
            for (int i = 1; i <= n_; ++i) {
                if (sgn(w, i)) continue;
                WeylElement v = right_simple(w, i);
                if (all.insert(v).second) {
                    next.push_back(v);
                    if (static_cast<long>(all.size()) > budget)
                        throw budget_error("Weyl group exceeds enumeration budget");
                }
            }
        frontier = std::move(next);
    }
    return std::vector<WeylElement>(all.begin(), all.end());
}

std::vector<WeylElement> RootSystem::enumerate_wp(const ParabolicSubset& p) const {
    if (type_a_) {
        const int N = n_ + 1;
        std::vector<int> steps = p.complement(n_);
        std::vector<int> bounds;  // block boundaries n_0=0 < n_1 < ... < n+1
        bounds.push_back(0);
        for (int s : steps) bounds.push_back(s);
        bounds.push_back(N);
        // |W^P| = N! / prod(block!)
        long count = 1;
        {
            long num = 1;
            std::vector<long> fact(N + 1, 1);
            for (int i = 1; i <= N; ++i) fact[i] = fact[i - 1] * i;
            num = fact[N];
            for (size_t b = 1; b < bounds.size(); ++b) num /= fact[bounds[b] - bounds[b - 1]];
            count = num;
        }
        if (count > enumeration_budget())
            throw budget_error("W^P exceeds enumeration budget");
        std::vector<WeylElement> out;
        out.reserve(count);
        OneLine cur(N, 0);
        std::vector<int> avail(N);
        std::iota(avail.begin(), avail.end(), 1);
        // Choose the (sorted) value set of each block in turn.
        auto rec = [&](auto&& self, size_t block, std::vector<int> remaining) -> void {
            if (block + 1 >= bounds.size()) {
                out.push_back(WeylElement::from_perm(cur));
                return;
            }
            int sz = bounds[block + 1] - bounds[block];
            std::vector<int> pick(sz);
            auto choose = [&](auto&& chooser, int start, int got) -> void {
                if (got == sz) {
                    for (int t = 0; t < sz; ++t) cur[bounds[block] + t] = pick[t];
                    std::vector<int> rest;
                    size_t pi = 0;
                    for (int v : remaining) {
                        if (pi < pick.size() && pick[pi] == v) { ++pi; continue; }
                        rest.push_back(v);
                    }
                    self(self, block + 1, std::move(rest));
                    return;
                }
                for (int idx = start; idx <= static_cast<int>(remaining.size()) - (sz - got); ++idx) {
                    pick[got] = remaining[idx];
                    chooser(chooser, idx + 1, got + 1);
                }
            };
            if (sz == 0) {
                self(self, block + 1, std::move(remaining));
            } else {
                choose(choose, 0, 0);
            }
        };
        rec(rec, 0, avail);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<WeylElement> all = enumerate_w();
    std::vector<WeylElement> out;
    for (const auto& w : all)
        if (in_wp(p, w)) out.push_back(w);
    return out;
}

std::string RootSystem::to_string(const WeylElement& w) const {
    if (w.is_perm()) return oneline_to_string(w.perm());
    if (w.is_identity()) return "e";
    std::ostringstream out;
    bool first = true;
    for (int i : reduced_word(w)) {
        if (!first) out << '*';
        out << 's' << i;
        first = false;
    }
    return out.str();
}

ReducedWordData inversion_roots(const RootSystem& rs, const std::vector<int>& word) {
    ReducedWordData data;
    data.word = word;
    WeylElement prefix = rs.identity();
    for (int letter : word) {
        std::vector<int> alpha(rs.rank(), 0);
        alpha[letter - 1] = 1;
        std::vector<int> g = rs.act_on_root(prefix, alpha);
        if (rs.positive_root_index(g) < 0)
            throw invariant_error("inversion_roots: word is not reduced");
        data.roots.push_back(std::move(g));
        prefix = rs.right_simple(prefix, letter);
    }
    return data;
}

}  // namespace schubert
