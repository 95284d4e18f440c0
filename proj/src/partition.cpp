#include "schubert/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schubert {

Partition::Partition(std::vector<int> parts, int rows, int ambient)
    : parts_(std::move(parts)), rows_(rows), ambient_(ambient) {
    if (rows < 0 || ambient < 1 || rows > ambient)
        throw std::invalid_argument("bad partition box");
    while (static_cast<int>(parts_.size()) < rows_) parts_.push_back(0);
    if (static_cast<int>(parts_.size()) > rows_) {
        for (size_t i = rows_; i < parts_.size(); ++i)
            if (parts_[i] != 0) throw std::invalid_argument("partition has too many rows");
        parts_.resize(rows_);
    }
    for (int i = 0; i < rows_; ++i) {
        if (parts_[i] < 0 || parts_[i] > width())
            throw std::invalid_argument("partition does not fit its box");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::zero(int rows, int ambient) {
    return Partition(std::vector<int>(rows, 0), rows, ambient);
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::transpose() const {
    std::vector<int> t(width(), 0);
    for (int i = 0; i < width(); ++i)
        t[i] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                              [&](int p) { return p >= i + 1; }));
    return Partition(std::move(t), width(), ambient_);
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    if (rows_ == 0) {
        out << '0';
    } else {
        for (int i = 0; i < rows_; ++i) {
            if (i) out << ',';
            out << parts_[i];
        }
    }
    out << ")@" << rows_ << 'x' << ambient_;
    return out.str();
}

Partition Partition::parse(const std::string& text) {
    auto fail = [&]() -> void { throw std::invalid_argument("bad partition text: " + text); };
    size_t open = text.find('(');
    size_t close = text.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open) fail();
    std::string body = text.substr(open + 1, close - open - 1);
    std::vector<int> parts;
    {
        std::string norm = body;
        for (char& c : norm)
            if (c == ',') c = ' ';
        std::istringstream in(norm);
        int v;
        while (in >> v) parts.push_back(v);
    }
    size_t at = text.find('@', close);
    if (at == std::string::npos) fail();
    int rows = 0, ambient = 0;
    char x = 0;
    std::istringstream box(text.substr(at + 1));
    if (!(box >> rows >> x >> ambient) || x != 'x') fail();
    if (rows == 0) parts.clear();
    return Partition(std::move(parts), rows, ambient);
}

std::vector<Partition> vertical_strip_extensions(const Partition& nu, int r) {
    const int m = nu.rows();
    if (r < 0 || r > m) throw std::invalid_argument("strip size out of range");
    std::vector<Partition> out;
    std::vector<int> add(m, 0);
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (row == m) {
            if (left != 0) return;
            std::vector<int> eta(m);
            for (int i = 0; i < m; ++i) eta[i] = nu.part(i + 1) + add[i];
            for (int i = 0; i < m; ++i) {
                if (eta[i] > nu.width()) return;
                if (i > 0 && eta[i] > eta[i - 1]) return;
            }
            out.emplace_back(std::move(eta), m, nu.ambient());
            return;
        }
        if (m - row < left) return;
        add[row] = 0;
        self(self, row + 1, left);
        if (left > 0) {
            add[row] = 1;
            self(self, row + 1, left - 1);
            add[row] = 0;
        }
    };
    rec(rec, 0, r);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int strip_size_checked(const Partition& eta, const Partition& nu) {
    if (eta.rows() != nu.rows() || eta.ambient() != nu.ambient())
        throw std::invalid_argument("strip pair must live in the same box");
    int r = 0;
    for (int i = 1; i <= nu.rows(); ++i) {
        int d = eta.part(i) - nu.part(i);
        if (d != 0 && d != 1)
            throw std::invalid_argument("eta is not a vertical-strip extension of nu");
        r += d;
    }
    return r;
}

}  // namespace

Partition associated_partition(const Partition& eta, const Partition& nu) {
    const int m = nu.rows();
    const int r = strip_size_checked(eta, nu);
    std::vector<int> parts;
    int i = 0;
    for (int j = 1; j <= m; ++j) {
        if (eta.part(j) != nu.part(j)) continue;
        ++i;  // this is row j_i
        parts.push_back(nu.part(j) - j + r + i);
    }
    return Partition(std::move(parts), m - r, nu.ambient());
}

Partition join_and_cut(const Partition& eta, const Partition& nu) {
    const int m = nu.rows();
    const int r = strip_size_checked(eta, nu);
    // Step 1: keep the rows of eta without a strip box, adding one box for
    // every row of the rectangle below; the rows move to an
    // (m-r) x (n+1-m+r) rectangle keeping their relative positions.
    std::vector<int> joined;
    for (int j = 1; j <= m; ++j)
        if (eta.part(j) == nu.part(j)) joined.push_back(eta.part(j) + (m - j));
    // Step 2: cut one box for each remaining row of the new box below.
    const int new_rows = m - r;
    std::vector<int> parts(joined.size());
    for (int i = 0; i < new_rows; ++i) parts[i] = joined[i] - (new_rows - 1 - i);
    return Partition(std::move(parts), new_rows, nu.ambient());
}

Partition grassmannian_partition(int m, int ambient, const WeylElement& w) {
    if (!w.is_perm() || static_cast<int>(w.perm().size()) != ambient)
        throw std::invalid_argument("phi_m expects a type A element of the right size");
    if (!is_grassmannian_permutation(m, w))
        throw std::invalid_argument("not a Grassmannian permutation: " + oneline_to_string(w.perm()));
    std::vector<int> parts(m);
    for (int s = 1; s <= m; ++s) parts[s - 1] = w.perm()[m - s] - (m - s + 1);
    return Partition(std::move(parts), m, ambient);
}

WeylElement grassmannian_permutation(const Partition& a) {
    const int m = a.rows();
    const int N = a.ambient();
    OneLine w(N, 0);
    std::vector<bool> used(N + 1, false);
    for (int j = 1; j <= m; ++j) {
        int v = a.part(m + 1 - j) + j;
        w[j - 1] = v;
        used[v] = true;
    }
    int next = 1;
    for (int j = m; j < N; ++j) {
        while (used[next]) ++next;
        w[j] = next;
        used[next] = true;
    }
    return WeylElement::from_perm(std::move(w));
}

bool is_grassmannian_permutation(int m, const WeylElement& w) {
    const OneLine& p = w.perm();
    for (int i = 0; i + 1 < static_cast<int>(p.size()); ++i) {
        if (i + 1 == m) continue;
        if (p[i] > p[i + 1]) return false;
    }
    return true;
}

}  // namespace schubert
