#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/partition.hpp"
#include "schubert/poly.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// The flag variety Fl_{n_1 < ... < n_k; n+1} in type A, with the conventions
// n_0 = 0 and n_{k+1} = n+1. Delta_P is the complement of the steps.
struct FlagShape {
    int n = 0;
    std::vector<int> steps;

    FlagShape() = default;
    FlagShape(int n_, std::vector<int> steps_);
    static FlagShape grassmannian(int m, int ambient);  // Gr(m, n+1)
    static FlagShape full(int n);                        // Fl_{1..n; n+1}

    int k() const { return static_cast<int>(steps.size()); }
    int ambient() const { return n + 1; }
    // n_i with n_0 = 0 and n_{k+1} = n+1.
    int step(int i) const;
    ParabolicSubset parabolic() const;
    bool in_wp(const WeylElement& w) const;

    friend bool operator==(const FlagShape&, const FlagShape&) = default;
};

// Quantum degree: coordinates in the basis q_{alpha_{n_j}^vee + Q_P^vee}
// (length k), or in the full coroot basis for G/B (length n).
using QDeg = std::vector<int>;

bool is_effective(const QDeg& d);
long qdeg_total(const QDeg& d);

struct ClassKey {
    WeylElement w;
    QDeg q;
    // (total q-degree, w length, one-line order, q): the table sort order.
    friend bool operator<(const ClassKey& a, const ClassKey& b) {
        long ta = qdeg_total(a.q), tb = qdeg_total(b.q);
        if (ta != tb) return ta < tb;
        if (!(a.w == b.w)) return a.w < b.w;
        return a.q < b.q;
    }
    friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

// A finite S[q]-linear combination of Schubert classes: the expansion of a
// product in the Schubert basis. No zero polynomial is stored.
class QuantumClass {
public:
    using TermMap = std::map<ClassKey, Poly>;

    QuantumClass() = default;

    void add(const WeylElement& w, const QDeg& q, const Poly& coeff);
    // Adds after checking the positivity/degree contract: coeff must be
    // homogeneous of the expected degree with nonnegative coefficients, the
    // degree must be nonnegative, and q must be effective.
    void add_checked(const WeylElement& w, const QDeg& q, const Poly& coeff,
                     long expected_degree);

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    const Poly* find(const WeylElement& w, const QDeg& q) const;

    QuantumClass classical_limit() const;
    QuantumClass nonequivariant_limit() const;

    QuantumClass& operator+=(const QuantumClass& o);
    friend bool operator==(const QuantumClass&, const QuantumClass&) = default;

private:
    TermMap terms_;
};

// Number of coefficients that passed the add_checked contract since process
// start; the positivity criterion reports it.
long positivity_checks_performed();

// Text formats. `table` is the persistence format: a `#space` header line and
// one `w=... q=... c=...` line per entry, sorted as in ClassKey.
std::string to_table(const QuantumClass& c, const FlagShape& shape);
QuantumClass parse_table(const std::string& text, FlagShape* shape_out = nullptr);
std::string to_plain(const QuantumClass& c, const FlagShape& shape);
std::string to_latex(const QuantumClass& c, const FlagShape& shape);

}  // namespace schubert
