#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/ints.hpp"

namespace schubert {

inline constexpr int kMaxVars = 16;

// Packed exponent vector. Variable j occupies one byte, most significant
// first, so that unsigned comparison of the two words is lexicographic
// comparison of the exponent tuple (e_1, ..., e_n).
struct Monomial {
    int deg = 0;
    std::array<std::uint64_t, 2> w{0, 0};

    static Monomial one() { return {}; }
    static Monomial var(int j, int e = 1);
    static Monomial from_exps(const std::vector<int>& exps);

    int exp(int j) const {
        return static_cast<int>((w[j >> 3] >> (8 * (7 - (j & 7)))) & 0xff);
    }
    std::vector<int> exps(int nvars) const;
    bool is_one() const { return deg == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Quotient a/b; requires divides(b, a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool divides(const Monomial& b, const Monomial& a);

    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.deg <=> b.deg; c != 0) return c;
        if (auto c = a.w[0] <=> b.w[0]; c != 0) return c;
        return a.w[1] <=> b.w[1];
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class VarKind { alpha, t };

// Sparse exact polynomial over Z in variables a1..an (simple roots) or
// t1..t(n+1). Terms are kept in descending graded-lex order; no zero
// coefficient is ever stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Int, std::greater<Monomial>>;

    Poly() = default;
    Poly(VarKind kind, int nvars);

    static Poly zero(VarKind kind, int nvars) { return Poly(kind, nvars); }
    static Poly constant(VarKind kind, int nvars, Int c);
    static Poly one(VarKind kind, int nvars) { return constant(kind, nvars, 1); }
    static Poly variable(VarKind kind, int nvars, int j);
    // sum_j coeffs[j] * var_j
    static Poly linear_form(VarKind kind, const std::vector<int>& coeffs);
    static Poly term(VarKind kind, int nvars, const Monomial& m, Int c);

    VarKind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    bool is_homogeneous_of_degree(int d) const;
    bool has_nonnegative_coeffs() const;
    Int coefficient(const Monomial& m) const;
    Int constant_term() const { return coefficient(Monomial::one()); }

    void add_term(const Monomial& m, const Int& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly& operator*=(const Int& c);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Int& c) { a *= c; return a; }
    friend Poly operator-(Poly a);
    Poly pow(int k) const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string to_string() const;
    static Poly parse(const std::string& text, VarKind kind, int nvars);

private:
    VarKind kind_ = VarKind::alpha;
    int nvars_ = 0;
    TermMap terms_;
};

// q = a * b exactly, or invariant_error when the division is not exact.
Poly exact_div(const Poly& a, const Poly& b);

// Z[a1..an] -> Z[t1..t(n+1)] via a_i -> t_{n+2-i} - t_{n+1-i}.
Poly alpha_to_t(const Poly& p);
// Retraction of the embedding above (t_1 -> 0, t_j -> a_n + ... + a_{n+2-j}).
// Throws invariant_error when p is not in the image of the embedding.
Poly t_to_alpha(const Poly& p);

// Substitute images[j] for variable j; images must share kind/nvars.
Poly substitute_vars(const Poly& p, VarKind out_kind, int out_nvars,
                     const std::vector<Poly>& images);

}  // namespace schubert
