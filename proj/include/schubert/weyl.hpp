#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/poly.hpp"

namespace schubert {

// One-line permutation of {1..N}, stored 0-based: w[i] = w(i+1).
using OneLine = std::vector<int>;

OneLine oneline_identity(int n_values);
int oneline_length(const OneLine& w);  // inversion count
// Composition convention throughout: (xy)(i) = x(y(i)).
OneLine oneline_compose(const OneLine& x, const OneLine& y);
OneLine oneline_inverse(const OneLine& w);
std::string oneline_to_string(const OneLine& w);  // [3715246], or commas past 9
// Cycle (a b ... z) maps a->b->...->z->a.
OneLine cycles_to_oneline(const std::vector<std::vector<int>>& cycles, int n_values);
// Accepts one-line form "[3715246]"/"[10,3,...]" or cycle form "(2 3 4)(5 7)".
OneLine parse_permutation(const std::string& text, int n_values);

// Weyl group element. In type A this is a one-line permutation; in other
// finite types it is stored by its action on the root and coroot lattices
// (columns = images of the simple (co)roots). Length is cached.
class WeylElement {
public:
    WeylElement() = default;
    static WeylElement from_perm(OneLine w);

    bool is_perm() const { return !perm_.empty(); }
    const OneLine& perm() const { return perm_; }
    int length() const { return len_; }
    bool is_identity() const { return len_ == 0; }
    int matrix_rank() const { return rank_; }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.perm_ == b.perm_ && a.rmat_ == b.rmat_;
    }
    // Orders by (length, one-line/matrix lexicographic): the canonical
    // enumeration order used everywhere for determinism.
    friend bool operator<(const WeylElement& a, const WeylElement& b) {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
        return a.rmat_ < b.rmat_;
    }

private:
    OneLine perm_;           // type A
    std::vector<int> rmat_;  // root action, row-major rank x rank
    std::vector<int> cmat_;  // coroot action
    int rank_ = 0;
    int len_ = 0;
    friend class RootSystem;
};

// Subset of the simple roots (indices 1..n), defining a parabolic subgroup.
struct ParabolicSubset {
    std::vector<int> delta_p;  // sorted ascending
    static ParabolicSubset of(std::vector<int> indices);
    std::vector<int> complement(int n) const;  // sorted n_1 < ... < n_k
};

// Finite-type root datum: Cartan matrix, positive roots and their coroots,
// and the Weyl group operations. Type A carries a permutation fast path.
class RootSystem {
public:
    static RootSystem type_a(int n);
    static RootSystem type_b(int n);
    static RootSystem type_c(int n);
    static RootSystem type_g2();
    static RootSystem from_cartan(std::vector<std::vector<int>> cartan);

    int rank() const { return n_; }
    bool is_type_a() const { return type_a_; }
    // cartan(i, j) = <alpha_i, alpha_j^vee>, 1-based.
    int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
    int num_positive_roots() const { return static_cast<int>(positive_.size()); }
    const std::vector<int>& positive_root(int idx) const { return positive_[idx].root; }
    const std::vector<int>& coroot_of(int idx) const { return positive_[idx].coroot; }
    int positive_root_index(const std::vector<int>& root) const;  // -1 if absent

    // <gamma, lambda> for a root and a coroot, both in simple (co)root coords.
    long pairing(const std::vector<int>& root, const std::vector<int>& coroot) const;
    // <2 rho, lambda> = 2 * sum of coroot coordinates (every simple coroot
    // pairs with 2 rho to 2).
    static long two_rho_pairing(const std::vector<int>& coroot);
    Poly root_linear_form(const std::vector<int>& root) const;

    WeylElement identity() const;
    WeylElement simple_reflection(int i) const;
    WeylElement reflection(int pos_root_idx) const;  // s_gamma
    WeylElement multiply(const WeylElement& x, const WeylElement& y) const;
    WeylElement inverse(const WeylElement& w) const;
    WeylElement right_simple(const WeylElement& w, int i) const;  // w s_i
    WeylElement from_word(const std::vector<int>& word) const;

    std::vector<int> act_on_root(const WeylElement& w, const std::vector<int>& root) const;
    std::vector<int> act_on_coroot(const WeylElement& w, const std::vector<int>& coroot) const;

    // sgn_beta(w): 1 iff w(alpha_beta) is a negative root, equivalently
    // l(w s_beta) = l(w) - 1.
    bool sgn(const WeylElement& w, int beta) const;
    int weyl_length(const WeylElement& w) const { return w.length(); }

    // Deterministic reduced word: repeatedly strips the smallest descent.
    std::vector<int> reduced_word(const WeylElement& w) const;

    // Longest element of the subgroup generated by {s_i : i in subset}.
    WeylElement longest_element(const std::vector<int>& subset) const;

    bool in_wp(const ParabolicSubset& p, const WeylElement& w) const;
    // w = w_min * w_par with w_min in W^P, w_par in W_P, lengths additive.
    std::pair<WeylElement, WeylElement> coset_decompose(const ParabolicSubset& p,
                                                        const WeylElement& w) const;

    std::vector<WeylElement> enumerate_w() const;
    // Minimal coset representatives, sorted by (length, one-line order).
    std::vector<WeylElement> enumerate_wp(const ParabolicSubset& p) const;

    // |W| cap for enumerations; default 40320, overridable via SCHUBERT_MAX_W.
    static long enumeration_budget();

    std::string to_string(const WeylElement& w) const;

private:
    struct RootDatum {
        std::vector<int> root, coroot;
    };
    RootSystem() = default;
    void generate_roots();
    WeylElement make_matrix_identity() const;
    int matrix_length(const std::vector<int>& rmat) const;
    long weyl_order() const;

    int n_ = 0;
    bool type_a_ = false;
    std::vector<std::vector<int>> cartan_;
    std::vector<RootDatum> positive_;
    std::vector<std::vector<int>> pos_lookup_keys_;  // sorted for index lookup
    std::vector<int> pos_lookup_vals_;
};

// The inversion-root data of a reduced word: gamma_b = s_{i_1}...s_{i_{b-1}}(alpha_{i_b}).
struct ReducedWordData {
    std::vector<int> word;
    std::vector<std::vector<int>> roots;  // positive roots, simple-root coords
};
ReducedWordData inversion_roots(const RootSystem& rs, const std::vector<int>& word);

}  // namespace schubert
