#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/pieri.hpp"

namespace schubert {

// A Z[t]-linear combination of formal monomials e_{p_1}...e_{p_r} in the
// special classes of Gr(m, n+1). e_0 = 1 is absorbed; e_p = 0 outside 0..m.
class FormalEPoly {
public:
    using Key = std::vector<int>;  // e-indices, sorted descending, in 1..m
    FormalEPoly(int m, int n) : m_(m), n_(n) {}
    static FormalEPoly unit(int m, int n);
    static FormalEPoly e(int m, int n, int p);  // zero outside 0..m

    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<Key, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Key key, const Poly& coeff);
    FormalEPoly& operator+=(const FormalEPoly& o);
    FormalEPoly& operator-=(const FormalEPoly& o);
    friend FormalEPoly operator+(FormalEPoly a, const FormalEPoly& b) { a += b; return a; }
    friend FormalEPoly operator-(FormalEPoly a, const FormalEPoly& b) { a -= b; return a; }
    friend FormalEPoly operator*(const FormalEPoly& a, const FormalEPoly& b);
    FormalEPoly& operator*=(const Poly& t_coeff);
    friend bool operator==(const FormalEPoly&, const FormalEPoly&) = default;

private:
    int m_ = 0, n_ = 0;
    std::map<Key, Poly> terms_;
};

// t_s as a polynomial in Z[t_1..t_{n+1}]; zero for s <= 0 or s >= n+2.
Poly t_var(int n, int s);

// tau^s e_p = tau^{s-1} e_p + (t_s - t_{m-p+s+1}) tau^{s-1} e_{p-1}.
FormalEPoly tau_shift_e(int m, int n, int s, int p);

// H_k = det(tau^{j-1} e_{1+j-i})_{1<=i,j<=k}.
FormalEPoly h_determinant(int k, int m, int n);

// tau^{-s} H_j = tau^{1-s} H_j + (t_{j+m-s} - t_{1-s}) tau^{1-s} H_{j-1}, s >= 0.
FormalEPoly tau_neg_shift_h(int m, int n, int s, int j);

// Class over Gr(m, n+1) with Z[t] coefficients, keyed by (partition, q power).
using GrTable = std::map<std::pair<Partition, int>, Poly>;
GrTable gr_unit_table(int m, int n);
GrTable gr_single_table(int m, int n, const Partition& nu);
// sigma^{1^p} * (-), coefficients converted a -> t; classical_only truncates q.
GrTable apply_special_t(int m, int n, int p, const GrTable& cls, bool classical_only);
// Evaluate a formal e-polynomial against a base class by iterated Pieri
// products (descending e-index order).
GrTable eval_formal(const FormalEPoly& f, const GrTable& base, bool classical_only);

// The Giambelli determinant det(tau^{j-1} e_{lam^T_i + j - i}) evaluated in
// QH_T^*(Gr(m, n+1)); the result is checked to be exactly sigma^lam.
QuantumClass giambelli_class(int m, int n, const Partition& lam);

// sigma^lam * sigma^mu via the determinant of lam applied to sigma^mu.
QuantumClass gr_full_product(int m, int n, const Partition& lam, const Partition& mu);

// Ring-presentation checks: H_r = sigma^r for r <= n+1-m, H_r = 0 for
// n-m+2 <= r <= n, H_{n+1} = (-1)^{m-1} q, and the alternating classical
// identity sum_p (-1)^p sigma^{1^p} o tau^{1-M} H_{M-p} = 0 for M <= n+1.
struct RingReport {
    std::vector<std::pair<std::string, bool>> relations;
    bool all_ok = true;
};
RingReport ring_relation_check(int m, int n);

}  // namespace schubert
