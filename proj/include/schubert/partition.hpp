#pragma once

#include <compare>
#include <string>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

// Partition inside an m x (n+1-m) box. The box is part of the value: the same
// part sequence in a different box is a different partition. Parts are stored
// with trailing zeros, exactly rows() entries.
class Partition {
public:
    Partition(std::vector<int> parts, int rows, int ambient);
    static Partition zero(int rows, int ambient);

    int rows() const { return rows_; }         // m
    int ambient() const { return ambient_; }   // n+1
    int width() const { return ambient_ - rows_; }
    int part(int i) const { return parts_[i - 1]; }  // 1-based
    const std::vector<int>& parts() const { return parts_; }
    long size() const;  // |a|

    Partition transpose() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    std::string to_string() const;  // "(6,3,2,2,0,0)@6x13"
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int rows_ = 0;
    int ambient_ = 0;
};

// All eta in the same box with eta_i - nu_i in {0,1} and |eta| = |nu| + r.
std::vector<Partition> vertical_strip_extensions(const Partition& nu, int r);

// The partition (nu_{j_1}-j_1+r+1, ..., nu_{j_{m-r}}-j_{m-r}+m) in
// P_{m-r, n+1}, where j_1 < ... < j_{m-r} are the rows with eta_j = nu_j.
Partition associated_partition(const Partition& eta, const Partition& nu);

// Same value computed by the two-step diagram operation (add a box per strip
// row below, re-box, then cut a box per row below in the new box).
Partition join_and_cut(const Partition& eta, const Partition& nu);

// Grassmannian bijection phi_m: w -> (w(m)-m, ..., w(2)-2, w(1)-1).
Partition grassmannian_partition(int m, int ambient, const WeylElement& w);
WeylElement grassmannian_permutation(const Partition& a);  // phi_m^{-1}
bool is_grassmannian_permutation(int m, const WeylElement& w);

}  // namespace schubert
