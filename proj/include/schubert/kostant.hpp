#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schubert/partition.hpp"
#include "schubert/quantum.hpp"

namespace schubert {

// The canonical reduced word of phi_m^{-1}(a), read off row by row from the
// transpose of a, together with its inversion roots.
ReducedWordData grassmannian_reduced_word(const Partition& a);

// Restriction coefficient xi^{m,p}(a) = sigma^{1^p}|_{phi_m^{-1}(a)}: the sum
// of gamma_{j_1}...gamma_{j_p} over subsequences of the canonical word whose
// letters are exactly [m-p+1, ..., m]. Zero when p exceeds a^T_1.
Poly xi(int m, int p, const Partition& a);

// Localization of a Schubert class at a torus-fixed point: sigma^v|_w, via
// the subword sum over one reduced word of w. Independent of the word.
Poly billey_restriction(const RootSystem& rs, const WeylElement& v, const WeylElement& w);

// Memoized restrictions for repeated localization work on one space.
class RestrictionTable {
public:
    explicit RestrictionTable(const RootSystem& rs) : rs_(rs) {}
    const Poly& get(const WeylElement& v, const WeylElement& w);

private:
    const RootSystem& rs_;
    std::map<std::pair<WeylElement, WeylElement>, Poly> cache_;
};

// The classical equivariant product sigma^u o sigma^v on G/P, computed by a
// GKM triangular solve over the fixed points: completely independent of the
// Pieri/Chevalley code paths. Quantum degrees in the result are all-zero
// vectors of length qdeg_len (pass the number of flag steps, or 0 for a bare
// classical table).
QuantumClass classical_product_oracle(const RootSystem& rs, const ParabolicSubset& parabolic,
                                      const WeylElement& u, const WeylElement& v,
                                      int qdeg_len, RestrictionTable* table = nullptr);

}  // namespace schubert
