#pragma once

#include "parcoh/exel.hpp"
#include "parcoh/module.hpp"

#include <unordered_map>
#include <vector>

namespace parcoh {

/* Free-module resolution of K E(S(G)) by the partial group algebra.
   Level n has K-basis { s(g_1..g_n) : s e_{(g_1..g_n)} = s }; level -1 is
   K E(S(G)) itself with the idempotents as basis. Boundary and homotopy act
   by sparse columns over these bases. */
class Resolution {
public:
    Resolution(const GroupTable& g, Field f, int levels, long long basis_guard = 1'000'000);

    struct BasisElement {
        ExelElement s;
        std::vector<int> tuple;
        bool operator==(const BasisElement&) const = default;
    };

    /* sparse vector over a level's basis */
    using Chain = std::unordered_map<int, Scalar>;

    const ExelSemigroup& semigroup() const { return sg_; }
    int levels() const { return levels_; }
    int basis_size(int n) const; /* n = -1 gives the idempotent count */
    const std::vector<BasisElement>& basis(int n) const { return basis_[n]; }

    /* boundary P_n -> P_{n-1} (n >= 1) and P_0 -> K E(S(G)) (n = 0) */
    Chain boundary(int n, int index) const;
    /* homotopy: sigma_{-1}: K E -> P_0 at n = -1, else P_n -> P_{n+1} */
    Chain homotopy(int n, int index) const;

    /* identities, checked basis-element-wise:
       boundary^2 = 0, boundary_0 sigma_{-1} = id, and
       boundary_{n+1} sigma_n + sigma_{n-1} boundary_n = id for n < levels */
    ValidationIssue certify() const;

    /* Hom transport: for f in C^n_par(G, M), the pullback
       phi_f(s(g..)) = s.f(g..) must satisfy phi_{delta f} = phi_f ∘ boundary.
       Checked on every basis element of level n+1. */
    ValidationIssue certify_hom_transport(const KParModule& m, const PartialCochain& f) const;

    int index_of(int n, const BasisElement& b) const;
    /* canonical representative of s(tuple): (s e_{(tuple)})(tuple) */
    BasisElement canonicalize(const ExelElement& s, const std::vector<int>& tuple) const;

private:
    ExelSemigroup sg_;
    Field field_;
    int levels_;
    std::vector<std::vector<BasisElement>> basis_; /* [n] for 0..levels; idempotents separate */
    std::vector<ExelElement> idems_;
    struct KeyHash {
        std::size_t operator()(const std::pair<ExelElement, std::vector<int>>& k) const;
    };
    std::vector<std::unordered_map<std::pair<ExelElement, std::vector<int>>, int, KeyHash>> index_;
    std::unordered_map<std::uint64_t, int> idem_index_;
};

} // namespace parcoh
