#pragma once

#include "parcoh/group.hpp"
#include "parcoh/matrix.hpp"
#include "parcoh/validation.hpp"

#include <vector>

namespace parcoh {

/* Honest G-module: invertible matrices with beta_g beta_h = beta_{gh}. */
class GModule {
public:
    GModule(const GroupTable& g, Field f, std::vector<Matrix> gen);

    const GroupTable& group() const { return *g_; }
    Field field() const { return field_; }
    int dim() const { return dim_; }
    const Matrix& beta(int g) const { return gen_[g]; }
    ValidationIssue validate() const;

private:
    const GroupTable* g_;
    Field field_;
    int dim_;
    std::vector<Matrix> gen_;
};

/* One cochain of the bar complex: a full table G^n -> M. */
struct BarCochain {
    int n = 0;
    std::vector<Vec> values;
};

/* (delta^n f)(g_1..g_{n+1}) = beta_{g_1} f(g_2..g_{n+1})
   + sum_i (-1)^i f(g_1,..,g_i g_{i+1},..,g_{n+1}) + (-1)^{n+1} f(g_1..g_n).
   Assembled directly on the full function spaces — no constraint machinery,
   so this path stays an independent check on the partial complex. */
Matrix bar_coboundary_matrix(const GModule& m, int n);
BarCochain bar_coboundary_apply(const GModule& m, const BarCochain& f);

struct BarCohomologyResult {
    int n = 0;
    int cochain_dim = 0;
    int cocycle_dim = 0;
    int coboundary_dim = 0;
    int h_dim = 0;
    std::vector<BarCochain> representatives;
    Subspace cocycles;
    Subspace coboundaries;
};

BarCohomologyResult classical_cohomology(const GModule& m, int n);

} // namespace parcoh
