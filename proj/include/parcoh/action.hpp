#pragma once

#include "parcoh/exel.hpp"
#include "parcoh/group.hpp"
#include "parcoh/matrix.hpp"
#include "parcoh/validation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parcoh {

/* A finite product of blocks: each block is K^dim with the componentwise
   product, so the algebra's central idempotents of interest are exactly the
   0/1 block-support vectors. Elements are concatenated coordinate vectors. */
struct BlockAlgebra {
    Field field;
    std::vector<int> block_dims;
    std::vector<int> offsets; /* offsets[b] = first coordinate of block b */
    int dim = 0;

    BlockAlgebra() = default;
    BlockAlgebra(Field f, std::vector<int> dims);
    int blocks() const { return static_cast<int>(block_dims.size()); }
    Vec unit() const;                          /* all-ones */
    Vec support_idempotent(const std::vector<int>& blocks) const; /* 0/1 vector */
    Vec project(const Vec& a, int block) const;  /* zero outside one block */
    Vec block_part(const Vec& a, int block) const; /* the block's own coords */
    Vec embed_block(const Vec& part, int block) const;
};

/* Unital partial action of G on a block algebra. Every domain D_g is a union
   of blocks; alpha_g is given per block of S_{g^{-1}} as (target block,
   invertible matrix). */
struct PartialActionSpec {
    const GroupTable* group = nullptr;
    BlockAlgebra algebra;
    /* domain[g] = sorted blocks of S_g */
    std::vector<std::vector<int>> domain;
    /* block_map[g][b] = image block of b under alpha_g (-1 outside S_{g^{-1}});
       matrix_map[g][b] = the invertible per-block matrix */
    std::vector<std::vector<int>> block_map;
    std::vector<std::map<int, Matrix>> matrix_map;

    bool in_domain(int g, int block) const;
    Vec domain_idempotent(int g) const; /* 1_g */
    /* 1_{(g_1..g_n)} = 1_{g_1} 1_{g_1 g_2} ... 1_{g_1...g_n} */
    Vec tuple_idempotent(const std::vector<int>& tuple) const;
    Vec alpha(int g, const Vec& a) const;        /* needs a supported in D_{g^{-1}} */
    Vec alpha_partial(int g, const Vec& a) const; /* alpha_g(1_{g^{-1}} a) */

    /* per-block maps are algebra maps (entries permutation-like); the
       product-dependent certificates are only theorem-backed when true */
    bool is_multiplicative() const;
    bool is_global() const;
};

/* checks the unital partial action axioms; reports the first failure with
   the offending (g, h, block) witness */
ValidationIssue validate(const PartialActionSpec& spec);

/* restriction of a (validated, global) action to an ideal spanned by a block
   subset: D'_g = A' ∩ beta_g(A') */
PartialActionSpec restrict_global(const PartialActionSpec& global, const std::vector<int>& support);

/* Orbit structure of the block-reachability relation, with the stabilizer
   and transversal data the reduction formulas consume. */
struct Orbit {
    std::vector<int> blocks;      /* sorted, blocks[0] = base block */
    int base = 0;
    std::vector<int> stabilizer;  /* H = {x : base ⊆ D_{x^{-1}}, alpha_x(base) = base} */
    std::vector<int> lambda_prime; /* left transversal reps, 1 first */
    std::vector<int> lambda;       /* {g in lambda_prime : base ⊆ D_{g^{-1}}}, block of g = alpha_g(base) */
    std::vector<int> block_of;     /* for g in lambda: image block index */
};

struct OrbitData {
    std::vector<Orbit> orbits;
    std::vector<int> orbit_of_block;
    bool transitive() const { return orbits.size() == 1; }
};

OrbitData orbit_data(const PartialActionSpec& spec, bool permuted_transversal = false);

/* theta_g(a) = alpha_g(projection of a to the orbit's base block), g in Lambda */
Vec theta(const PartialActionSpec& spec, const Orbit& o, int g, const Vec& a);

/* Transversal combinatorics over one orbit's stabilizer:
   eta_k^g(x_1..x_k), tau_n^g, sigma_{n,i}^g. */
class TransversalMaps {
public:
    TransversalMaps(const GroupTable& g, const Subgroup& h, bool permuted = false);

    const Transversal& transversal() const { return t_; }
    int bar(int x) const { return t_.bar(x); }
    int eta(int x) const { return t_.eta(x); }

    /* eta_k^g(x_1..x_k) = eta(x_k^{-1} * bar(x_{k-1}^{-1} ... x_1^{-1} g)) */
    int eta_k(int g, const std::vector<int>& xs, int k) const;
    /* tau_n^g(x_1..x_n) = (eta_1^g(x_1), ..., eta_n^g(x_1..x_n)) in H^n */
    std::vector<int> tau(int g, const std::vector<int>& xs) const;
    /* sigma_{n,i}^g : G^n -> G^{n+1}, 0 <= i <= n */
    std::vector<int> sigma(int g, const std::vector<int>& xs, int i) const;

private:
    const GroupTable* g_;
    Subgroup h_;
    Transversal t_;
    /* bar(x_k^{-1} ... x_1^{-1} g): the recurring inner product */
    int rest(int g, const std::vector<int>& xs, int k) const;
};

} // namespace parcoh
