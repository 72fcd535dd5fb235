#pragma once

#include "parcoh/action.hpp"
#include "parcoh/classical.hpp"
#include "parcoh/module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parcoh {

/* The standard enveloping picture of a unital partial action on a product of
   blocks, realized inside F = functions G -> A:
     beta_g(f)|_t = f(g^{-1} t),   phi(a)|_t = alpha_{t^{-1}}(1_t a),
     B = sum_g beta_g(phi(A)).
   B decomposes as one copy of the orbit's base block per coset representative
   in Lambda', one orbit at a time; G is finite and every block is unital, so
   B is unital and the multiplier algebra of B is B itself. The "model" below
   is that block product carried by the induced global action beta*.

   The construction multiplies values of F pointwise, so it requires the
   per-block maps of alpha to be algebra maps (is_multiplicative). */
class Envelope {
public:
    explicit Envelope(const PartialActionSpec& spec, bool permuted_transversal = false);

    const PartialActionSpec& action() const { return *spec_; }
    const OrbitData& orbit_data() const { return orbits_; }
    const TransversalMaps& maps(int orbit) const { return maps_[orbit]; }
    Field field() const { return spec_->algebra.field; }
    const GroupTable& group() const { return *spec_->group; }

    /* F = A^{|G|}; slot t occupies coordinates [t*dimA, (t+1)*dimA) */
    int f_dim() const { return f_dim_; }
    Vec beta_F(int g, const Vec& f) const;
    Vec phi_F(const Vec& a) const;

    /* model block layout: (orbit, position of the rep in Lambda') */
    const BlockAlgebra& model() const { return model_; }
    int model_block(int orbit, int rep_pos) const { return model_index_[orbit][rep_pos]; }
    std::pair<int, int> block_info(int block) const { return block_info_[block]; }
    const Matrix& beta_star(int g) const { return beta_star_[g]; }
    GModule model_module() const;           /* beta* as a G-module */
    PartialActionSpec model_action() const; /* beta* as a global action spec */

    /* T : model -> F, injective with image B; T beta*_g = beta_g T */
    const Matrix& embed() const { return embed_; }
    Vec embed_apply(const Vec& m) const { return embed_.apply(m); }
    const Subspace& b_space() const { return b_space_; }
    Vec model_from_F(const Vec& f) const; /* T^{-1}; throws off image(T) */

    /* phi factored through the model (phi_model = T^{-1} phi_F) */
    const Matrix& phi_model() const { return phi_model_; }
    /* the a in A with phi(a) = phi(1_A).m; throws when m escapes phi(A) */
    Vec restrict_element(const Vec& model_elem) const;

private:
    const PartialActionSpec* spec_;
    OrbitData orbits_;
    std::vector<TransversalMaps> maps_;
    int f_dim_ = 0;
    BlockAlgebra model_;
    std::vector<std::vector<int>> model_index_;
    std::vector<std::pair<int, int>> block_info_;
    std::vector<Matrix> beta_star_;
    Matrix embed_;
    Matrix phi_model_;
    Subspace b_space_;
    std::optional<Solver> embed_solver_;
    std::optional<Solver> phi_solver_;
};

/* invariants of the enveloping construction, certified by direct evaluation */
struct EnvelopeReport {
    bool multiplicative = false;   /* per-block maps are algebra maps */
    bool embed_injective = false;  /* rank T = model dim */
    bool image_is_b = false;       /* image(T) = sum_g beta_g(phi(A)) */
    bool beta_preserves_b = false; /* beta_g(B) = B in F */
    bool intertwines = false;      /* beta_g T = T beta*_g for all g */
    bool algebra_map = false;      /* T multiplicative on the block basis */
    bool unital = false;           /* T(1_model) is the identity of B */
    bool phi_injective = false;
    bool phi_morphism = false;     /* beta*_x phi(1_{x^{-1}}a) = phi(alpha_x(1_{x^{-1}}a)) */
    bool model_is_group_action = false; /* beta*_x beta*_y = beta*_{xy}, invertible */
    bool global_collapse = true;   /* global spec => B = phi(A), model dim = dim A */
    std::string detail;            /* first failure witness */
    bool ok() const {
        return multiplicative && embed_injective && image_is_b && beta_preserves_b &&
               intertwines && algebra_map && unital && phi_injective && phi_morphism &&
               model_is_group_action && global_collapse;
    }
};
EnvelopeReport certify_envelope(const Envelope& env);

/* rho: classical model-valued cochains -> C^n_par(G, A), tuplewise
   phi(w(g_1..g_n)) = phi(1_{(g_1..g_n)}) u(g_1..g_n) */
PartialCochain restrict_cochain(const Envelope& env, const BarCochain& u);

/* w' and eps of the reduction theorem w = delta^{n-1} eps + w'. */
struct ReductionData {
    PartialCochain w_prime; /* degree n */
    PartialCochain eps;     /* degree n-1 */
    bool reduction_holds = false;
};
ReductionData build_w_prime_epsilon(const Envelope& env, const PartialCochain& w);

/* w~ = w~' + hat-delta^{n-1} eps, the extendibility witness. */
struct TildeData {
    std::vector<Vec> w_tilde;   /* full table G^n -> A, no idempotent constraint */
    bool quasi_cocycle = false; /* tilde-delta^n w~' = 0 */
    bool extendible = false;    /* tilde-delta^n w~  = 0 */
    bool restricts = false;     /* 1_{(x_1..x_n)} w~ = w */
};
TildeData build_w_tilde(const Envelope& env, const PartialCochain& w, const ReductionData& red);

struct GlobalizationCertificates {
    bool input_is_cocycle = false;
    bool reduction = false;          /* w = delta^{n-1} eps + w' */
    bool quasi_cocycle = false;      /* tilde-delta w~' = 0 */
    bool extendible = false;         /* tilde-delta w~ = 0 */
    bool tilde_restricts = false;    /* 1_{(x)} w~ = w */
    bool u_matches_tilde = false;    /* u|_t = w~ - trivial-delta w~ (t^{-1}, -) */
    bool u_cocycle_in_F = false;     /* classical cocycle identity in F */
    bool u_multiplier = false;       /* u . phi(a) = phi(w~ a) slotwise */
    bool u_preserves_b = false;      /* u . B inside B */
    bool u_restricts = false;        /* phi(w) = phi(1_{(x)}) u in F */
    bool model_cocycle = false;      /* u_model in Z^n(G, model) */
    bool model_matches_u = false;    /* T(u_model) b = u b on a basis of B */
    bool model_restricts = false;    /* rho(u_model) = w */
    std::string detail;
    bool ok() const {
        return input_is_cocycle && reduction && quasi_cocycle && extendible &&
               tilde_restricts && u_matches_tilde && u_cocycle_in_F && u_multiplier &&
               u_preserves_b && u_restricts && model_cocycle && model_matches_u &&
               model_restricts;
    }
};

struct Globalization {
    int n = 0;
    ReductionData reduction;
    std::vector<Vec> w_tilde;
    BarCochain u_F;     /* values in F */
    BarCochain u_model; /* values in the model */
    GlobalizationCertificates certs;
};

/* existence pipeline; throws std::invalid_argument (with the residual tuple)
   when w is not a cocycle, std::logic_error when a theorem-backed certificate
   fails (that would be an implementation bug, never math) */
Globalization globalize(const Envelope& env, const PartialCochain& w);

/* direct linear solve for u2 - u1 = delta^{n-1} xi; nullopt when the classes
   differ */
std::optional<BarCochain> cohomologous(const GModule& gm, const BarCochain& u1,
                                       const BarCochain& u2);

/* The constructive uniqueness route: vartheta_g = beta_g pr_base on the model
   carries the same w'/eps reduction (the model action is global), and
   u' = prod vartheta_g . u . tau_n^g depends only on the restriction of u.
   For two globalizations of cocycles w_1, w_2 = w_1 + delta xi this exhibits
   u_2 - u_1 = delta^{n-1}(eps_2 - eps_1 + xi') with xi' transported by tau. */
struct ConstructiveWitness {
    BarCochain xi;               /* u2 - u1 = delta^{n-1} xi, certified */
    bool u_prime_depends_only_on_restriction = false;
    bool witness_exact = false;
    bool ok() const { return u_prime_depends_only_on_restriction && witness_exact; }
};
ConstructiveWitness cohomologous_constructive(const Envelope& env, const BarCochain& u1,
                                              const BarCochain& u2,
                                              const PartialCochain* xi_partial = nullptr);

/* dim H^n_par(G,A) = dim H^n(G, model) together with the rho-induced
   bijection checks */
struct IsoReport {
    int n = 0;
    int h_par = -1;
    int h_classical = -1;
    bool dims_equal = false;
    bool restrictions_are_cocycles = false; /* rho(classical reps) in Z^n_par */
    bool round_trip_partial = false;        /* rho(globalize(w)) = w on partial reps */
    bool coboundaries_to_coboundaries = false;
    bool globalize_additive = false;        /* globalize(w1+w2) = globalize(w1)+globalize(w2) */
    bool classes_independent = false;       /* globalized reps independent mod B^n */
    bool classes_surjective = false;        /* classical reps cohomologous to globalized ones */
    bool constructive_witnesses = false;    /* theta-route witnesses exact */
    std::string detail;
    bool ok() const {
        return dims_equal && restrictions_are_cocycles && round_trip_partial &&
               coboundaries_to_coboundaries && globalize_additive && classes_independent &&
               classes_surjective && constructive_witnesses;
    }
};
IsoReport verify_iso(const Envelope& env, int n);

/* Pointwise certification of every displayed identity feeding the reduction
   theorem, ran orbit by orbit on the orbit component of w:
     - the block decomposition w = 1_{(x)} prod_g theta_g [...]
     - the delta-eps recursion base, step, and final-step equalities
     - the switch lemma alpha_x(1_{x^{-1}} prod theta_g a(g)) = ...
     - the alpha-eta summation lemma
     - the eta/tau combinatorial identities
     - theta_g reconstruction and absorption */
struct LemmaReport {
    bool block_decomposition = false; /* w = 1_{(x)} prod theta_g[...] */
    bool base = false;                /* delta eps - alpha eps - w, both displays */
    bool base_shift = false;          /* the j = 1 shift identity */
    bool step = false;                /* the 1 < j < n shift identity */
    bool final_step = false;
    bool recursion = false;           /* assembled recursion = ... - w' */
    bool switch_lemma = false;        /* alpha through prod theta_g */
    bool alpha_eta = false;           /* summed sigma terms = alpha_x(eps) */
    bool eta_identities = false;
    bool theta_identities = false;
    bool sigma_last_vanishes = false; /* Sigma(n, n) convention */
    std::string detail;
    bool ok() const {
        return block_decomposition && base && base_shift && step && final_step &&
               recursion && switch_lemma && alpha_eta && eta_identities &&
               theta_identities && sigma_last_vanishes;
    }
};
LemmaReport verify_reduction_lemmas(const Envelope& env, const PartialCochain& w,
                                    std::uint64_t seed = 12345);

/* Transversal-choice probe: rebuild with the permuted transversal and report
   whether w' matches literally and whether the two outputs differ by the
   explicit coboundary delta^{n-1}(eps_permuted - eps_default). */
struct TransversalComparison {
    bool w_prime_identical = false;
    bool differ_by_coboundary = false;
};
TransversalComparison compare_transversals(const PartialActionSpec& spec, const PartialCochain& w);

} // namespace parcoh
