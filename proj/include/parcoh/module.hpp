#pragma once

#include "parcoh/action.hpp"
#include "parcoh/exel.hpp"
#include "parcoh/group.hpp"
#include "parcoh/matrix.hpp"

#include <map>
#include <optional>
#include <vector>

namespace parcoh {

/* Module over the partial group algebra, presented by the generator matrices
   pi_g of a partial representation:
     pi_1 = I,  pi_{g^{-1}} pi_g pi_h = pi_{g^{-1}} pi_{gh},
     pi_g pi_h pi_{h^{-1}} = pi_{gh} pi_{h^{-1}}. */
class KParModule {
public:
    KParModule(const GroupTable& g, Field f, std::vector<Matrix> gen);

    /* [g].a = alpha_g(1_{g^{-1}} a) on the block algebra of a partial action */
    static KParModule induced(const PartialActionSpec& spec);
    /* K E(S(G)) with s.e = s e s^{-1} */
    static KParModule conjugation(const ExelSemigroup& s, Field f);

    const GroupTable& group() const { return *g_; }
    Field field() const { return field_; }
    int dim() const { return dim_; }
    const Matrix& pi(int g) const { return gen_[g]; }
    /* e_g = pi_g pi_{g^{-1}}, cached */
    const Matrix& idem(int g) const;
    /* e_{(g_1..g_n)} = e_{g_1} e_{g_1g_2} ... e_{g_1...g_n} */
    Matrix tuple_idem(const std::vector<int>& tuple) const;
    /* action of a normal form: e_{h_1}...e_{h_k} [tail] */
    Vec act(const ExelElement& s, const Vec& v) const;

    /* the three partial-representation relations, exhaustive over pairs;
       empty message = pass */
    ValidationIssue validate() const;

private:
    const GroupTable* g_;
    Field field_;
    int dim_;
    std::vector<Matrix> gen_;
    mutable std::vector<std::optional<Matrix>> idem_cache_;
};

/* Cochain space C^n_par: per tuple (g_1..g_n) the subspace
   e_{(g_1..g_n)} . M, held by canonical bases. Coordinates of a cochain are
   the concatenated per-tuple basis coordinates. */
class CochainSpace {
public:
    CochainSpace(const KParModule& m, int n);

    const KParModule& module() const { return *m_; }
    int degree() const { return n_; }
    long long tuples() const { return indexer_.count(); }
    const TupleIndexer& indexer() const { return indexer_; }
    const Subspace& tuple_space(long long t) const { return spaces_[t]; }
    int offset(long long t) const { return offsets_[t]; }
    int dim() const { return dim_; }

    /* constrained coordinates <-> per-tuple ambient values */
    std::vector<Vec> unpack(const Vec& coords) const;
    /* nullopt when some value escapes its constraint subspace */
    std::optional<Vec> pack(const std::vector<Vec>& values) const;

private:
    const KParModule* m_;
    int n_;
    TupleIndexer indexer_;
    std::vector<Subspace> spaces_;
    std::vector<int> offsets_;
    int dim_;
};

/* A partial n-cochain as per-tuple values in module coordinates. */
struct PartialCochain {
    int n = 0;
    std::vector<Vec> values; /* indexed by TupleIndexer */
};

/* delta^n f evaluated tuplewise (works on any per-tuple value table) */
PartialCochain coboundary_apply(const KParModule& m, const PartialCochain& f);

/* delta^n as a matrix from C^n coordinates to C^{n+1} coordinates; throws if
   some image value escapes its constraint subspace (broken complex) */
Matrix coboundary_matrix(const KParModule& m, const CochainSpace& cn, const CochainSpace& cn1);

struct CohomologyResult {
    int n = 0;
    int cochain_dim = 0;
    int cocycle_dim = 0;    /* dim Z^n */
    int coboundary_dim = 0; /* dim B^n */
    int h_dim = 0;
    std::vector<PartialCochain> representatives; /* h_dim cocycles spanning H^n */
    Subspace cocycles;      /* in C^n constrained coordinates */
    Subspace coboundaries;
};

CohomologyResult cohomology(const KParModule& m, int n);

/* H^0 for the induced module of an action over a finite field: checks the
   invariant subalgebra is product-closed and unital, enumerates its units,
   and compares them with the invertible-element fixed points. */
struct H0Comparison {
    int h0_dim = 0;
    long long subalgebra_size = 0;
    long long unit_count = 0;
    bool closed_under_product = false;
    bool contains_unit = false;
    bool units_match = false; /* U(H^0_par) == {a in U(A) : alpha_g(1_{g^{-1}}a) = 1_g a} */
    bool ok() const { return closed_under_product && contains_unit && units_match; }
};
H0Comparison h0_comparison(const PartialActionSpec& spec, long long enumeration_guard = 1 << 20);

/* dim D(G,M) (G-indexed derivation identities), dim PD(G,M), and
   dim Der(K_par G, M) computed from the Leibniz constraints over all pairs
   of semigroup elements. */
struct DerivationSpaces {
    int d_dim = 0;
    int pd_dim = 0;
    int der_dim = 0;   /* exhaustive Leibniz over S(G) x S(G) */
    int h1_dim = 0;
    bool identities_hold() const { return d_dim - pd_dim == h1_dim && der_dim == d_dim; }
};
DerivationSpaces derivation_spaces(const KParModule& m);

} // namespace parcoh
