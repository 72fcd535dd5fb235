#include "parcoh/action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace parcoh {

BlockAlgebra::BlockAlgebra(Field f, std::vector<int> dims) : field(f), block_dims(std::move(dims)) {
    for (int d : block_dims) {
        if (d < 1) throw std::invalid_argument("block dimension must be positive");
        offsets.push_back(dim);
        dim += d;
    }
}

Vec BlockAlgebra::unit() const { return Vec(dim, Scalar::one(field)); }

Vec BlockAlgebra::support_idempotent(const std::vector<int>& bs) const {
    Vec v = vec_zero(field, dim);
    for (int b : bs)
        for (int i = 0; i < block_dims[b]; ++i) v[offsets[b] + i] = Scalar::one(field);
    return v;
}

Vec BlockAlgebra::project(const Vec& a, int block) const {
    Vec v = vec_zero(field, dim);
    for (int i = 0; i < block_dims[block]; ++i) v[offsets[block] + i] = a[offsets[block] + i];
    return v;
}

Vec BlockAlgebra::block_part(const Vec& a, int block) const {
    return Vec(a.begin() + offsets[block], a.begin() + offsets[block] + block_dims[block]);
}

Vec BlockAlgebra::embed_block(const Vec& part, int block) const {
    if (static_cast<int>(part.size()) != block_dims[block])
        throw std::logic_error("block coordinate length mismatch");
    Vec v = vec_zero(field, dim);
    for (int i = 0; i < block_dims[block]; ++i) v[offsets[block] + i] = part[i];
    return v;
}

bool PartialActionSpec::in_domain(int g, int block) const {
    return std::binary_search(domain[g].begin(), domain[g].end(), block);
}

Vec PartialActionSpec::domain_idempotent(int g) const {
    return algebra.support_idempotent(domain[g]);
}

Vec PartialActionSpec::tuple_idempotent(const std::vector<int>& tuple) const {
    Vec v = algebra.unit();
    int prefix = 0;
    for (int g : tuple) {
        prefix = group->mul(prefix, g);
        v = vec_mul(v, domain_idempotent(prefix));
    }
    return v;
}

Vec PartialActionSpec::alpha(int g, const Vec& a) const {
    Vec out = vec_zero(algebra.field, algebra.dim);
    int gi = group->inv(g);
    for (int b : domain[gi]) {
        Vec part = algebra.block_part(a, b);
        if (vec_is_zero(part)) continue;
        int target = block_map[g][b];
        Vec image = matrix_map[g].at(b).apply(part);
        for (int i = 0; i < algebra.block_dims[target]; ++i)
            out[algebra.offsets[target] + i] = image[i];
    }
    /* anything outside D_{g^{-1}} must have been zero */
    for (int b = 0; b < algebra.blocks(); ++b) {
        if (in_domain(gi, b)) continue;
        if (!vec_is_zero(algebra.block_part(a, b)))
            throw std::logic_error("alpha_g applied outside D_{g^{-1}}");
    }
    return out;
}

Vec PartialActionSpec::alpha_partial(int g, const Vec& a) const {
    return alpha(g, vec_mul(domain_idempotent(group->inv(g)), a));
}

bool PartialActionSpec::is_multiplicative() const {
    /* per-block matrices must send the block unit to the target unit and
       preserve componentwise products of basis vectors: exactly permutation
       matrices */
    for (int g = 0; g < group->order(); ++g)
        for (const auto& [b, m] : matrix_map[g]) {
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) {
                    const Scalar& x = m.at(i, j);
                    if (!x.is_zero() && !x.is_one()) return false;
                }
            /* rows/cols each exactly one 1: invertibility is validated
               elsewhere, so checking column sums suffices */
            for (int j = 0; j < m.cols(); ++j) {
                int count = 0;
                for (int i = 0; i < m.rows(); ++i)
                    if (m.at(i, j).is_one()) ++count;
                if (count != 1) return false;
            }
        }
    return true;
}

bool PartialActionSpec::is_global() const {
    for (int g = 0; g < group->order(); ++g)
        if (static_cast<int>(domain[g].size()) != algebra.blocks()) return false;
    return true;
}

static std::string at(int g, int h, int b) {
    return " at (g=" + std::to_string(g) + ", h=" + std::to_string(h) + ", block=" + std::to_string(b) + ")";
}

ValidationIssue validate(const PartialActionSpec& spec) {
    const GroupTable& G = *spec.group;
    const BlockAlgebra& A = spec.algebra;
    int n = G.order();
    if (static_cast<int>(spec.domain.size()) != n || static_cast<int>(spec.block_map.size()) != n ||
        static_cast<int>(spec.matrix_map.size()) != n)
        return {"spec arrays must have one entry per group element"};
    for (int g = 0; g < n; ++g) {
        if (!std::is_sorted(spec.domain[g].begin(), spec.domain[g].end()))
            return {"domain lists must be sorted (g=" + std::to_string(g) + ")"};
        for (int b : spec.domain[g])
            if (b < 0 || b >= A.blocks()) return {"domain block out of range (g=" + std::to_string(g) + ")"};
        if (static_cast<int>(spec.block_map[g].size()) != A.blocks())
            return {"block_map must cover every block (g=" + std::to_string(g) + ")"};
    }
    /* D_1 = A and alpha_1 = id */
    if (static_cast<int>(spec.domain[0].size()) != A.blocks()) return {"D_1 must be all of A"};
    for (int b = 0; b < A.blocks(); ++b) {
        if (spec.block_map[0][b] != b) return {"alpha_1 must fix every block"};
        if (!spec.matrix_map[0].at(b).is_identity()) return {"alpha_1 must be the identity map"};
    }
    /* per-g structure: alpha_g is a bijection S_{g^{-1}} -> S_g with
       invertible per-block matrices */
    for (int g = 0; g < n; ++g) {
        int gi = G.inv(g);
        std::set<int> targets;
        for (int b = 0; b < A.blocks(); ++b) {
            bool dom = spec.in_domain(gi, b);
            int t = spec.block_map[g][b];
            if (!dom) {
                if (t != -1) return {"block_map set outside D_{g^{-1}}" + at(g, -1, b)};
                continue;
            }
            if (t < 0 || t >= A.blocks() || !spec.in_domain(g, t))
                return {"alpha_g image block outside D_g" + at(g, -1, b)};
            if (!targets.insert(t).second) return {"alpha_g not injective on blocks" + at(g, -1, b)};
            auto it = spec.matrix_map[g].find(b);
            if (it == spec.matrix_map[g].end()) return {"missing per-block matrix" + at(g, -1, b)};
            const Matrix& m = it->second;
            if (m.rows() != A.block_dims[t] || m.cols() != A.block_dims[b])
                return {"per-block matrix shape mismatch" + at(g, -1, b)};
            if (rref(m).rank() != m.cols()) return {"per-block matrix not invertible" + at(g, -1, b)};
        }
        if (static_cast<int>(targets.size()) != static_cast<int>(spec.domain[g].size()))
            return {"alpha_g not onto S_g (g=" + std::to_string(g) + ")"};
    }
    /* composition: if b in S_{h^{-1}} and alpha_h(b) in S_{g^{-1}} then
       b in S_{(gh)^{-1}} and alpha_g(alpha_h(.)) = alpha_{gh}(.) on the block */
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gh = G.mul(g, h);
            for (int b : spec.domain[G.inv(h)]) {
                int mid = spec.block_map[h][b];
                if (!spec.in_domain(G.inv(g), mid)) continue;
                if (!spec.in_domain(G.inv(gh), b))
                    return {"composition axiom: domain not closed" + at(g, h, b)};
                if (spec.block_map[g][mid] != spec.block_map[gh][b])
                    return {"composition axiom: blocks disagree" + at(g, h, b)};
                Matrix lhs = spec.matrix_map[g].at(mid) * spec.matrix_map[h].at(b);
                if (!(lhs == spec.matrix_map[gh].at(b)))
                    return {"composition axiom: matrices disagree" + at(g, h, b)};
            }
        }
    return {};
}

PartialActionSpec restrict_global(const PartialActionSpec& global, const std::vector<int>& support) {
    if (!global.is_global()) throw std::invalid_argument("restrict_global needs a global action");
    std::vector<int> supp = support;
    std::sort(supp.begin(), supp.end());
    supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
    for (int b : supp)
        if (b < 0 || b >= global.algebra.blocks()) throw std::invalid_argument("support block out of range");
    /* new algebra = the chosen blocks, renumbered in order */
    std::vector<int> dims, old_to_new(global.algebra.blocks(), -1);
    for (int i = 0; i < static_cast<int>(supp.size()); ++i) {
        old_to_new[supp[i]] = i;
        dims.push_back(global.algebra.block_dims[supp[i]]);
    }
    const GroupTable& G = *global.group;
    PartialActionSpec spec;
    spec.group = global.group;
    spec.algebra = BlockAlgebra(global.algebra.field, dims);
    spec.domain.resize(G.order());
    spec.block_map.assign(G.order(), std::vector<int>(supp.size(), -1));
    spec.matrix_map.resize(G.order());
    for (int g = 0; g < G.order(); ++g) {
        int gi = G.inv(g);
        for (int bOld : supp) {
            int target = global.block_map[g][bOld];
            if (old_to_new[target] < 0) continue; /* beta_g leaves the ideal */
            /* bOld in D'_{g^{-1}} iff beta_g(bOld) stays inside the support */
            spec.domain[g].push_back(old_to_new[target]);
            spec.block_map[g][old_to_new[bOld]] = old_to_new[target];
            spec.matrix_map[g].emplace(old_to_new[bOld], global.matrix_map[g].at(bOld));
        }
        std::sort(spec.domain[g].begin(), spec.domain[g].end());
    }
    return spec;
}

OrbitData orbit_data(const PartialActionSpec& spec, bool permuted_transversal) {
    const GroupTable& G = *spec.group;
    const BlockAlgebra& A = spec.algebra;
    OrbitData data;
    data.orbit_of_block.assign(A.blocks(), -1);
    for (int b0 = 0; b0 < A.blocks(); ++b0) {
        if (data.orbit_of_block[b0] >= 0) continue;
        Orbit o;
        o.base = b0;
        /* flood the reachability relation "alpha_g maps b onto c" */
        std::vector<int> frontier{b0};
        std::set<int> seen{b0};
        while (!frontier.empty()) {
            int b = frontier.back();
            frontier.pop_back();
            for (int g = 0; g < G.order(); ++g) {
                if (!spec.in_domain(G.inv(g), b)) continue;
                int c = spec.block_map[g][b];
                if (seen.insert(c).second) frontier.push_back(c);
            }
        }
        o.blocks.assign(seen.begin(), seen.end());
        int oi = static_cast<int>(data.orbits.size());
        for (int b : o.blocks) data.orbit_of_block[b] = oi;
        for (int x = 0; x < G.order(); ++x)
            if (spec.in_domain(G.inv(x), b0) && spec.block_map[x][b0] == b0) o.stabilizer.push_back(x);
        Subgroup h(G, o.stabilizer);
        Transversal t(h, permuted_transversal);
        o.lambda_prime = t.reps();
        for (int g : o.lambda_prime) {
            if (!spec.in_domain(G.inv(g), b0)) continue;
            o.lambda.push_back(g);
            o.block_of.push_back(spec.block_map[g][b0]);
        }
        /* transitivity: every block of the orbit must be alpha_g(base) for a
           unique g in Lambda */
        if (o.block_of.size() != o.blocks.size())
            throw std::logic_error("orbit not reachable from its base block via Lambda (not transitive?)");
        data.orbits.push_back(std::move(o));
    }
    return data;
}

Vec theta(const PartialActionSpec& spec, const Orbit& o, int g, const Vec& a) {
    auto pos = std::find(o.lambda.begin(), o.lambda.end(), g);
    if (pos == o.lambda.end()) throw std::invalid_argument("theta_g needs g in Lambda");
    Vec based = spec.algebra.project(a, o.base);
    return spec.alpha(g, based);
}

TransversalMaps::TransversalMaps(const GroupTable& g, const Subgroup& h, bool permuted)
    : g_(&g), h_(h), t_(h_, permuted) {}

int TransversalMaps::rest(int g, const std::vector<int>& xs, int k) const {
    /* bar( x_k^{-1} x_{k-1}^{-1} ... x_1^{-1} g ) */
    int acc = g;
    for (int i = 0; i < k; ++i) acc = g_->mul(g_->inv(xs[i]), acc); /* builds x_k^{-1}...x_1^{-1} g */
    return t_.bar(acc);
}

int TransversalMaps::eta_k(int g, const std::vector<int>& xs, int k) const {
    if (k < 1 || k > static_cast<int>(xs.size())) throw std::invalid_argument("eta_k index out of range");
    /* eta( x_k^{-1} * bar(x_{k-1}^{-1} ... x_1^{-1} g) ) */
    int inner = rest(g, xs, k - 1);
    return t_.eta(g_->mul(g_->inv(xs[k - 1]), inner));
}

std::vector<int> TransversalMaps::tau(int g, const std::vector<int>& xs) const {
    std::vector<int> out;
    for (int k = 1; k <= static_cast<int>(xs.size()); ++k) out.push_back(eta_k(g, xs, k));
    return out;
}

std::vector<int> TransversalMaps::sigma(int g, const std::vector<int>& xs, int i) const {
    int n = static_cast<int>(xs.size());
    if (i < 0 || i > n) throw std::invalid_argument("sigma_{n,i} index out of range");
    std::vector<int> out;
    if (i == 0) {
        out.push_back(g_->inv(g));
        out.insert(out.end(), xs.begin(), xs.end());
        return out;
    }
    std::vector<int> head(xs.begin(), xs.begin() + i);
    out = tau(g, head);
    out.push_back(g_->inv(rest(g, xs, i)));
    out.insert(out.end(), xs.begin() + i, xs.end());
    return out;
}

} // namespace parcoh
