#include "parcoh/module.hpp"

#include <algorithm>
#include <set>

namespace parcoh {

KParModule::KParModule(const GroupTable& g, Field f, std::vector<Matrix> gen)
    : g_(&g), field_(f), gen_(std::move(gen)) {
    if (static_cast<int>(gen_.size()) != g.order())
        throw std::invalid_argument("need one generator matrix per group element");
    dim_ = gen_.empty() ? 0 : gen_[0].rows();
    for (const auto& m : gen_)
        if (m.rows() != dim_ || m.cols() != dim_ || m.field() != f)
            throw std::invalid_argument("generator matrices must be square over one field");
    idem_cache_.resize(g.order());
}

KParModule KParModule::induced(const PartialActionSpec& spec) {
    const GroupTable& G = *spec.group;
    const BlockAlgebra& A = spec.algebra;
    std::vector<Matrix> gen;
    for (int g = 0; g < G.order(); ++g) {
        Matrix m(A.field, A.dim, A.dim);
        for (int b : spec.domain[G.inv(g)]) {
            int t = spec.block_map[g][b];
            const Matrix& blk = spec.matrix_map[g].at(b);
            for (int i = 0; i < blk.rows(); ++i)
                for (int j = 0; j < blk.cols(); ++j)
                    m.at(A.offsets[t] + i, A.offsets[b] + j) = blk.at(i, j);
        }
        gen.push_back(std::move(m));
    }
    return KParModule(G, A.field, std::move(gen));
}

KParModule KParModule::conjugation(const ExelSemigroup& s, Field f) {
    auto idems = s.idempotents();
    std::map<std::uint64_t, int> pos;
    for (int i = 0; i < static_cast<int>(idems.size()); ++i) pos[idems[i].idem] = i;
    int d = static_cast<int>(idems.size());
    std::vector<Matrix> gen;
    for (int g = 0; g < s.group().order(); ++g) {
        Matrix m(f, d, d);
        for (int j = 0; j < d; ++j) {
            ExelElement image = s.conj(s.generator(g), idems[j]);
            m.at(pos.at(image.idem), j) = Scalar::one(f);
        }
        gen.push_back(std::move(m));
    }
    return KParModule(s.group(), f, std::move(gen));
}

const Matrix& KParModule::idem(int g) const {
    if (!idem_cache_[g]) idem_cache_[g] = gen_[g] * gen_[g_->inv(g)];
    return *idem_cache_[g];
}

Matrix KParModule::tuple_idem(const std::vector<int>& tuple) const {
    Matrix m = Matrix::identity(field_, dim_);
    int prefix = 0;
    for (int g : tuple) {
        prefix = g_->mul(prefix, g);
        m = m * idem(prefix);
    }
    return m;
}

Vec KParModule::act(const ExelElement& s, const Vec& v) const {
    Vec out = gen_[s.tail].apply(v);
    std::uint64_t hs = s.idem;
    while (hs) {
        int h = std::countr_zero(hs);
        hs &= hs - 1;
        out = idem(h).apply(out);
    }
    return out;
}

ValidationIssue KParModule::validate() const {
    int n = g_->order();
    if (!gen_[0].is_identity()) return {"pi_1 is not the identity"};
    for (int g = 0; g < n; ++g) {
        int gi = g_->inv(g);
        for (int h = 0; h < n; ++h) {
            if (!(gen_[gi] * gen_[g] * gen_[h] == gen_[gi] * gen_[g_->mul(g, h)]))
                return {"pi_{g^-1} pi_g pi_h != pi_{g^-1} pi_{gh} at (g=" + std::to_string(g) +
                        ", h=" + std::to_string(h) + ")"};
            int hi = g_->inv(h);
            if (!(gen_[g] * gen_[h] * gen_[hi] == gen_[g_->mul(g, h)] * gen_[hi]))
                return {"pi_g pi_h pi_{h^-1} != pi_{gh} pi_{h^-1} at (g=" + std::to_string(g) +
                        ", h=" + std::to_string(h) + ")"};
        }
    }
    return {};
}

CochainSpace::CochainSpace(const KParModule& m, int n)
    : m_(&m), n_(n), indexer_(m.group().order(), n), dim_(0) {
    for (long long t = 0; t < indexer_.count(); ++t) {
        offsets_.push_back(dim_);
        Subspace s = image(m.tuple_idem(indexer_.tuple(t)));
        dim_ += s.dim();
        spaces_.push_back(std::move(s));
    }
}

std::vector<Vec> CochainSpace::unpack(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != dim_) throw std::logic_error("cochain coordinate length mismatch");
    std::vector<Vec> values;
    for (long long t = 0; t < indexer_.count(); ++t) {
        Vec c(coords.begin() + offsets_[t], coords.begin() + offsets_[t] + spaces_[t].dim());
        values.push_back(spaces_[t].from_coordinates(c));
    }
    return values;
}

std::optional<Vec> CochainSpace::pack(const std::vector<Vec>& values) const {
    if (static_cast<long long>(values.size()) != indexer_.count())
        throw std::logic_error("cochain value table length mismatch");
    Vec coords = vec_zero(m_->field(), dim_);
    for (long long t = 0; t < indexer_.count(); ++t) {
        auto c = spaces_[t].coordinates(values[t]);
        if (!c) return std::nullopt;
        for (int i = 0; i < spaces_[t].dim(); ++i) coords[offsets_[t] + i] = (*c)[i];
    }
    return coords;
}

PartialCochain coboundary_apply(const KParModule& m, const PartialCochain& f) {
    const GroupTable& G = m.group();
    int n = f.n;
    TupleIndexer src(G.order(), n), dst(G.order(), n + 1);
    PartialCochain out{n + 1, {}};
    out.values.reserve(dst.count());
    for (long long ti = 0; ti < dst.count(); ++ti) {
        std::vector<int> t = dst.tuple(ti);
        /* [g_1] f(g_2..g_{n+1}) */
        Vec v = m.pi(t[0]).apply(f.values[src.index(std::vector<int>(t.begin() + 1, t.end()))]);
        /* (-1)^i e_{g_1...g_i} f(g_1,..., g_i g_{i+1}, ...) */
        int prefix = 0, sign = 1;
        for (int i = 1; i <= n; ++i) {
            prefix = G.mul(prefix, t[i - 1]);
            sign = -sign;
            std::vector<int> glued;
            glued.reserve(n);
            for (int j = 0; j < i - 1; ++j) glued.push_back(t[j]);
            glued.push_back(G.mul(t[i - 1], t[i]));
            for (int j = i + 1; j <= n; ++j) glued.push_back(t[j]);
            Vec term = m.idem(prefix).apply(f.values[src.index(glued)]);
            vec_acc(v, Scalar(m.field(), sign), term);
        }
        /* (-1)^{n+1} e_{g_1...g_{n+1}} f(g_1..g_n) */
        prefix = G.mul(prefix, t[n]);
        sign = -sign;
        Vec last = m.idem(prefix).apply(f.values[src.index(std::vector<int>(t.begin(), t.end() - 1))]);
        vec_acc(v, Scalar(m.field(), sign), last);
        out.values.push_back(std::move(v));
    }
    return out;
}

Matrix coboundary_matrix(const KParModule& m, const CochainSpace& cn, const CochainSpace& cn1) {
    const GroupTable& G = m.group();
    int n = cn.degree();
    if (cn1.degree() != n + 1) throw std::logic_error("coboundary spaces out of step");
    Matrix delta(m.field(), cn1.dim(), cn.dim());
    auto accumulate = [&](long long target, const std::vector<int>& source, const Matrix& op, int sign,
                          const std::vector<int>& target_tuple) {
        long long s = cn.indexer().index(source);
        const Subspace& ss = cn.tuple_space(s);
        const Subspace& ts = cn1.tuple_space(target);
        for (int j = 0; j < ss.dim(); ++j) {
            Vec v = op.apply(ss.basis()[j]);
            auto c = ts.coordinates(v);
            if (!c) {
                std::string t;
                for (int g : target_tuple) t += (t.empty() ? "" : ",") + G.name(g);
                throw std::logic_error("coboundary image escapes the cochain constraint at (" + t + ")");
            }
            for (int i = 0; i < ts.dim(); ++i) {
                Scalar x = sign > 0 ? (*c)[i] : -(*c)[i];
                delta.at(cn1.offset(target) + i, cn.offset(s) + j) += x;
            }
        }
    };
    for (long long ti = 0; ti < cn1.indexer().count(); ++ti) {
        std::vector<int> t = cn1.indexer().tuple(ti);
        accumulate(ti, std::vector<int>(t.begin() + 1, t.end()), m.pi(t[0]), 1, t);
        int prefix = 0, sign = 1;
        for (int i = 1; i <= n; ++i) {
            prefix = G.mul(prefix, t[i - 1]);
            sign = -sign;
            std::vector<int> glued;
            for (int j = 0; j < i - 1; ++j) glued.push_back(t[j]);
            glued.push_back(G.mul(t[i - 1], t[i]));
            for (int j = i + 1; j <= n; ++j) glued.push_back(t[j]);
            accumulate(ti, glued, m.idem(prefix), sign, t);
        }
        prefix = G.mul(prefix, t[n]);
        sign = -sign;
        accumulate(ti, std::vector<int>(t.begin(), t.end() - 1), m.idem(prefix), sign, t);
    }
    return delta;
}

CohomologyResult cohomology(const KParModule& m, int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    CochainSpace cn(m, n), cn1(m, n + 1);
    CohomologyResult r;
    r.n = n;
    r.cochain_dim = cn.dim();
    Matrix dn = coboundary_matrix(m, cn, cn1);
    r.cocycles = kernel(dn);
    r.cocycle_dim = r.cocycles.dim();
    if (n == 0) {
        r.coboundaries = Subspace(m.field(), cn.dim());
    } else {
        CochainSpace cm(m, n - 1);
        r.coboundaries = image(coboundary_matrix(m, cm, cn));
    }
    r.coboundary_dim = r.coboundaries.dim();
    r.h_dim = quotient_dim(r.cocycles, r.coboundaries);
    /* representatives: cocycle basis vectors independent modulo coboundaries */
    Subspace accum = r.coboundaries;
    for (const auto& z : r.cocycles.basis()) {
        if (accum.contains(z)) continue;
        accum = accum.sum(Subspace::span(m.field(), cn.dim(), {z}));
        r.representatives.push_back(PartialCochain{n, cn.unpack(z)});
    }
    if (static_cast<int>(r.representatives.size()) != r.h_dim)
        throw std::logic_error("representative extraction disagrees with quotient dimension");
    return r;
}

H0Comparison h0_comparison(const PartialActionSpec& spec, long long enumeration_guard) {
    Field f = spec.algebra.field;
    if (!f.is_prime_field())
        throw std::invalid_argument("h0 unit comparison enumerates a finite field");
    KParModule m = KParModule::induced(spec);
    CochainSpace c0(m, 0), c1(m, 1);
    Subspace z0 = kernel(coboundary_matrix(m, c0, c1));
    H0Comparison out;
    out.h0_dim = z0.dim();
    long long size = 1;
    for (int i = 0; i < z0.dim(); ++i) {
        size *= f.p;
        if (size > enumeration_guard) throw std::invalid_argument("H^0 subalgebra too large to enumerate");
    }
    out.subalgebra_size = size;
    out.contains_unit = z0.contains(spec.algebra.unit());
    out.closed_under_product = true;
    for (const auto& u : z0.basis())
        for (const auto& v : z0.basis())
            if (!z0.contains(vec_mul(u, v))) out.closed_under_product = false;
    /* enumerate H^0_par and compare unit sets */
    out.units_match = true;
    std::vector<int> digits(z0.dim(), 0);
    for (long long k = 0; k < size; ++k) {
        Vec coords = vec_zero(f, z0.dim());
        long long rest = k;
        for (int i = 0; i < z0.dim(); ++i) {
            coords[i] = Scalar(f, rest % f.p);
            rest /= f.p;
        }
        Vec a = z0.from_coordinates(coords);
        bool invertible_in_A = true;
        for (const auto& x : a)
            if (x.is_zero()) invertible_in_A = false;
        if (!invertible_in_A) continue;
        Vec inv(a);
        for (auto& x : inv) x = x.inverse();
        bool unit_of_subalgebra = z0.contains(inv);
        /* a is a DK fixed unit by construction (a in Z^0, a in U(A)); the
           proposition says it must then be a unit of the subalgebra */
        if (unit_of_subalgebra) ++out.unit_count;
        else out.units_match = false;
    }
    return out;
}

DerivationSpaces derivation_spaces(const KParModule& m) {
    const GroupTable& G = m.group();
    Field f = m.field();
    int n = G.order(), d = m.dim();
    DerivationSpaces out;
    /* D(G,M): unknowns (g, coord), constraints e_g d(gh) = [g] d(h) + e_{gh} d(g) */
    {
        RowReducer red(f, n * d);
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                int gh = G.mul(g, h);
                const Matrix &eg = m.idem(g), &egh = m.idem(gh), &pg = m.pi(g);
                for (int r = 0; r < d; ++r) {
                    std::vector<std::pair<int, Scalar>> row;
                    for (int c = 0; c < d; ++c) {
                        if (!eg.at(r, c).is_zero()) row.emplace_back(gh * d + c, eg.at(r, c));
                        if (!pg.at(r, c).is_zero()) row.emplace_back(h * d + c, -pg.at(r, c));
                        if (!egh.at(r, c).is_zero()) row.emplace_back(g * d + c, -egh.at(r, c));
                    }
                    red.add_sparse_row(row);
                }
            }
        out.d_dim = n * d - red.rank();
    }
    /* PD(G,M): image of m -> ([g]m - e_g m)_g */
    {
        Matrix delta0(f, n * d, d);
        for (int g = 0; g < n; ++g) {
            Matrix blk = m.pi(g) - m.idem(g);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) delta0.at(g * d + r, c) = blk.at(r, c);
        }
        out.pd_dim = image(delta0).dim();
    }
    /* Der(K_par G, M): Leibniz over all pairs of semigroup elements */
    {
        ExelSemigroup S(G);
        int N = S.size();
        std::vector<Matrix> act;
        act.reserve(N);
        for (const auto& s : S.elements()) {
            Matrix a = m.pi(s.tail);
            std::uint64_t hs = s.idem;
            while (hs) {
                int h = std::countr_zero(hs);
                hs &= hs - 1;
                a = m.idem(h) * a;
            }
            act.push_back(std::move(a));
        }
        /* collect rows sparsely, dedupe, then reduce */
        std::set<std::vector<std::pair<int, std::string>>> seen;
        RowReducer red(f, N * d);
        for (int si = 0; si < N && !red.full_rank(); ++si)
            for (int ti = 0; ti < N && !red.full_rank(); ++ti) {
                const ExelElement &s = S.elements()[si], &t = S.elements()[ti];
                int sti = S.index_of(S.multiply(s, t));
                int ei = S.index_of(S.epsilon(S.multiply(s, t)));
                const Matrix& as = act[si];
                const Matrix& ae = act[ei];
                for (int r = 0; r < d; ++r) {
                    std::map<int, Scalar> entries;
                    auto put = [&](int col, const Scalar& v) {
                        auto [it, fresh] = entries.emplace(col, v);
                        if (!fresh) it->second += v;
                    };
                    put(sti * d + r, Scalar::one(f));
                    for (int c = 0; c < d; ++c) {
                        if (!as.at(r, c).is_zero()) put(ti * d + c, -as.at(r, c));
                        if (!ae.at(r, c).is_zero()) put(si * d + c, -ae.at(r, c));
                    }
                    std::vector<std::pair<int, std::string>> key;
                    std::vector<std::pair<int, Scalar>> row;
                    for (const auto& [col, v] : entries) {
                        if (v.is_zero()) continue;
                        key.emplace_back(col, v.to_string());
                        row.emplace_back(col, v);
                    }
                    if (row.empty() || !seen.insert(key).second) continue;
                    red.add_sparse_row(row);
                }
            }
        out.der_dim = N * d - red.rank();
    }
    out.h1_dim = cohomology(m, 1).h_dim;
    return out;
}

} // namespace parcoh
