#include "parcoh/classical.hpp"

namespace parcoh {

GModule::GModule(const GroupTable& g, Field f, std::vector<Matrix> gen)
    : g_(&g), field_(f), gen_(std::move(gen)) {
    if (static_cast<int>(gen_.size()) != g.order())
        throw std::invalid_argument("need one matrix per group element");
    dim_ = gen_.empty() ? 0 : gen_[0].rows();
    for (const auto& m : gen_)
        if (m.rows() != dim_ || m.cols() != dim_ || m.field() != f)
            throw std::invalid_argument("module matrices must be square over one field");
}

ValidationIssue GModule::validate() const {
    if (!gen_[0].is_identity()) return {"beta_1 is not the identity"};
    int n = g_->order();
    for (int g = 0; g < n; ++g) {
        if (rref(gen_[g]).rank() != dim_) return {"beta_g not invertible at g=" + std::to_string(g)};
        for (int h = 0; h < n; ++h)
            if (!(gen_[g] * gen_[h] == gen_[g_->mul(g, h)]))
                return {"beta_g beta_h != beta_{gh} at (g=" + std::to_string(g) + ", h=" + std::to_string(h) + ")"};
    }
    return {};
}

Matrix bar_coboundary_matrix(const GModule& m, int n) {
    const GroupTable& G = m.group();
    int d = m.dim();
    TupleIndexer src(G.order(), n), dst(G.order(), n + 1);
    Matrix delta(m.field(), static_cast<int>(dst.count()) * d, static_cast<int>(src.count()) * d);
    Scalar one = Scalar::one(m.field());
    for (long long ti = 0; ti < dst.count(); ++ti) {
        std::vector<int> t = dst.tuple(ti);
        long long row0 = ti * d;
        /* beta_{g_1} f(g_2..g_{n+1}) */
        long long s = src.index(std::vector<int>(t.begin() + 1, t.end()));
        const Matrix& b = m.beta(t[0]);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (!b.at(r, c).is_zero()) delta.at(static_cast<int>(row0) + r, static_cast<int>(s * d) + c) += b.at(r, c);
        /* (-1)^i f(g_1,..,g_i g_{i+1},..) */
        int sign = 1;
        for (int i = 1; i <= n; ++i) {
            sign = -sign;
            std::vector<int> glued;
            for (int j = 0; j < i - 1; ++j) glued.push_back(t[j]);
            glued.push_back(G.mul(t[i - 1], t[i]));
            for (int j = i + 1; j <= n; ++j) glued.push_back(t[j]);
            long long gi = src.index(glued);
            for (int r = 0; r < d; ++r)
                delta.at(static_cast<int>(row0) + r, static_cast<int>(gi * d) + r) += sign > 0 ? one : -one;
        }
        /* (-1)^{n+1} f(g_1..g_n) */
        sign = -sign;
        long long li = src.index(std::vector<int>(t.begin(), t.end() - 1));
        for (int r = 0; r < d; ++r)
            delta.at(static_cast<int>(row0) + r, static_cast<int>(li * d) + r) += sign > 0 ? one : -one;
    }
    return delta;
}

BarCochain bar_coboundary_apply(const GModule& m, const BarCochain& f) {
    const GroupTable& G = m.group();
    TupleIndexer src(G.order(), f.n), dst(G.order(), f.n + 1);
    BarCochain out{f.n + 1, {}};
    for (long long ti = 0; ti < dst.count(); ++ti) {
        std::vector<int> t = dst.tuple(ti);
        Vec v = m.beta(t[0]).apply(f.values[src.index(std::vector<int>(t.begin() + 1, t.end()))]);
        int sign = 1;
        for (int i = 1; i <= f.n; ++i) {
            sign = -sign;
            std::vector<int> glued;
            for (int j = 0; j < i - 1; ++j) glued.push_back(t[j]);
            glued.push_back(G.mul(t[i - 1], t[i]));
            for (int j = i + 1; j <= f.n; ++j) glued.push_back(t[j]);
            vec_acc(v, Scalar(m.field(), sign), f.values[src.index(glued)]);
        }
        sign = -sign;
        vec_acc(v, Scalar(m.field(), sign), f.values[src.index(std::vector<int>(t.begin(), t.end() - 1))]);
        out.values.push_back(std::move(v));
    }
    return out;
}

BarCohomologyResult classical_cohomology(const GModule& m, int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    BarCohomologyResult r;
    r.n = n;
    TupleIndexer src(m.group().order(), n);
    int d = m.dim();
    r.cochain_dim = static_cast<int>(src.count()) * d;
    r.cocycles = kernel(bar_coboundary_matrix(m, n));
    r.cocycle_dim = r.cocycles.dim();
    if (n == 0) {
        r.coboundaries = Subspace(m.field(), r.cochain_dim);
    } else {
        r.coboundaries = image(bar_coboundary_matrix(m, n - 1));
    }
    r.coboundary_dim = r.coboundaries.dim();
    r.h_dim = quotient_dim(r.cocycles, r.coboundaries);
    Subspace accum = r.coboundaries;
    for (const auto& z : r.cocycles.basis()) {
        if (accum.contains(z)) continue;
        accum = accum.sum(Subspace::span(m.field(), r.cochain_dim, {z}));
        BarCochain rep{n, {}};
        for (long long t = 0; t < src.count(); ++t)
            rep.values.push_back(Vec(z.begin() + t * d, z.begin() + (t + 1) * d));
        r.representatives.push_back(std::move(rep));
    }
    if (static_cast<int>(r.representatives.size()) != r.h_dim)
        throw std::logic_error("representative extraction disagrees with quotient dimension");
    return r;
}

} // namespace parcoh
