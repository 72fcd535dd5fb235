#include "parcoh/resolution.hpp"

namespace parcoh {

std::size_t Resolution::KeyHash::operator()(const std::pair<ExelElement, std::vector<int>>& k) const {
    std::size_t h = ExelElementHash()(k.first);
    for (int g : k.second) h = h * 1000003u + static_cast<std::size_t>(g) + 1;
    return h;
}

Resolution::Resolution(const GroupTable& g, Field f, int levels, long long basis_guard)
    : sg_(g), field_(f), levels_(levels) {
    if (levels < 0) throw std::invalid_argument("resolution needs at least level 0");
    idems_ = sg_.idempotents();
    for (int i = 0; i < static_cast<int>(idems_.size()); ++i) idem_index_[idems_[i].idem] = i;
    long long total = static_cast<long long>(idems_.size());
    for (int n = 0; n <= levels; ++n) {
        TupleIndexer ix(g.order(), n);
        std::vector<BasisElement> level;
        std::unordered_map<std::pair<ExelElement, std::vector<int>>, int, KeyHash> index;
        for (long long t = 0; t < ix.count(); ++t) {
            std::vector<int> tuple = ix.tuple(t);
            ExelElement e = sg_.tuple_idempotent(tuple);
            for (const auto& s : sg_.elements()) {
                if (sg_.multiply(s, e) != s) continue; /* admissibility: s e_{(tuple)} = s */
                index[{s, tuple}] = static_cast<int>(level.size());
                level.push_back({s, tuple});
            }
        }
        total += static_cast<long long>(level.size());
        if (total > basis_guard)
            throw std::invalid_argument("resolution basis exceeds guard (" + std::to_string(basis_guard) + ")");
        basis_.push_back(std::move(level));
        index_.push_back(std::move(index));
    }
}

int Resolution::basis_size(int n) const {
    if (n == -1) return static_cast<int>(idems_.size());
    return static_cast<int>(basis_[n].size());
}

Resolution::BasisElement Resolution::canonicalize(const ExelElement& s, const std::vector<int>& tuple) const {
    return {sg_.multiply(s, sg_.tuple_idempotent(tuple)), tuple};
}

int Resolution::index_of(int n, const BasisElement& b) const {
    auto it = index_[n].find({b.s, b.tuple});
    if (it == index_[n].end()) throw std::logic_error("basis element missing from resolution level");
    return it->second;
}

static void chain_add(Resolution::Chain& c, int index, const Scalar& v) {
    auto [it, fresh] = c.emplace(index, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

Resolution::Chain Resolution::boundary(int n, int index) const {
    if (n < 0 || n > levels_) throw std::invalid_argument("boundary level out of range");
    const BasisElement& b = basis_[n][index];
    Chain out;
    const GroupTable& G = sg_.group();
    if (n == 0) { /* s() -> s s^{-1} in K E(S(G)) */
        ExelElement e = sg_.epsilon(b.s);
        chain_add(out, idem_index_.at(e.idem), Scalar::one(field_));
        return out;
    }
    /* d(s(g_1..g_n)) = s[g_1](g_2..) + sum (-1)^i s(..g_i g_{i+1}..) + (-1)^n s(g_1..g_{n-1}) */
    {
        ExelElement sg1 = sg_.multiply(b.s, sg_.generator(b.tuple[0]));
        std::vector<int> rest(b.tuple.begin() + 1, b.tuple.end());
        BasisElement t = canonicalize(sg1, rest);
        chain_add(out, index_of(n - 1, t), Scalar::one(field_));
    }
    int sign = 1;
    for (int i = 1; i < n; ++i) {
        sign = -sign;
        std::vector<int> glued;
        for (int j = 0; j < i - 1; ++j) glued.push_back(b.tuple[j]);
        glued.push_back(G.mul(b.tuple[i - 1], b.tuple[i]));
        for (int j = i + 1; j < n; ++j) glued.push_back(b.tuple[j]);
        BasisElement t = canonicalize(b.s, glued);
        chain_add(out, index_of(n - 1, t), Scalar(field_, sign));
    }
    sign = -sign;
    {
        std::vector<int> head(b.tuple.begin(), b.tuple.end() - 1);
        BasisElement t = canonicalize(b.s, head);
        chain_add(out, index_of(n - 1, t), Scalar(field_, sign));
    }
    return out;
}

Resolution::Chain Resolution::homotopy(int n, int index) const {
    Chain out;
    if (n == -1) { /* e -> e() */
        const ExelElement& e = idems_[index];
        BasisElement t = canonicalize(e, {});
        chain_add(out, index_of(0, t), Scalar::one(field_));
        return out;
    }
    if (n < 0 || n >= levels_) throw std::invalid_argument("homotopy level out of range");
    /* s(g..) -> (s s^{-1})(tail(s), g..): well-defined because
       s s^{-1} <= e_{(tail(s), g..)} for admissible s */
    const BasisElement& b = basis_[n][index];
    std::vector<int> tuple{b.s.tail};
    tuple.insert(tuple.end(), b.tuple.begin(), b.tuple.end());
    BasisElement t = canonicalize(sg_.epsilon(b.s), tuple);
    if (!(t.s == sg_.epsilon(b.s)))
        throw std::logic_error("homotopy image not already canonical: admissibility broken");
    chain_add(out, index_of(n + 1, t), Scalar::one(field_));
    return out;
}

ValidationIssue Resolution::certify() const {
    auto compose_boundary = [&](int n, const Chain& c) {
        Chain out;
        for (const auto& [i, v] : c)
            for (const auto& [j, w] : boundary(n, i)) chain_add(out, j, v * w);
        return out;
    };
    /* boundary^2 = 0, including the augmentation boundary_0 boundary_1 */
    for (int n = 1; n <= levels_; ++n)
        for (int i = 0; i < basis_size(n); ++i) {
            Chain c = compose_boundary(n - 1, boundary(n, i));
            if (!c.empty())
                return {"boundary^2 != 0 at level " + std::to_string(n) + ", basis " + std::to_string(i)};
        }
    /* boundary_0 sigma_{-1} = id on K E(S(G)) */
    for (int i = 0; i < basis_size(-1); ++i) {
        Chain h = homotopy(-1, i);
        Chain c;
        for (const auto& [j, v] : h)
            for (const auto& [k, w] : boundary(0, j)) chain_add(c, k, v * w);
        if (c.size() != 1 || c.begin()->first != i || !c.begin()->second.is_one())
            return {"boundary_0 sigma_{-1} != id at idempotent " + std::to_string(i)};
    }
    /* boundary_{n+1} sigma_n + sigma_{n-1} boundary_n = id on P_n, n < levels */
    for (int n = 0; n < levels_; ++n) {
        for (int i = 0; i < basis_size(n); ++i) {
            Chain total;
            for (const auto& [j, v] : homotopy(n, i))
                for (const auto& [k, w] : boundary(n + 1, j)) chain_add(total, k, v * w);
            if (n == 0) {
                /* sigma_{-1} boundary_0 */
                for (const auto& [j, v] : boundary(0, i))
                    for (const auto& [k, w] : homotopy(-1, j)) chain_add(total, k, v * w);
            } else {
                for (const auto& [j, v] : boundary(n, i))
                    for (const auto& [k, w] : homotopy(n - 1, j)) chain_add(total, k, v * w);
            }
            chain_add(total, i, -Scalar::one(field_));
            if (!total.empty())
                return {"homotopy identity fails at level " + std::to_string(n) + ", basis " + std::to_string(i)};
        }
    }
    return {};
}

ValidationIssue Resolution::certify_hom_transport(const KParModule& m, const PartialCochain& f) const {
    if (f.n + 1 > levels_) throw std::invalid_argument("need resolution one level above the cochain degree");
    if (m.field() != field_) throw std::invalid_argument("field mismatch in hom transport");
    const GroupTable& G = sg_.group();
    TupleIndexer ix(G.order(), f.n);
    PartialCochain df = coboundary_apply(m, f);
    TupleIndexer ix1(G.order(), f.n + 1);
    /* phi_f(s(g..)) = s . f(g..) */
    auto phi = [&](const PartialCochain& c, const TupleIndexer& cix, const BasisElement& b) {
        return m.act(b.s, c.values[cix.index(b.tuple)]);
    };
    for (int i = 0; i < basis_size(f.n + 1); ++i) {
        const BasisElement& b = basis_[f.n + 1][i];
        Vec lhs = phi(df, ix1, b);
        Vec rhs = vec_zero(m.field(), m.dim());
        for (const auto& [j, v] : boundary(f.n + 1, i))
            vec_acc(rhs, v, phi(f, ix, basis_[f.n][j]));
        if (!(lhs == rhs))
            return {"hom transport fails at level " + std::to_string(f.n + 1) + ", basis " + std::to_string(i)};
    }
    return {};
}

} // namespace parcoh
