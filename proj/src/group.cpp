#include "parcoh/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace parcoh {

static std::string triple_msg(const char* what, int a, int b, int c) {
    return std::string("group table invalid: ") + what + " fails at (" + std::to_string(a) + "," +
           std::to_string(b) + "," + std::to_string(c) + ")";
}

GroupTable GroupTable::from_table(std::vector<std::vector<int>> mul, std::vector<std::string> names) {
    int n = static_cast<int>(mul.size());
    if (n == 0) throw std::invalid_argument("group table invalid: empty");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("group table invalid: not square");
        for (int x : row)
            if (x < 0 || x >= n) throw std::invalid_argument("group table invalid: entry out of range");
    }
    /* locate the (unique) two-sided identity */
    int e = -1;
    for (int c = 0; c < n; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul[c][a] == a && mul[a][c] == a;
        if (ok) { e = c; break; }
    }
    if (e < 0) throw std::invalid_argument("group table invalid: no identity element");
    if (e != 0) { /* normalize: relabel by the transposition 0 <-> e */
        auto relabel = [&](int x) { return x == 0 ? e : x == e ? 0 : x; };
        std::vector<std::vector<int>> m2(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) m2[relabel(a)][relabel(b)] = relabel(mul[a][b]);
        mul = std::move(m2);
        if (!names.empty()) std::swap(names[0], names[static_cast<std::size_t>(e)]);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::invalid_argument(triple_msg("associativity", a, b, c));
    GroupTable g;
    g.n_ = n;
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == 0 && mul[b][a] == 0) g.inv_[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inv_[a] < 0)
            throw std::invalid_argument("group table invalid: element " + std::to_string(a) + " has no inverse");
    g.mul_ = std::move(mul);
    if (names.empty()) {
        for (int a = 0; a < n; ++a) g.names_.push_back("g" + std::to_string(a));
        g.names_[0] = "1";
    } else {
        if (static_cast<int>(names.size()) != n)
            throw std::invalid_argument("group table invalid: names length mismatch");
        g.names_ = std::move(names);
    }
    return g;
}

GroupTable GroupTable::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic(n) needs n >= 1");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "1" : a == 1 ? "r" : "r" + std::to_string(a));
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    }
    GroupTable g = from_table(std::move(mul), std::move(names));
    g.description_ = "cyclic(" + std::to_string(n) + ")";
    return g;
}

GroupTable GroupTable::dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral(n) needs n >= 1");
    int N = 2 * n;
    /* indices: i<n is r^i, n+i is s r^i; relations r^n = s^2 = 1, r s = s r^{-1} */
    auto idx = [&](int flip, int rot) { return flip * n + ((rot % n) + n) % n; };
    std::vector<std::vector<int>> mul(N, std::vector<int>(N));
    std::vector<std::string> names;
    for (int f = 0; f < 2; ++f)
        for (int r = 0; r < n; ++r)
            names.push_back((f ? "s" : std::string()) + (r ? (f ? "*" : "") + std::string("r") + (r > 1 ? std::to_string(r) : "") : (f ? "" : "1")));
    for (int f1 = 0; f1 < 2; ++f1)
        for (int r1 = 0; r1 < n; ++r1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int r2 = 0; r2 < n; ++r2) {
                    /* (s^f1 r^r1)(s^f2 r^r2) = s^{f1+f2} r^{(f2 ? -r1 : r1) + r2} */
                    int rot = (f2 ? -r1 : r1) + r2;
                    mul[idx(f1, r1)][idx(f2, r2)] = idx((f1 + f2) % 2, rot);
                }
    GroupTable g = from_table(std::move(mul), std::move(names));
    g.description_ = "dihedral(" + std::to_string(n) + ")";
    return g;
}

GroupTable GroupTable::symmetric(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("symmetric(n) supported for 1 <= n <= 6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
    int N = static_cast<int>(perms.size());
    std::vector<std::vector<int>> mul(N, std::vector<int>(N));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            std::vector<int> ab(n); /* (a*b)(x) = a(b(x)) */
            for (int x = 0; x < n; ++x) ab[x] = perms[a][perms[b][x]];
            mul[a][b] = index[ab];
        }
    std::vector<std::string> names;
    for (const auto& q : perms) {
        std::string s = "(";
        for (int i = 0; i < n; ++i) s += std::to_string(q[i] + 1);
        names.push_back(s + ")");
    }
    GroupTable g = from_table(std::move(mul), std::move(names));
    g.description_ = "symmetric(" + std::to_string(n) + ")";
    return g;
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
    int N = a.order() * b.order();
    auto idx = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::vector<int>> mul(N, std::vector<int>(N));
    std::vector<std::string> names;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < b.order(); ++y) names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    mul[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    GroupTable g = from_table(std::move(mul), std::move(names));
    g.description_ = "product(" + a.description_ + "," + b.description_ + ")";
    return g;
}

GroupTable GroupTable::named(const std::string& family) {
    auto open = family.find('(');
    if (open == std::string::npos || family.back() != ')')
        throw std::invalid_argument("unknown group family '" + family + "'");
    std::string head = family.substr(0, open);
    std::string args = family.substr(open + 1, family.size() - open - 2);
    if (head == "product") {
        int depth = 0;
        std::size_t comma = std::string::npos;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (args[i] == '(') ++depth;
            else if (args[i] == ')') --depth;
            else if (args[i] == ',' && depth == 0) { comma = i; break; }
        }
        if (comma == std::string::npos)
            throw std::invalid_argument("product(...) needs two factors in '" + family + "'");
        return product(named(args.substr(0, comma)), named(args.substr(comma + 1)));
    }
    int n = std::stoi(args);
    if (head == "cyclic") return cyclic(n);
    if (head == "dihedral") return dihedral(n);
    if (head == "symmetric") return symmetric(n);
    throw std::invalid_argument("unknown group family '" + family + "'");
}

int GroupTable::word(const std::vector<int>& w) const {
    int x = 0;
    for (int g : w) x = mul(x, g);
    return x;
}

Subgroup::Subgroup(const GroupTable& g, std::vector<int> members) : g_(&g), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty() || members_[0] != 0)
        throw std::invalid_argument("subgroup must contain the identity");
    for (int x : members_) {
        if (x < 0 || x >= g.order()) throw std::invalid_argument("subgroup member out of range");
        if (!std::binary_search(members_.begin(), members_.end(), g.inv(x)))
            throw std::invalid_argument("subgroup not closed under inverse at " + std::to_string(x));
        for (int y : members_)
            if (!std::binary_search(members_.begin(), members_.end(), g.mul(x, y)))
                throw std::invalid_argument("subgroup not closed under product at (" + std::to_string(x) +
                                            "," + std::to_string(y) + ")");
    }
}

Subgroup Subgroup::trivial(const GroupTable& g) { return Subgroup(g, {0}); }

Subgroup Subgroup::whole(const GroupTable& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(g, std::move(all));
}

Subgroup Subgroup::generated(const GroupTable& g, const std::vector<int>& gens) {
    std::set<int> seen{0};
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int s : gens)
            for (int y : {g.mul(x, s), g.mul(x, g.inv(s))})
                if (seen.insert(y).second) frontier.push_back(y);
    }
    return Subgroup(g, std::vector<int>(seen.begin(), seen.end()));
}

bool Subgroup::contains(int x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

Transversal::Transversal(const Subgroup& h, bool permuted) : h_(h) {
    const GroupTable& g = h.group();
    coset_index_.assign(g.order(), -1);
    for (int x = 0; x < g.order(); ++x) {
        if (coset_index_[x] >= 0) continue;
        /* coset xH, scanned in element order so the first member is minimal */
        std::vector<int> coset;
        for (int m : h.members()) coset.push_back(g.mul(x, m));
        std::sort(coset.begin(), coset.end());
        int rep = coset.front();
        if (permuted && rep != 0) rep = coset.back(); /* keep 1 representing H itself */
        int ci = static_cast<int>(reps_.size());
        reps_.push_back(rep);
        for (int y : coset) coset_index_[y] = ci;
    }
    /* the identity's coset is found first, so reps_[0] represents H */
    if (reps_[0] == 0) return;
    throw std::logic_error("transversal does not represent H by the identity");
}

int Transversal::eta(int x) const {
    const GroupTable& g = h_.group();
    int e = g.mul(g.inv(x), bar(x));
    if (!h_.contains(e)) throw std::logic_error("eta(x) escaped the subgroup");
    return e;
}

TupleIndexer::TupleIndexer(int order, int n) : order_(order), n_(n) {
    if (order < 1 || n < 0) throw std::invalid_argument("bad tuple space");
    count_ = 1;
    for (int i = 0; i < n; ++i) {
        count_ *= order;
        if (count_ > (1LL << 40)) throw std::invalid_argument("tuple space too large");
    }
}

long long TupleIndexer::index(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != n_) throw std::invalid_argument("tuple arity mismatch");
    long long ix = 0;
    for (int g : tuple) {
        if (g < 0 || g >= order_) throw std::invalid_argument("tuple entry out of range");
        ix = ix * order_ + g;
    }
    return ix;
}

std::vector<int> TupleIndexer::tuple(long long index) const {
    std::vector<int> t(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        t[i] = static_cast<int>(index % order_);
        index /= order_;
    }
    return t;
}

} // namespace parcoh
