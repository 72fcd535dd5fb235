#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parcoh {

/* Finite group as a validated multiplication table. Elements are 0-based
   indices; the identity is always index 0. */
class GroupTable {
public:
    /* validates associativity/identity/inverses; relabels so identity = 0 */
    static GroupTable from_table(std::vector<std::vector<int>> mul,
                                 std::vector<std::string> names = {});
    static GroupTable cyclic(int n);
    static GroupTable dihedral(int n);   /* order 2n: r^i at i<n, s*r^i at n+i */
    static GroupTable symmetric(int n);  /* order n!, one-line words in lex order */
    static GroupTable product(const GroupTable& a, const GroupTable& b);
    /* "cyclic(4)", "dihedral(3)", "symmetric(3)", "product(cyclic(2),cyclic(2))" */
    static GroupTable named(const std::string& family);

    int order() const { return n_; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string& name(int a) const { return names_[a]; }
    const std::string& description() const { return description_; }

    /* product g1*g2*...*gk of a word, identity for the empty word */
    int word(const std::vector<int>& w) const;

    bool operator==(const GroupTable& o) const { return mul_ == o.mul_; }

private:
    GroupTable() = default;
    int n_ = 0;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::string description_ = "explicit";
};

/* Subgroup as a sorted member list; closure is validated. */
class Subgroup {
public:
    Subgroup(const GroupTable& g, std::vector<int> members);
    static Subgroup trivial(const GroupTable& g);
    static Subgroup whole(const GroupTable& g);
    static Subgroup generated(const GroupTable& g, const std::vector<int>& gens);

    const GroupTable& group() const { return *g_; }
    const std::vector<int>& members() const { return members_; }
    int order() const { return static_cast<int>(members_.size()); }
    bool contains(int x) const;

private:
    const GroupTable* g_;
    std::vector<int> members_;
};

/* Left transversal of H in G: one representative per coset gH, the coset of
   the identity represented by the identity. The default rule picks the
   minimal element index in each coset; `permuted` keeps 1 for H itself and
   the maximal index elsewhere (used to probe representative-independence). */
class Transversal {
public:
    Transversal(const Subgroup& h, bool permuted = false);

    const Subgroup& subgroup() const { return h_; }
    const std::vector<int>& reps() const { return reps_; }
    int coset_of(int x) const { return coset_index_[x]; } /* index into reps */
    int bar(int x) const { return reps_[coset_index_[x]]; } /* rep of xH */
    /* eta(x) = x^{-1} * bar(x), lies in H and satisfies x*eta(x) = bar(x) */
    int eta(int x) const;

private:
    Subgroup h_; /* owned: keeps the object freely movable */
    std::vector<int> reps_;
    std::vector<int> coset_index_;
};

/* Row-major index of tuples (g_1..g_n) in G^n; g_1 is most significant. */
class TupleIndexer {
public:
    TupleIndexer(int order, int n);
    int order() const { return order_; }
    int arity() const { return n_; }
    long long count() const { return count_; }
    long long index(const std::vector<int>& tuple) const;
    std::vector<int> tuple(long long index) const;

private:
    int order_, n_;
    long long count_;
};

} // namespace parcoh
