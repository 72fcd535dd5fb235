#include "parcoh/corpus.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace parcoh {

PartialActionSpec trivial_action(const GroupTable& g, Field f, const std::vector<int>& dims) {
    PartialActionSpec spec;
    spec.group = &g;
    spec.algebra = BlockAlgebra(f, dims);
    int nb = spec.algebra.blocks();
    std::vector<int> all(static_cast<std::size_t>(nb));
    std::iota(all.begin(), all.end(), 0);
    spec.domain.assign(g.order(), all);
    spec.block_map.assign(g.order(), std::vector<int>(nb, -1));
    spec.matrix_map.assign(g.order(), {});
    for (int x = 0; x < g.order(); ++x)
        for (int b = 0; b < nb; ++b) {
            spec.block_map[x][b] = b;
            spec.matrix_map[x].emplace(b, Matrix::identity(f, dims[b]));
        }
    return spec;
}

PartialActionSpec regular_global(const GroupTable& g, Field f) {
    PartialActionSpec spec;
    spec.group = &g;
    spec.algebra = BlockAlgebra(f, std::vector<int>(static_cast<std::size_t>(g.order()), 1));
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    spec.domain.assign(g.order(), all);
    spec.block_map.assign(g.order(), std::vector<int>(g.order(), -1));
    spec.matrix_map.assign(g.order(), {});
    for (int x = 0; x < g.order(); ++x)
        for (int h = 0; h < g.order(); ++h) {
            spec.block_map[x][h] = g.mul(x, h);
            spec.matrix_map[x].emplace(h, Matrix::identity(f, 1));
        }
    return spec;
}

PartialActionSpec empty_domains(const GroupTable& g, Field f, int dim) {
    PartialActionSpec spec;
    spec.group = &g;
    spec.algebra = BlockAlgebra(f, {dim});
    spec.domain.assign(g.order(), {});
    spec.domain[0] = {0};
    spec.block_map.assign(g.order(), std::vector<int>(1, -1));
    spec.block_map[0][0] = 0;
    spec.matrix_map.assign(g.order(), {});
    spec.matrix_map[0].emplace(0, Matrix::identity(f, dim));
    return spec;
}

PartialActionSpec scaled_swap(const GroupTable& z2, Field f, const Scalar& c) {
    if (z2.order() != 2) throw std::invalid_argument("scaled_swap needs an order-2 group");
    PartialActionSpec spec;
    spec.group = &z2;
    spec.algebra = BlockAlgebra(f, {1, 1});
    spec.domain.assign(2, {0, 1});
    spec.block_map = {{0, 1}, {1, 0}};
    spec.matrix_map.assign(2, {});
    spec.matrix_map[0].emplace(0, Matrix::identity(f, 1));
    spec.matrix_map[0].emplace(1, Matrix::identity(f, 1));
    Matrix up(f, 1, 1), down(f, 1, 1);
    up.at(0, 0) = c;
    down.at(0, 0) = c.inverse();
    spec.matrix_map[1].emplace(0, up);   /* block 0 -> block 1, scaled by c */
    spec.matrix_map[1].emplace(1, down); /* block 1 -> block 0, scaled by 1/c */
    return spec;
}

PartialActionSpec direct_sum(const PartialActionSpec& a, const PartialActionSpec& b) {
    if (a.group != b.group) throw std::invalid_argument("direct_sum needs a common group");
    if (!(a.algebra.field == b.algebra.field))
        throw std::invalid_argument("direct_sum needs a common field");
    const GroupTable& g = *a.group;
    PartialActionSpec spec;
    spec.group = a.group;
    std::vector<int> dims = a.algebra.block_dims;
    dims.insert(dims.end(), b.algebra.block_dims.begin(), b.algebra.block_dims.end());
    spec.algebra = BlockAlgebra(a.algebra.field, dims);
    int shift = a.algebra.blocks();
    spec.domain.assign(g.order(), {});
    spec.block_map.assign(g.order(), std::vector<int>(spec.algebra.blocks(), -1));
    spec.matrix_map.assign(g.order(), {});
    for (int x = 0; x < g.order(); ++x) {
        for (int blk : a.domain[x]) {
            spec.domain[x].push_back(blk);
            spec.block_map[x][blk] = a.block_map[x][blk];
            spec.matrix_map[x].emplace(blk, a.matrix_map[x].at(blk));
        }
        for (int blk : b.domain[x]) {
            spec.domain[x].push_back(blk + shift);
            spec.block_map[x][blk + shift] = b.block_map[x][blk] + shift;
            spec.matrix_map[x].emplace(blk + shift, b.matrix_map[x].at(blk));
        }
    }
    return spec;
}

CorpusEntry make_entry(std::string name, std::string description,
                       std::shared_ptr<const GroupTable> g, PartialActionSpec spec) {
    CorpusEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.group = std::move(g);
    e.spec = std::move(spec);
    e.spec.group = e.group.get();
    return e;
}

namespace {

std::shared_ptr<const GroupTable> shared_group(GroupTable g) {
    return std::make_shared<const GroupTable>(std::move(g));
}

} // namespace

std::vector<CorpusEntry> globalization_corpus() {
    std::vector<CorpusEntry> out;
    Field q = Field::rationals(), f2 = Field::prime(2), f3 = Field::prime(3);

    auto z2 = shared_group(GroupTable::cyclic(2));
    out.push_back(make_entry("z2-empty-q", "Z/2 on Q, non-identity domain 0", z2,
                             empty_domains(*z2, q, 1)));
    out.push_back(make_entry("z2-empty-f2", "Z/2 on F_2, non-identity domain 0", z2,
                             empty_domains(*z2, f2, 1)));
    out.push_back(make_entry("z2-empty-f3", "Z/2 on F_3, non-identity domain 0", z2,
                             empty_domains(*z2, f3, 1)));
    out.push_back(make_entry("z2-swap-q", "Z/2 swapping Q x Q", z2,
                             scaled_swap(*z2, q, Scalar::one(q))));
    out.push_back(make_entry("z2-swap-f2", "Z/2 swapping F_2 x F_2", z2,
                             scaled_swap(*z2, f2, Scalar::one(f2))));
    out.push_back(make_entry("z2-swap-f3", "Z/2 swapping F_3 x F_3", z2,
                             scaled_swap(*z2, f3, Scalar::one(f3))));
    out.push_back(make_entry("z2-trivial-f2", "Z/2 fixing F_2", z2, trivial_action(*z2, f2, {1})));
    out.push_back(make_entry("z2-trivial-q", "Z/2 fixing Q", z2, trivial_action(*z2, q, {1})));

    auto z3 = shared_group(GroupTable::cyclic(3));
    out.push_back(make_entry("z3-oneblock-f2", "Z/3 regular orbit cut to one block, F_2", z3,
                             restrict_global(regular_global(*z3, f2), {0})));
    out.push_back(make_entry("z3-twoblock-q", "Z/3 regular orbit cut to two blocks, Q", z3,
                             restrict_global(regular_global(*z3, q), {0, 1})));

    auto z4 = shared_group(GroupTable::cyclic(4));
    out.push_back(make_entry("z4-trivial-f2", "Z/4 fixing F_2", z4, trivial_action(*z4, f2, {1})));
    out.push_back(make_entry("z4-twoblock-f2", "Z/4 regular orbit cut to two blocks, F_2", z4,
                             restrict_global(regular_global(*z4, f2), {0, 1})));

    auto v4 = shared_group(GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)));
    out.push_back(make_entry("v4-twoblock-f2", "Klein group regular orbit cut to two blocks, F_2",
                             v4, restrict_global(regular_global(*v4, f2), {0, 1})));
    out.push_back(make_entry("v4-twoblock-f3", "Klein group regular orbit cut to two blocks, F_3",
                             v4, restrict_global(regular_global(*v4, f3), {0, 1})));

    {
        auto z2b = shared_group(GroupTable::cyclic(2));
        PartialActionSpec swap = scaled_swap(*z2b, q, Scalar::one(q));
        PartialActionSpec dead = empty_domains(*z2b, q, 1);
        out.push_back(make_entry("z2-two-orbit-q", "Z/2 on Q^3: a swapped pair plus a dead block",
                                 z2b, direct_sum(swap, dead)));
    }

    auto s3 = shared_group(GroupTable::symmetric(3));
    out.push_back(make_entry("s3-twoblock-f2", "S_3 regular orbit cut to two blocks, F_2", s3,
                             restrict_global(regular_global(*s3, f2), {0, 2})));
    return out;
}

std::vector<CorpusEntry> cohomology_corpus() {
    std::vector<CorpusEntry> out = globalization_corpus();
    Field q = Field::rationals();
    auto z2 = shared_group(GroupTable::cyclic(2));
    out.push_back(make_entry("z2-scaled-swap-q", "Z/2 swapping Q x Q with a factor of 2", z2,
                             scaled_swap(*z2, q, Scalar(q, 2))));
    return out;
}

std::vector<CorpusEntry> global_corpus() {
    std::vector<CorpusEntry> out;
    for (CorpusEntry& e : cohomology_corpus())
        if (e.spec.is_global()) out.push_back(std::move(e));
    return out;
}

std::vector<CorpusEntry> finite_field_corpus() {
    std::vector<CorpusEntry> out;
    for (CorpusEntry& e : cohomology_corpus())
        if (e.spec.algebra.field.is_prime_field()) out.push_back(std::move(e));
    return out;
}

std::vector<std::shared_ptr<const GroupTable>> small_groups() {
    std::vector<std::shared_ptr<const GroupTable>> out;
    out.push_back(shared_group(GroupTable::cyclic(2)));
    out.push_back(shared_group(GroupTable::cyclic(3)));
    out.push_back(shared_group(GroupTable::cyclic(4)));
    out.push_back(shared_group(GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2))));
    return out;
}

} // namespace parcoh
