#pragma once

#include "parcoh/action.hpp"

#include <memory>
#include <string>
#include <vector>

namespace parcoh {

/* building blocks for example actions */
PartialActionSpec trivial_action(const GroupTable& g, Field f, const std::vector<int>& dims);
/* |G| blocks of dimension 1 permuted by left translation */
PartialActionSpec regular_global(const GroupTable& g, Field f);
/* domain of every non-identity element is 0 */
PartialActionSpec empty_domains(const GroupTable& g, Field f, int dim);
/* order-2 group swapping two one-dimensional blocks, scaled by c (c = 1 is
   the plain swap; c != 1 breaks multiplicativity but keeps the module
   structure) */
PartialActionSpec scaled_swap(const GroupTable& z2, Field f, const Scalar& c);
/* blockwise direct sum over the same group */
PartialActionSpec direct_sum(const PartialActionSpec& a, const PartialActionSpec& b);

/* a named action together with the group it borrows; the shared_ptr keeps
   spec.group valid across copies */
struct CorpusEntry {
    std::string name;
    std::string description;
    std::shared_ptr<const GroupTable> group;
    PartialActionSpec spec;
};

CorpusEntry make_entry(std::string name, std::string description,
                       std::shared_ptr<const GroupTable> g, PartialActionSpec spec);

/* every bundled action (cohomology-safe; includes one non-multiplicative
   module) */
std::vector<CorpusEntry> cohomology_corpus();
/* the global ones, for the bar-complex degeneracy oracle */
std::vector<CorpusEntry> global_corpus();
/* the multiplicative ones, safe for enveloping and globalization */
std::vector<CorpusEntry> globalization_corpus();
/* small-field entries for unit-group comparisons */
std::vector<CorpusEntry> finite_field_corpus();
/* groups of order <= 4 for resolution certification */
std::vector<std::shared_ptr<const GroupTable>> small_groups();

} // namespace parcoh
