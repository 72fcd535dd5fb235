#pragma once

#include "parcoh/action.hpp"
#include "parcoh/group.hpp"
#include "parcoh/module.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace parcoh {

/* key order is preserved so equal inputs serialize byte-for-byte equal */
using Json = nlohmann::ordered_json;

/* scalars travel as exact strings ("-1/2", "3"); numbers are accepted on
   input */
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(Field f, const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(Field f, const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(Field f, const Json& j);

/* {"order": n, "mul": [[..]], "names": [..]} or a family string such as
   "cyclic(3)", "dihedral(4)", "symmetric(3)", "product(cyclic(2),cyclic(2))" */
GroupTable group_from_json(const Json& j);
Json group_to_json(const GroupTable& g);

/* {"group": ..., "blocks": [{"dim": d}, ...],
    "domains": {"g": [block, ...], ...},     keys are element indices or names
    "maps": {"g": {"block": [[..]], ...}}}   g acts on block inside D_{g^-1}
   The parsed group is returned through `group`; spec.group points at it. */
PartialActionSpec action_from_json(const Json& j, std::unique_ptr<GroupTable>& group, Field f);
Json action_to_json(const PartialActionSpec& spec);

/* {"n": n, "entries": {"g1,g2,...": [coords], ...}}; omitted tuples are zero,
   the degree-0 key is "" */
PartialCochain cochain_from_json(const PartialActionSpec& spec, const Json& j);
Json cochain_to_json(const PartialActionSpec& spec, const PartialCochain& w);

/* parse helpers shared by the CLI: element lookup by index or name */
int element_from_string(const GroupTable& g, const std::string& s);

} // namespace parcoh
