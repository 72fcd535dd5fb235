#include "parcoh/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace parcoh {

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(Field f, const Json& j) {
    if (j.is_number_integer()) return Scalar(f, j.get<std::int64_t>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw std::invalid_argument("scalar must be an integer or an exact string");
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Scalar& s : v) out.push_back(scalar_to_json(s));
    return out;
}

Vec vec_from_json(Field f, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector must be an array");
    Vec out;
    out.reserve(j.size());
    for (const Json& e : j) out.push_back(scalar_from_json(f, e));
    return out;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(Field f, const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols)
            throw std::invalid_argument("matrix rows have unequal lengths");
        for (int c = 0; c < cols; ++c) m.at(r, c) = scalar_from_json(f, j[r][c]);
    }
    return m;
}

GroupTable group_from_json(const Json& j) {
    if (j.is_string()) return GroupTable::named(j.get<std::string>());
    if (!j.is_object()) throw std::invalid_argument("group must be a family string or an object");
    if (!j.contains("mul")) throw std::invalid_argument("group object needs a \"mul\" table");
    std::vector<std::vector<int>> mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != mul.size())
        throw std::invalid_argument("group \"order\" disagrees with the table size");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return GroupTable::from_table(std::move(mul), std::move(names));
}

Json group_to_json(const GroupTable& g) {
    Json out;
    out["order"] = g.order();
    Json mul = Json::array();
    for (int a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        mul.push_back(std::move(row));
    }
    out["mul"] = std::move(mul);
    Json names = Json::array();
    for (int a = 0; a < g.order(); ++a) names.push_back(g.name(a));
    out["names"] = std::move(names);
    return out;
}

int element_from_string(const GroupTable& g, const std::string& s) {
    bool digits = !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    if (digits) {
        int x = std::stoi(s);
        if (x < 0 || x >= g.order()) throw std::invalid_argument("element index out of range: " + s);
        return x;
    }
    for (int x = 0; x < g.order(); ++x)
        if (g.name(x) == s) return x;
    throw std::invalid_argument("unknown group element: " + s);
}

PartialActionSpec action_from_json(const Json& j, std::unique_ptr<GroupTable>& group, Field f) {
    if (!j.is_object()) throw std::invalid_argument("action must be an object");
    if (!j.contains("group")) throw std::invalid_argument("action needs a \"group\"");
    group = std::make_unique<GroupTable>(group_from_json(j.at("group")));
    const GroupTable& g = *group;

    if (!j.contains("blocks")) throw std::invalid_argument("action needs \"blocks\"");
    std::vector<int> dims;
    for (const Json& b : j.at("blocks")) {
        int d = b.is_object() ? b.at("dim").get<int>() : b.get<int>();
        if (d <= 0) throw std::invalid_argument("block dimensions must be positive");
        dims.push_back(d);
    }

    PartialActionSpec spec;
    spec.group = group.get();
    spec.algebra = BlockAlgebra(f, dims);
    int nb = spec.algebra.blocks();
    spec.domain.assign(g.order(), {});
    spec.block_map.assign(g.order(), std::vector<int>(nb, -1));
    spec.matrix_map.assign(g.order(), {});

    if (!j.contains("domains")) throw std::invalid_argument("action needs \"domains\"");
    for (const auto& [key, val] : j.at("domains").items()) {
        int x = element_from_string(g, key);
        for (const Json& b : val) {
            int blk = b.get<int>();
            if (blk < 0 || blk >= nb) throw std::invalid_argument("domain block out of range");
            spec.domain[x].push_back(blk);
        }
        std::sort(spec.domain[x].begin(), spec.domain[x].end());
    }

    if (!j.contains("maps")) throw std::invalid_argument("action needs \"maps\"");
    for (const auto& [key, val] : j.at("maps").items()) {
        int x = element_from_string(g, key);
        for (const auto& [bkey, mj] : val.items()) {
            int src = std::stoi(bkey);
            if (src < 0 || src >= nb) throw std::invalid_argument("map block out of range");
            Matrix m = matrix_from_json(f, mj);
            /* image block: position of src in D_{x^{-1}} matches D_x */
            const std::vector<int>& from = spec.domain[g.inv(x)];
            const std::vector<int>& to = spec.domain[x];
            auto it = std::find(from.begin(), from.end(), src);
            if (it == from.end())
                throw std::invalid_argument("map given outside the source domain");
            std::size_t pos = static_cast<std::size_t>(it - from.begin());
            if (pos >= to.size()) throw std::invalid_argument("domains of g and g^-1 differ in size");
            spec.block_map[x][src] = to[pos];
            spec.matrix_map[x].emplace(src, std::move(m));
        }
    }
    /* explicit targets override the positional pairing */
    if (j.contains("targets"))
        for (const auto& [key, val] : j.at("targets").items()) {
            int x = element_from_string(g, key);
            for (const auto& [bkey, tj] : val.items())
                spec.block_map[x][std::stoi(bkey)] = tj.get<int>();
        }
    return spec;
}

Json action_to_json(const PartialActionSpec& spec) {
    const GroupTable& g = *spec.group;
    Json out;
    out["group"] = group_to_json(g);
    Json blocks = Json::array();
    for (int d : spec.algebra.block_dims) blocks.push_back(Json{{"dim", d}});
    out["blocks"] = std::move(blocks);
    Json domains = Json::object(), maps = Json::object(), targets = Json::object();
    for (int x = 0; x < g.order(); ++x) {
        domains[std::to_string(x)] = spec.domain[x];
        Json per = Json::object(), pert = Json::object();
        for (const auto& [src, m] : spec.matrix_map[x]) {
            per[std::to_string(src)] = matrix_to_json(m);
            pert[std::to_string(src)] = spec.block_map[x][src];
        }
        maps[std::to_string(x)] = std::move(per);
        targets[std::to_string(x)] = std::move(pert);
    }
    out["domains"] = std::move(domains);
    out["maps"] = std::move(maps);
    out["targets"] = std::move(targets);
    return out;
}

PartialCochain cochain_from_json(const PartialActionSpec& spec, const Json& j) {
    const GroupTable& g = *spec.group;
    Field f = spec.algebra.field;
    if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("cochain needs \"n\"");
    int n = j.at("n").get<int>();
    if (n < 0) throw std::invalid_argument("cochain degree must be >= 0");
    TupleIndexer ix(g.order(), n);
    PartialCochain w{n, std::vector<Vec>(static_cast<std::size_t>(ix.count()),
                                         vec_zero(f, spec.algebra.dim))};
    if (!j.contains("entries")) return w;
    for (const auto& [key, val] : j.at("entries").items()) {
        std::vector<int> tuple;
        if (!key.empty()) {
            std::size_t start = 0;
            while (start <= key.size()) {
                std::size_t comma = key.find(',', start);
                std::string part = key.substr(start, comma == std::string::npos ? comma : comma - start);
                tuple.push_back(element_from_string(g, part));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        if (static_cast<int>(tuple.size()) != n)
            throw std::invalid_argument("entry key \"" + key + "\" has the wrong arity");
        Vec v = vec_from_json(f, val);
        if (static_cast<int>(v.size()) != spec.algebra.dim)
            throw std::invalid_argument("entry \"" + key + "\" has the wrong dimension");
        w.values[ix.index(tuple)] = std::move(v);
    }
    return w;
}

Json cochain_to_json(const PartialActionSpec& spec, const PartialCochain& w) {
    const GroupTable& g = *spec.group;
    TupleIndexer ix(g.order(), w.n);
    Json entries = Json::object();
    for (long long t = 0; t < ix.count(); ++t) {
        if (vec_is_zero(w.values[t])) continue;
        std::vector<int> tuple = ix.tuple(t);
        std::string key;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(tuple[i]);
        }
        entries[key] = vec_to_json(w.values[t]);
    }
    Json out;
    out["n"] = w.n;
    out["entries"] = std::move(entries);
    return out;
}

} // namespace parcoh
