#include "qca/quiver.hpp"

#include <cstdlib>
#include <unordered_set>

#include "qca/errors.hpp"

namespace qca {

IceQuiver::IceQuiver(std::vector<Vertex> vertices, IntMatrix eps2) : v_(std::move(vertices)), e_(std::move(eps2)) {
    for (size_t i = 0; i < v_.size(); ++i)
        if (!idx_.emplace(v_[i].id, i).second) throw InvalidQuiver("duplicate vertex id " + v_[i].id);
    check();
}

void IceQuiver::check() const {
    const size_t n = v_.size();
    if (e_.size() != n) throw InvalidQuiver("eps2 has wrong row count");
    for (size_t i = 0; i < n; ++i) {
        if (e_[i].size() != n) throw InvalidQuiver("eps2 is not square");
        if (e_[i][i] != 0) throw InvalidQuiver("nonzero diagonal at " + v_[i].id);
        for (size_t j = 0; j < n; ++j) {
            if (e_[i][j] != -e_[j][i]) throw InvalidQuiver("eps2 not skew at " + v_[i].id + "," + v_[j].id);
            if (e_[i][j] % 2 != 0 && !(v_[i].frozen && v_[j].frozen))
                throw InvalidQuiver("half-integer entry next to a mutable vertex: " + v_[i].id + "," + v_[j].id);
        }
    }
}

size_t IceQuiver::index(const std::string& id) const {
    auto it = idx_.find(id);
    if (it == idx_.end()) throw UnknownVertex("no vertex " + id);
    return it->second;
}

std::vector<size_t> IceQuiver::mutable_indices() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < v_.size(); ++i)
        if (!v_[i].frozen) out.push_back(i);
    return out;
}

std::vector<size_t> IceQuiver::frozen_indices() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < v_.size(); ++i)
        if (v_[i].frozen) out.push_back(i);
    return out;
}

IceQuiver IceQuiver::mutated(size_t k) const {
    if (k >= v_.size()) throw UnknownVertex("vertex index out of range");
    if (v_[k].frozen) throw FrozenMutation("vertex " + v_[k].id + " is frozen");
    const size_t n = v_.size();
    IntMatrix f = e_;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == k || j == k) f[i][j] = -e_[i][j];
            else if (e_[i][k] * e_[k][j] > 0) f[i][j] = e_[i][j] + std::abs(e_[i][k]) * e_[k][j] / 2;
        }
    }
    IceQuiver q;
    q.v_ = v_;
    q.e_ = std::move(f);
    q.idx_ = idx_;
    return q;
}

nlohmann::json IceQuiver::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : v_) vs.push_back({{"id", v.id}, {"frozen", v.frozen}, {"label", v.label}});
    return {{"vertices", vs}, {"eps2", e_}};
}

IceQuiver IceQuiver::from_json(const nlohmann::json& j) {
    try {
        std::vector<Vertex> vs;
        for (const auto& v : j.at("vertices"))
            vs.push_back({v.at("id").get<std::string>(), v.value("frozen", false), v.value("label", std::string())});
        return IceQuiver(std::move(vs), j.at("eps2").get<IntMatrix>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad quiver json: ") + e.what());
    }
}

IceQuiver mutate_quiver(const IceQuiver& q, const std::string& k) { return q.mutated(k); }

IceQuiver amalgamate(const IceQuiver& q1, const IceQuiver& q2,
                     const std::vector<std::pair<std::string, std::string>>& glue, bool defrost) {
    std::unordered_map<std::string, std::string> into;  // q2 id -> q1 id
    std::unordered_set<std::string> targets;
    for (const auto& [a, b] : glue) {
        if (!q1.frozen(q1.index(a)) || !q2.frozen(q2.index(b)))
            throw GlueNonFrozen("glue pair " + a + "~" + b + " has a mutable vertex");
        if (!targets.insert(a).second || into.count(b))
            throw DuplicateGlueTarget("vertex glued twice in pair " + a + "~" + b);
        into[b] = a;
    }
    std::vector<Vertex> vs = q1.vertices();
    if (defrost)
        for (auto& v : vs)
            if (targets.count(v.id)) v.frozen = false;
    for (const auto& v : q2.vertices())
        if (!into.count(v.id)) vs.push_back(v);
    std::unordered_map<std::string, size_t> at;
    for (size_t i = 0; i < vs.size(); ++i)
        if (!at.emplace(vs[i].id, i).second) throw InvalidQuiver("vertex id " + vs[i].id + " occurs in both quivers");
    const size_t n = vs.size();
    IntMatrix e(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < q1.size(); ++i)
        for (size_t j = 0; j < q1.size(); ++j) e[i][j] += q1.eps2(i, j);
    std::vector<size_t> pos(q2.size());
    for (size_t i = 0; i < q2.size(); ++i) {
        const auto& id = q2.vertex(i).id;
        auto it = into.find(id);
        pos[i] = at.at(it == into.end() ? id : it->second);
    }
    for (size_t i = 0; i < q2.size(); ++i)
        for (size_t j = 0; j < q2.size(); ++j) e[pos[i]][pos[j]] += q2.eps2(i, j);
    return IceQuiver(std::move(vs), std::move(e));
}

bool quiver_equal_upto(const IceQuiver& q1, const IceQuiver& q2,
                       const std::unordered_map<std::string, std::string>& perm) {
    if (q1.size() != q2.size()) return false;
    std::vector<size_t> p(q1.size());
    std::unordered_set<size_t> seen;
    for (size_t i = 0; i < q1.size(); ++i) {
        auto it = perm.find(q1.vertex(i).id);
        if (it == perm.end() || !q2.has(it->second)) return false;
        p[i] = q2.index(it->second);
        if (!seen.insert(p[i]).second) return false;
        if (q1.frozen(i) != q2.frozen(p[i])) return false;
    }
    for (size_t i = 0; i < q1.size(); ++i)
        for (size_t j = 0; j < q1.size(); ++j)
            if (q1.eps2(i, j) != q2.eps2(p[i], p[j])) return false;
    return true;
}

}  // namespace qca
