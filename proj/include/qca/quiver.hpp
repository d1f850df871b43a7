#pragma once

#include "json.hpp"
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qca {

using IntMatrix = std::vector<std::vector<int>>;

struct Vertex {
    std::string id;
    bool frozen = false;
    std::string label;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Ice quiver with doubled skew form: eps2[i][j] = 2*eps_ij.
class IceQuiver {
public:
    IceQuiver() = default;
    IceQuiver(std::vector<Vertex> vertices, IntMatrix eps2);

    size_t size() const { return v_.size(); }
    const std::vector<Vertex>& vertices() const { return v_; }
    const Vertex& vertex(size_t i) const { return v_[i]; }
    const IntMatrix& eps2() const { return e_; }
    int eps2(size_t i, size_t j) const { return e_[i][j]; }
    bool frozen(size_t i) const { return v_[i].frozen; }
    size_t index(const std::string& id) const;
    bool has(const std::string& id) const { return idx_.count(id) != 0; }
    std::vector<size_t> mutable_indices() const;
    std::vector<size_t> frozen_indices() const;

    IceQuiver mutated(size_t k) const;
    IceQuiver mutated(const std::string& id) const { return mutated(index(id)); }
    // same vertices, new form; used by the negative controls
    IceQuiver with_eps2(IntMatrix eps2) const { return IceQuiver(v_, std::move(eps2)); }

    nlohmann::json to_json() const;
    static IceQuiver from_json(const nlohmann::json& j);

    friend bool operator==(const IceQuiver& a, const IceQuiver& b) { return a.v_ == b.v_ && a.e_ == b.e_; }

private:
    void check() const;

    std::vector<Vertex> v_;
    IntMatrix e_;
    std::unordered_map<std::string, size_t> idx_;
};

IceQuiver mutate_quiver(const IceQuiver& q, const std::string& k);

// Merges each glue pair (id in q1, id in q2) into the q1 vertex.
IceQuiver amalgamate(const IceQuiver& q1, const IceQuiver& q2,
                     const std::vector<std::pair<std::string, std::string>>& glue, bool defrost);

// perm maps ids of q1 to ids of q2.
bool quiver_equal_upto(const IceQuiver& q1, const IceQuiver& q2,
                       const std::unordered_map<std::string, std::string>& perm);

}  // namespace qca
