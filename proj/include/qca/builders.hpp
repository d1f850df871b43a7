#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qca/quiver.hpp"
#include "qca/rootdata.hpp"

namespace qca {

// Vertex ids: "<tag>.w<level>.<t>" for the t-th wiring vertex of a level
// (t = 0 initial, t = n_level final) and "<tag>.r<j>" for the red vertex of
// simple root j. Levels and j are 1-based in ids.
std::string wire_id(const std::string& tag, int level, int t);
std::string red_id(const std::string& tag, int j);

struct TriangleQuiver {
    IceQuiver quiver;
    // left (initial wiring), right (final wiring), red; each indexed by level/root
    std::array<std::vector<std::string>, 3> side_markers;
    std::map<std::string, int> level_of;
    std::map<std::string, int> letter_of;
    Word word;
    std::vector<std::vector<int>> occurrences;  // per level, word positions
    std::vector<int> red_position;              // per simple root, the letter with beta_k = alpha_j
};

TriangleQuiver build_triangle(const CartanData& c, const Word& word, const std::string& tag = "T1");

// The vertex triple (e1, e2, e3) of a chart reached from the reference
// chart by mutating along path. Ids are reference ids.
struct KappaAnchor {
    std::vector<std::string> path;
    std::array<std::string, 3> triple;
};

struct DiskSeed {
    IceQuiver quiver;
    // roles A_i (first triangle reds) and A'_i (second triangle reds)
    std::array<std::vector<std::string>, 2> boundary_frozen;
    std::vector<std::string> internal_vertices;
    std::vector<KappaAnchor> e_anchor;  // E_i, K_i
    std::vector<KappaAnchor> f_anchor;  // F_i, Kt_i
    Word w1, w2;
    // second-triangle id -> merged id, for the glued vertices
    std::map<std::string, std::string> alias;

    std::string canonical(const std::string& id) const {
        auto it = alias.find(id);
        return it == alias.end() ? id : it->second;
    }
};

// Two triangles glued along the wiring sides; no anchors.
DiskSeed build_disk(const CartanData& c, const Word& w1, const Word& w2);
// build_disk(word, word) plus the kappa anchors for every index.
DiskSeed build_disk_seed(const CartanData& c, const Word& word);

struct BraidMove {
    char kind = 'c';  // 'c' commutation ij -> ji, 'b' iji -> jij
    int k = 0;        // first position touched
    Word result;
};

std::vector<BraidMove> braid_moves(const CartanData& c, const Word& w);

template <class Pred>
std::vector<BraidMove> word_path(const CartanData& c, const Word& start, Pred pred);

// Tracks a disk seed whose two words are changed by braid moves. Commutation
// moves relabel vertices; 3-moves are one mutation. Every move is checked
// against a freshly built disk.
class BraidChart {
public:
    BraidChart(const CartanData& c, const Word& w1, const Word& w2);

    void apply(int tag, const BraidMove& m);
    const DiskSeed& disk() const { return d_; }
    const IceQuiver& reference() const { return ref_; }
    const IceQuiver& current() const { return cur_; }
    const std::vector<std::string>& path() const { return path_; }
    // builder id of the current disk -> reference id
    const std::string& ref_id(const std::string& builder_id) const { return c2r_.at(builder_id); }

private:
    CartanData c_;
    DiskSeed d_;
    IceQuiver ref_, cur_;
    std::map<std::string, std::string> c2r_;
    std::vector<std::string> path_;
};

}  // namespace qca

#include "qca/builders_impl.hpp"
