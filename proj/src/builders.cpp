#include "qca/builders.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qca/errors.hpp"

namespace qca {

std::string wire_id(const std::string& tag, int level, int t) {
    return tag + ".w" + std::to_string(level + 1) + "." + std::to_string(t);
}

std::string red_id(const std::string& tag, int j) { return tag + ".r" + std::to_string(j + 1); }

namespace {

struct WireRef {
    std::string tag;
    bool wire = false;
    int level = 0, t = 0;
};

WireRef parse_id(const std::string& id) {
    WireRef w;
    auto dot = id.find('.');
    w.tag = id.substr(0, dot);
    if (id[dot + 1] == 'w') {
        w.wire = true;
        auto dot2 = id.find('.', dot + 2);
        w.level = std::stoi(id.substr(dot + 2, dot2 - dot - 2)) - 1;
        w.t = std::stoi(id.substr(dot2 + 1));
    } else {
        w.level = std::stoi(id.substr(dot + 2)) - 1;
    }
    return w;
}

std::vector<int> positions_of(const Word& w, int l) {
    std::vector<int> p;
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
        if (w[k] == l) p.push_back(k);
    return p;
}

int occurrence_index(const Word& w, int l, int pos) {
    auto p = positions_of(w, l);
    return static_cast<int>(std::find(p.begin(), p.end(), pos) - p.begin()) + 1;
}

}  // namespace

TriangleQuiver build_triangle(const CartanData& c, const Word& word, const std::string& tag) {
    auto rs = validate_reduced_word(c, word);
    const int r = c.r;
    TriangleQuiver T;
    T.word = word;
    T.occurrences.assign(r, {});
    for (int k = 0; k < static_cast<int>(word.size()); ++k) T.occurrences[word[k]].push_back(k);

    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    struct Info {
        int level, s, e;
    };
    std::vector<Vertex> vs;
    std::vector<Info> info;
    for (int l = 0; l < r; ++l) {
        const auto& occ = T.occurrences[l];
        const int cnt = static_cast<int>(occ.size());
        for (int t = 0; t <= cnt; ++t) {
            int s = t == 0 ? -kInf : occ[t - 1];
            int e = t < cnt ? occ[t] : kInf;
            bool frozen = t == 0 || t == cnt;
            auto id = wire_id(tag, l, t);
            vs.push_back({id, frozen, "level " + std::to_string(l + 1) + " wire " + std::to_string(t)});
            info.push_back({l, s, e});
            T.level_of[id] = l + 1;
            if (t > 0) T.letter_of[id] = occ[t - 1] + 1;
        }
    }
    const size_t nwire = vs.size();
    T.red_position.assign(r, -1);
    for (int k = 0; k < static_cast<int>(rs.roots.size()); ++k) {
        const auto& b = rs.roots[k];
        if (std::accumulate(b.begin(), b.end(), 0LL) == 1)
            T.red_position[std::find(b.begin(), b.end(), 1LL) - b.begin()] = k;
    }
    for (int j = 0; j < r; ++j) {
        vs.push_back({red_id(tag, j), true, "red " + std::to_string(j + 1)});
        T.level_of[red_id(tag, j)] = j + 1;
    }
    const size_t n = vs.size();
    IntMatrix e(n, std::vector<int>(n, 0));
    std::map<std::string, size_t> at;
    for (size_t i = 0; i < n; ++i) at[vs[i].id] = i;
    auto add = [&](const std::string& a, const std::string& b, int w) {
        e[at.at(a)][at.at(b)] += w;
        e[at.at(b)][at.at(a)] -= w;
    };
    for (int l = 0; l < r; ++l)
        for (int t = 1; t <= static_cast<int>(T.occurrences[l].size()); ++t) add(wire_id(tag, l, t), wire_id(tag, l, t - 1), 2);
    for (size_t a = 0; a < nwire; ++a) {
        for (size_t b = 0; b < nwire; ++b) {
            const auto& x = info[a];
            const auto& y = info[b];
            if (c.a[x.level][y.level] != -1) continue;
            if (x.s <= y.s && x.e <= y.e && y.s < x.e && (x.s != y.s || x.e != y.e)) {
                bool strict = x.s < y.s && x.e < y.e;
                e[a][b] += strict ? 2 : 1;
                e[b][a] -= strict ? 2 : 1;
            }
        }
    }
    for (int j = 0; j < r; ++j) {
        int k = T.red_position[j];
        int l = word[k];
        int t = occurrence_index(word, l, k);
        add(wire_id(tag, l, t - 1), red_id(tag, j), 2);
        add(red_id(tag, j), wire_id(tag, l, t), 2);
    }
    for (int j1 = 0; j1 < r; ++j1)
        for (int j2 = 0; j2 < r; ++j2)
            if (c.a[j1][j2] == -1 && T.red_position[j1] > T.red_position[j2]) add(red_id(tag, j1), red_id(tag, j2), 1);
    for (int l = 0; l < r; ++l) {
        T.side_markers[0].push_back(wire_id(tag, l, 0));
        T.side_markers[1].push_back(wire_id(tag, l, static_cast<int>(T.occurrences[l].size())));
        T.side_markers[2].push_back(red_id(tag, l));
    }
    T.quiver = IceQuiver(std::move(vs), std::move(e));
    return T;
}

DiskSeed build_disk(const CartanData& c, const Word& w1, const Word& w2) {
    auto T1 = build_triangle(c, w1, "T1");
    auto T2 = build_triangle(c, w2, "T2");
    // rotating the second triangle reverses its sides: initial meets final
    std::vector<std::pair<std::string, std::string>> glue;
    for (int l = 0; l < c.r; ++l) {
        glue.push_back({T1.side_markers[0][l], T2.side_markers[1][l]});
        glue.push_back({T1.side_markers[1][l], T2.side_markers[0][l]});
    }
    DiskSeed d;
    d.quiver = amalgamate(T1.quiver, T2.quiver, glue, true);
    d.boundary_frozen = {T1.side_markers[2], T2.side_markers[2]};
    for (const auto& [a, b] : glue) {
        d.internal_vertices.push_back(a);
        d.alias[b] = a;
    }
    d.w1 = w1;
    d.w2 = w2;
    return d;
}

std::vector<BraidMove> braid_moves(const CartanData& c, const Word& w) {
    std::vector<BraidMove> out;
    const int n = static_cast<int>(w.size());
    for (int k = 0; k + 1 < n; ++k) {
        int i = w[k], j = w[k + 1];
        if (i != j && c.a[i][j] == 0) {
            Word u = w;
            std::swap(u[k], u[k + 1]);
            out.push_back({'c', k, u});
        }
    }
    for (int k = 0; k + 2 < n; ++k) {
        int i = w[k], j = w[k + 1];
        if (w[k + 2] == i && c.a[i][j] == -1) {
            Word u = w;
            u[k] = j;
            u[k + 1] = i;
            u[k + 2] = j;
            out.push_back({'b', k, u});
        }
    }
    return out;
}

namespace {

// New triangle-local id -> old triangle-local id across one move.
std::string through_move(const Word& oldw, const BraidMove& m, const std::string& tag, const std::string& id) {
    auto v = parse_id(id);
    if (v.tag != tag || !v.wire || v.t == 0) return id;
    const int l = v.level;
    const int p = positions_of(m.result, l)[v.t - 1];
    const int k = m.k, i = oldw[k], j = oldw[k + 1];
    int op = p;
    if (m.kind == 'c') {
        if (p == k) op = k + 1;
        else if (p == k + 1) op = k;
    } else {
        if (l == j && p == k) return wire_id(tag, i, occurrence_index(oldw, i, k));
        if (l == i && p == k + 1) op = k + 2;
        else if (l == j && p == k + 2) op = k + 1;
    }
    return wire_id(tag, l, occurrence_index(oldw, l, op));
}

}  // namespace

BraidChart::BraidChart(const CartanData& c, const Word& w1, const Word& w2) : c_(c), d_(build_disk(c, w1, w2)) {
    ref_ = d_.quiver;
    cur_ = ref_;
    for (const auto& v : ref_.vertices()) c2r_[v.id] = v.id;
}

void BraidChart::apply(int tag, const BraidMove& m) {
    const std::string t = tag == 1 ? "T1" : "T2";
    const Word& oldw = tag == 1 ? d_.w1 : d_.w2;
    if (m.kind == 'b') {
        int i = oldw[m.k];
        auto vid = d_.canonical(wire_id(t, i, occurrence_index(oldw, i, m.k)));
        const auto& rid = c2r_.at(vid);
        cur_ = cur_.mutated(rid);
        path_.push_back(rid);
    }
    Word w1 = tag == 1 ? m.result : d_.w1;
    Word w2 = tag == 2 ? m.result : d_.w2;
    DiskSeed dn = build_disk(c_, w1, w2);
    std::map<std::string, std::string> back;  // merged id -> second-triangle id
    for (const auto& [b, a] : dn.alias) back[a] = b;
    std::map<std::string, std::string> nc2r;
    for (const auto& v : dn.quiver.vertices()) {
        std::string local = v.id;
        if (tag == 2) {
            auto it = back.find(v.id);
            if (it != back.end()) local = it->second;
        }
        nc2r[v.id] = c2r_.at(d_.canonical(through_move(oldw, m, t, local)));
    }
    const auto& nq = dn.quiver;
    for (size_t a = 0; a < nq.size(); ++a) {
        size_t ra = cur_.index(nc2r[nq.vertex(a).id]);
        if (nq.frozen(a) != cur_.frozen(ra)) throw Error("Internal", "braid move changed frozen set");
        for (size_t b = 0; b < nq.size(); ++b)
            if (nq.eps2(a, b) != cur_.eps2(ra, cur_.index(nc2r[nq.vertex(b).id])))
                throw Error("Internal", "braid move disagrees with rebuilt quiver at " + nq.vertex(a).id + "," +
                                            nq.vertex(b).id);
    }
    d_ = std::move(dn);
    c2r_ = std::move(nc2r);
}

DiskSeed build_disk_seed(const CartanData& c, const Word& word) {
    DiskSeed d = build_disk(c, word, word);
    auto anchor = [&](const BraidChart& ch, const std::array<std::string, 3>& local) {
        KappaAnchor a;
        a.path = ch.path();
        for (int x = 0; x < 3; ++x) a.triple[x] = ch.ref_id(ch.disk().canonical(local[x]));
        return a;
    };
    for (int i = 0; i < c.r; ++i) {
        const int is = star_involution(c, i);
        {
            BraidChart ch(c, word, word);
            for (const auto& m : word_path(c, word, [i](const Word& u) { return u.front() == i; })) ch.apply(1, m);
            for (const auto& m : word_path(c, word, [i](const Word& u) { return u.back() == i; })) ch.apply(2, m);
            d.e_anchor.push_back(anchor(ch, {red_id("T1", i), wire_id("T1", i, 0), red_id("T2", is)}));
        }
        {
            BraidChart ch(c, word, word);
            for (const auto& m : word_path(c, word, [is](const Word& u) { return u.back() == is; })) ch.apply(1, m);
            for (const auto& m : word_path(c, word, [is](const Word& u) { return u.front() == is; })) ch.apply(2, m);
            d.f_anchor.push_back(anchor(ch, {red_id("T2", is), wire_id("T2", is, 0), red_id("T1", i)}));
        }
    }
    return d;
}

}  // namespace qca
