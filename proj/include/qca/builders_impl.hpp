#pragma once

#include <deque>

#include "qca/errors.hpp"
#include <map>

namespace qca {

template <class Pred>
std::vector<BraidMove> word_path(const CartanData& c, const Word& start, Pred pred) {
    std::map<Word, std::pair<Word, BraidMove>> prev;
    std::deque<Word> q{start};
    prev[start] = {};
    while (!q.empty()) {
        Word u = q.front();
        q.pop_front();
        if (pred(u)) {
            std::vector<BraidMove> path;
            while (u != start) {
                auto& [p, m] = prev.at(u);
                path.push_back(m);
                u = p;
            }
            return {path.rbegin(), path.rend()};
        }
        for (auto& m : braid_moves(c, u)) {
            if (prev.count(m.result)) continue;
            prev[m.result] = {u, m};
            q.push_back(m.result);
        }
    }
    throw Error("NoPath", "no reduced word reachable by braid moves satisfies the predicate");
}

}  // namespace qca
