#include "qca/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qca/errors.hpp"

namespace qca {

int positive_root_count(char series, int r) {
    switch (series) {
        case 'A': return r * (r + 1) / 2;
        case 'D': return r * (r - 1);
        case 'E': return r == 6 ? 36 : r == 7 ? 63 : 120;
    }
    return 0;
}

namespace {

Word longest_word(const IntMatrix& a) {
    const int r = static_cast<int>(a.size());
    // walk rho (weight coordinates) to the antidominant chamber
    std::vector<long long> lam(r, 1);
    Word w;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 0; i < r; ++i) {
            if (lam[i] > 0) {
                long long li = lam[i];
                for (int j = 0; j < r; ++j) lam[j] -= li * a[i][j];
                w.push_back(i);
                moved = true;
                break;
            }
        }
    }
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

CartanData cartan_data(char series, int r) {
    bool ok = (series == 'A' && r >= 1) || (series == 'D' && r >= 4) || (series == 'E' && r >= 6 && r <= 8);
    if (!ok) throw ParseError("unsupported type " + std::string(1, series) + std::to_string(r));
    CartanData c;
    c.series = series;
    c.r = r;
    c.a.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) c.a[i][i] = 2;
    std::vector<std::pair<int, int>> edges;
    if (series == 'A') {
        for (int i = 0; i + 1 < r; ++i) edges.push_back({i, i + 1});
    } else if (series == 'D') {
        // 1 - 2 - ... - (r-3) - r, with r-2 and r-1 also on the hub r
        std::vector<int> path;
        for (int i = 0; i < r - 3; ++i) path.push_back(i);
        path.push_back(r - 1);
        for (size_t i = 0; i + 1 < path.size(); ++i) edges.push_back({path[i], path[i + 1]});
        edges.push_back({r - 3, r - 1});
        edges.push_back({r - 2, r - 1});
    } else {
        edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
        for (int i = 4; i + 1 < r; ++i) edges.push_back({i, i + 1});
    }
    for (auto [i, j] : edges) c.a[i][j] = c.a[j][i] = -1;
    c.w0 = longest_word(c.a);
    c.n = static_cast<int>(c.w0.size());
    return c;
}

CartanData parse_type(const std::string& text) {
    if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
        throw ParseError("bad type \"" + text + "\"");
    int r = 0;
    try {
        r = std::stoi(text.substr(1));
    } catch (const std::exception&) {
        throw ParseError("bad type \"" + text + "\"");
    }
    return cartan_data(static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))), r);
}

Word parse_word(const std::string& text, int r) {
    Word w;
    for (char ch : text) {
        if (ch == ',' || ch == ' ') continue;
        if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
            throw ParseError("bad letter '" + std::string(1, ch) + "' in word");
        int i = ch - '1';
        if (i >= r) throw ParseError("letter " + std::string(1, ch) + " exceeds rank");
        w.push_back(i);
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string s;
    for (int i : w) s += static_cast<char>('1' + i);
    return s;
}

IntVec simple_root(int r, int i) {
    IntVec v(r, 0);
    v[i] = 1;
    return v;
}

IntVec simple_reflect(const CartanData& c, int i, IntVec v) {
    long long s = 0;
    for (int j = 0; j < c.r; ++j) s += v[j] * c.a[j][i];
    v[i] -= s;
    return v;
}

IntVec weyl_act(const CartanData& c, const Word& word, IntVec v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = simple_reflect(c, *it, std::move(v));
    return v;
}

std::vector<IntVec> root_sequence(const CartanData& c, const Word& word) {
    std::vector<IntVec> out;
    for (size_t k = 0; k < word.size(); ++k) {
        if (word[k] < 0 || word[k] >= c.r) throw ParseError("letter out of range");
        out.push_back(weyl_act(c, Word(word.begin(), word.begin() + k), simple_root(c.r, word[k])));
    }
    return out;
}

RootSequence validate_reduced_word(const CartanData& c, const Word& word) {
    auto roots = root_sequence(c, word);
    std::set<IntVec> seen;
    for (const auto& b : roots) {
        bool pos = std::all_of(b.begin(), b.end(), [](long long x) { return x >= 0; });
        if (!pos || !seen.insert(b).second) throw NotReduced("word " + format_word(word) + " is not reduced");
    }
    if (static_cast<int>(word.size()) != positive_root_count(c.series, c.r))
        throw NotLongest("word " + format_word(word) + " has length " + std::to_string(word.size()) + ", expected " +
                         std::to_string(positive_root_count(c.series, c.r)));
    return {word, roots};
}

int star_involution(const CartanData& c, int i) {
    IntVec v = weyl_act(c, c.w0, simple_root(c.r, i));
    for (int j = 0; j < c.r; ++j)
        if (v[j] == -1) return j;
    throw Error("Internal", "w0 does not map a simple root to a negative simple root");
}

Word star_word(const CartanData& c, const Word& w) {
    Word s;
    for (int i : w) s.push_back(star_involution(c, i));
    return s;
}

}  // namespace qca
