#pragma once

#include <string>
#include <vector>

#include "qca/quiver.hpp"

namespace qca {

// Letters are 0-based internally; the text form "123121" is 1-based.
using Word = std::vector<int>;
using IntVec = std::vector<long long>;

struct CartanData {
    char series = 'A';
    int r = 0;
    IntMatrix a;
    Word w0;  // cached longest word
    int n = 0;

    std::string name() const { return std::string(1, series) + std::to_string(r); }
};

CartanData cartan_data(char series, int r);
CartanData parse_type(const std::string& text);  // "A3", "D4", "E6"
Word parse_word(const std::string& text, int r);
std::string format_word(const Word& w);
int positive_root_count(char series, int r);

struct RootSequence {
    Word word;
    std::vector<IntVec> roots;  // simple-root coordinates
};

RootSequence validate_reduced_word(const CartanData& c, const Word& word);
// beta_k without the longest-word checks
std::vector<IntVec> root_sequence(const CartanData& c, const Word& word);

IntVec simple_reflect(const CartanData& c, int i, IntVec v);
// applies the letters right to left, so word (i1..ik) acts as s_{i1}...s_{ik}
IntVec weyl_act(const CartanData& c, const Word& word, IntVec v);
int star_involution(const CartanData& c, int i);
Word star_word(const CartanData& c, const Word& w);
IntVec simple_root(int r, int i);

}  // namespace qca
