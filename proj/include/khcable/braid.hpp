#pragma once
// Braid words and the word-level constructions: torus words, mirrors,
// and the parallel-cabling substitution used by the satellite builders.
//
// A word is a list of nonzero letters; letter +g (resp. -g) is the positive
// (resp. negative) Artin generator crossing strand positions g and g+1.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace khc {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;
};

inline void validate_braid(const BraidWord& b) {
    if (b.strands < 1) throw std::invalid_argument("braid: strand count must be >= 1");
    for (int l : b.letters) {
        if (l == 0) throw std::invalid_argument("braid: letter 0 is not a generator");
        if (std::abs(l) >= b.strands)
            throw std::invalid_argument("braid: letter " + std::to_string(l) + " needs more strands");
    }
}

// "1 1 -2 1" -> letters; strand count is the smallest that fits the word.
inline BraidWord parse_braid(const std::string& text) {
    BraidWord b;
    std::istringstream is(text);
    int v;
    int max_abs = 0;
    while (is >> v) {
        if (v == 0) throw std::invalid_argument("braid: letter 0 is not a generator");
        b.letters.push_back(v);
        max_abs = std::max(max_abs, std::abs(v));
    }
    if (!is.eof()) throw std::invalid_argument("braid: expected whitespace-separated integers");
    b.strands = max_abs + 1;
    return b;
}

// (s1 s2 ... s_{p-1})^q on p strands; closure is the (p,q) torus link.
inline BraidWord torus_braid(int p, int q) {
    if (p < 1) throw std::invalid_argument("torus braid: p must be >= 1");
    if (q < 0) throw std::invalid_argument("torus braid: q must be >= 0");
    BraidWord b;
    b.strands = p;
    b.letters.reserve(static_cast<std::size_t>(std::max(p - 1, 0)) * q);
    for (int rep = 0; rep < q; rep++)
        for (int g = 1; g <= p - 1; g++) b.letters.push_back(g);
    return b;
}

inline BraidWord mirror_word(const BraidWord& b) {
    BraidWord m = b;
    for (int& l : m.letters) l = -l;
    return m;
}

// Permutation of strand positions induced by the word: perm[i] = final
// position of the strand that starts at position i (0-based).
inline std::vector<int> braid_permutation(const BraidWord& b) {
    validate_braid(b);
    std::vector<int> pos(b.strands);  // pos[p] = strand currently at position p
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : b.letters) {
        int g = std::abs(l) - 1;
        std::swap(pos[g], pos[g + 1]);
    }
    std::vector<int> perm(b.strands);
    for (int p = 0; p < b.strands; p++) perm[pos[p]] = p;
    return perm;
}

// Number of link components of the braid closure (= cycles of the permutation).
inline int closure_component_count(const BraidWord& b) {
    std::vector<int> perm = braid_permutation(b);
    std::vector<char> seen(b.strands, 0);
    int cycles = 0;
    for (int i = 0; i < b.strands; i++) {
        if (seen[i]) continue;
        cycles++;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    return cycles;
}

// Replace every strand by p parallel copies. A positive letter g becomes the
// all-positive block in which the p-strand bundle at positions (g-1)p+1..gp
// passes over the bundle at gp+1..(g+1)p (p^2 positive letters); a negative
// letter becomes the inverse block. Blackboard framing: no correction twists.
inline BraidWord cable_word(const BraidWord& b, int p) {
    validate_braid(b);
    if (p < 1) throw std::invalid_argument("cable: p must be >= 1");
    BraidWord c;
    c.strands = b.strands * p;
    c.letters.reserve(b.letters.size() * static_cast<std::size_t>(p) * p);
    for (int l : b.letters) {
        int g = std::abs(l);
        std::vector<int> block;
        block.reserve(static_cast<std::size_t>(p) * p);
        for (int j = 1; j <= p; j++)
            for (int i = 0; i < p; i++) block.push_back(g * p + j - 1 - i);
        if (l > 0) {
            c.letters.insert(c.letters.end(), block.begin(), block.end());
        } else {
            for (auto it = block.rbegin(); it != block.rend(); ++it) c.letters.push_back(-*it);
        }
    }
    return c;
}

}  // namespace khc
