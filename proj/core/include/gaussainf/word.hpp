#pragma once

#include <string>
#include <vector>

#include "gaussainf/errors.hpp"

namespace gaussainf {

/* One signed letter passage: letter in 1..n, sign +1/-1. */
struct Occurrence {
    int letter;
    int sign;
    bool operator==(const Occurrence& o) const { return letter == o.letter && sign == o.sign; }
};

/* Linear list of 2n signed occurrences; position 0 is the basepoint cut
 * (the unit pair w0/wbar0 lives just before position 0). Every letter in
 * 1..n appears exactly once with each sign. */
struct SignedGaussWord {
    std::vector<Occurrence> occ;

    int n() const { return (int)occ.size() / 2; }
    bool operator==(const SignedGaussWord& o) const { return occ == o.occ; }
};

/* Canonical byte encoding of one equivalence class: lexicographic minimum
 * of the first-appearance-relabelled encodings over all rotations,
 * reversals and global sign flips. */
using EquivClassKey = std::string;

struct CurveTopology {
    int n = 0;
    std::vector<int> faces;  // corner counts, ascending
    int euler = 0;
    int genus = 0;
};

/* Accepts "1+2-2+1-" or "1^+2^-2^+1^-", whitespace-insensitive. */
SignedGaussWord parse_word(const std::string& text);
std::string word_text(const SignedGaussWord& word);

EquivClassKey canonical_key(const SignedGaussWord& word);
SignedGaussWord word_from_key(const EquivClassKey& key);

/* One canonical representative per equivalence class, sorted by key.
 * LimitExceeded for n above the guard. */
std::vector<SignedGaussWord> enumerate_classes(int n, int guard = 6);

/* Corner counts of the boundary circles of the tubular neighborhood,
 * ascending. */
std::vector<int> boundary_components(const SignedGaussWord& word);

CurveTopology topology(const SignedGaussWord& word);

}  // namespace gaussainf
