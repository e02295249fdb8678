#pragma once

#include <cstdint>
#include <vector>

#include "gammak/beatty.hpp"

namespace gammak {

// Letters: 0 is sigma, i in 1..k is tau_i. Tau indices are cyclic with
// period k over the tau letters of the word. Unindexed words use 0/1.
using Word = std::vector<std::int32_t>;

// Prefix of the fixed point of sigma -> sigma tau^k, tau -> sigma tau^{k+1},
// with tau indices attached.
Word phi_word(const GameParams& params, std::int64_t length);

// w^i_n: the n-th image of the seed sigma tau_1 ... tau_i (k >= 2).
Word seed_word(const GameParams& params, std::int64_t i, std::int64_t n);

// Binary prefix of the fixed point of 0 -> 1^k 0, 1 -> 1^k 0 1, seeded at 1.
Word theta_word(const GameParams& params, std::int64_t length);

// The same word as phi_word but built as 0 followed by the theta fixed
// point under 0 <-> sigma, 1 <-> tau.
Word theta_based_word(const GameParams& params, std::int64_t length);

// Letters recovered from the step sequence: d_j = k+1 reads sigma,
// d_j = k+2 reads tau. Requires tables.n_max() >= length.
Word word_from_steps(const BeattyTables& tables, std::int64_t length);

// n-th letter of the word, O(1) from b_n alone.
std::int32_t nth_letter(const GameParams& params, std::int64_t n);

struct WordStats {
  std::int64_t sigma_count = 0;
  std::int64_t tau_k_count = 0;
  std::int64_t letter_count = 0;

  friend bool operator==(const WordStats&, const WordStats&) = default;
};
// Counts over an indexed word.
WordStats count_stats(const Word& word, std::int64_t k);

// Half-open [start, end) blocks, one per sigma: each syllable is the image
// of a single letter, so complete ones have length k+1 or k+2. The word
// must start with sigma; a trailing partial syllable is included.
struct Syllable {
  std::int64_t start = 0;
  std::int64_t end = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};
std::vector<Syllable> syllable_decomposition(const Word& word);

// d_j = k+1 exactly at sigma letters, for all j <= length.
bool check_word_matches_steps(const GameParams& params, std::int64_t length);

// c_n = 2 exactly at tau_k letters, for all n <= length.
bool check_tau_k_marks_double_step(const GameParams& params, std::int64_t length);

// Every window of length g^i_n over the first sample_length letters holds
// g^i_{n-1} or g^i_{n-1} - 1 sigmas; both values must appear once the
// sample extends a full g^i_{n+1} past one window.
bool check_window_balance(const GameParams& params, std::int64_t i, std::int64_t n,
                          std::int64_t sample_length);

// Distinct sigma counts over all windows of the given length, ascending.
std::vector<std::int64_t> sigma_window_counts(const Word& word, std::int64_t window);

// Every factor of w^i_{n+2} of length g^i_{n+1} that ends in tau_i and is
// not the suffix holds exactly g^i_n sigmas (n >= -1). The suffix count is
// reported through suffix_sigma_count when given, never asserted.
bool check_factor_sigma_counts(const GameParams& params, std::int64_t i, std::int64_t n,
                               std::int64_t* suffix_sigma_count = nullptr);

// Prefixes of the word and of 0 followed by the theta fixed point match
// under sigma <-> 0, tau <-> 1.
bool check_binary_correspondence(const GameParams& params, std::int64_t length);

struct AgreementReport {
  bool all_agree = false;
  std::int64_t first_mismatch = 0;  // 1-based position, 0 when none
};
// Compares the step-sequence, morphism and binary constructions letterwise.
AgreementReport check_constructions_agree(const GameParams& params, std::int64_t length);

// Morphism over {0,1} given by the images of the two letters.
struct BinaryMorphism {
  Word image0;
  Word image1;

  Word apply(const Word& word) const;
  friend bool operator==(const BinaryMorphism&, const BinaryMorphism&) = default;
};

// compose(f, g) applies g first.
BinaryMorphism compose(const BinaryMorphism& outer, const BinaryMorphism& inner);

BinaryMorphism exchange_morphism();  // 0 <-> 1
BinaryMorphism eta_morphism();       // 0 -> 01, 1 -> 0
BinaryMorphism eta_bar_morphism();   // 0 -> 10, 1 -> 0
BinaryMorphism theta_morphism(const GameParams& params);
// (E eta)^k eta. Equals theta after composing with the exchange on the
// right: standard_theta_morphism . E == theta.
BinaryMorphism standard_theta_morphism(const GameParams& params);

// s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{directive[n-1]} s_{n-2}; returns s_n.
Word standard_sequence(const std::vector<std::int64_t>& directive, std::int64_t n);

}  // namespace gammak
