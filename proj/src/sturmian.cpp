#include "gammak/sturmian.hpp"

#include <algorithm>
#include <stdexcept>

#include "gammak/ruleset.hpp"

namespace gammak {

namespace {

// One application of sigma -> sigma tau^k, tau -> sigma tau^{k+1} on a
// plain word (any tau index counts as tau).
Word phi_apply(std::int64_t k, const Word& word) {
  Word out;
  out.reserve(word.size() * static_cast<std::size_t>(k + 2));
  for (std::int32_t letter : word) {
    out.push_back(0);
    std::int64_t taus = letter == 0 ? k : k + 1;
    for (std::int64_t t = 0; t < taus; ++t) out.push_back(1);
  }
  return out;
}

void attach_tau_indices(std::int64_t k, Word& word) {
  std::int64_t ordinal = 0;
  for (std::int32_t& letter : word) {
    if (letter != 0) {
      letter = static_cast<std::int32_t>(ordinal % k + 1);
      ++ordinal;
    }
  }
}

Word phi_word_plain(const GameParams& params, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("word length must be >= 1");
  Word word{0};
  while (static_cast<std::int64_t>(word.size()) < length) word = phi_apply(params.k, word);
  word.resize(static_cast<std::size_t>(length));
  return word;
}

}  // namespace

Word phi_word(const GameParams& params, std::int64_t length) {
  Word word = phi_word_plain(params, length);
  attach_tau_indices(params.k, word);
  return word;
}

Word seed_word(const GameParams& params, std::int64_t i, std::int64_t n) {
  if (params.k < 2) throw std::invalid_argument("seed words need k >= 2");
  if (i < 1 || i >= params.k) throw std::invalid_argument("tau index out of range");
  if (n < 0) throw std::invalid_argument("iteration count must be non-negative");
  Word word{0};
  for (std::int64_t t = 0; t < i; ++t) word.push_back(1);
  for (std::int64_t round = 0; round < n; ++round) word = phi_apply(params.k, word);
  attach_tau_indices(params.k, word);
  return word;
}

Word theta_word(const GameParams& params, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("word length must be >= 1");
  Word word{1};
  while (static_cast<std::int64_t>(word.size()) < length) {
    Word next;
    next.reserve(word.size() * static_cast<std::size_t>(params.k + 2));
    for (std::int32_t letter : word) {
      for (std::int64_t t = 0; t < params.k; ++t) next.push_back(1);
      next.push_back(0);
      if (letter == 1) next.push_back(1);
    }
    word = std::move(next);
  }
  word.resize(static_cast<std::size_t>(length));
  return word;
}

Word theta_based_word(const GameParams& params, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("word length must be >= 1");
  Word word;
  word.reserve(static_cast<std::size_t>(length));
  word.push_back(0);
  if (length > 1) {
    Word tail = theta_word(params, length - 1);
    word.insert(word.end(), tail.begin(), tail.end());
  }
  attach_tau_indices(params.k, word);
  return word;
}

Word word_from_steps(const BeattyTables& tables, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("word length must be >= 1");
  if (length > tables.n_max()) throw std::out_of_range("tables too small for requested length");
  const std::int64_t k = tables.params().k;
  Word word;
  word.reserve(static_cast<std::size_t>(length));
  for (std::int64_t j = 1; j <= length; ++j) word.push_back(tables.d(j) == k + 1 ? 0 : 1);
  attach_tau_indices(k, word);
  return word;
}

std::int32_t nth_letter(const GameParams& params, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("letter positions start at 1");
  std::int64_t bn = beatty_b(params, n);
  if (bn - beatty_b(params, n - 1) == params.k + 1) return 0;
  // count of tau letters among the first n equals b_n - (k+1) n
  std::int64_t ordinal = bn - (params.k + 1) * n;
  return static_cast<std::int32_t>((ordinal - 1) % params.k + 1);
}

std::vector<Syllable> syllable_decomposition(const Word& word) {
  if (word.empty() || word[0] != 0)
    throw std::invalid_argument("syllable decomposition needs a word starting with sigma");
  std::vector<Syllable> out;
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(word.size()); ++j) {
    if (word[static_cast<std::size_t>(j)] == 0) {
      if (!out.empty()) out.back().end = j;
      out.push_back(Syllable{j, static_cast<std::int64_t>(word.size())});
    }
  }
  return out;
}

WordStats count_stats(const Word& word, std::int64_t k) {
  WordStats stats;
  stats.letter_count = static_cast<std::int64_t>(word.size());
  for (std::int32_t letter : word) {
    if (letter == 0) ++stats.sigma_count;
    if (letter == k) ++stats.tau_k_count;
  }
  return stats;
}

bool check_word_matches_steps(const GameParams& params, std::int64_t length) {
  BeattyTables tables(params, length);
  Word word = phi_word_plain(params, length);
  for (std::int64_t j = 1; j <= length; ++j) {
    std::int64_t expected = word[static_cast<std::size_t>(j - 1)] == 0 ? params.k + 1 : params.k + 2;
    if (tables.d(j) != expected) return false;
  }
  return true;
}

bool check_tau_k_marks_double_step(const GameParams& params, std::int64_t length) {
  BeattyTables tables(params, length);
  Word word = phi_word(params, length);
  for (std::int64_t n = 1; n <= length; ++n) {
    bool is_tau_k = word[static_cast<std::size_t>(n - 1)] == params.k;
    if ((tables.c(n) == 2) != is_tau_k) return false;
  }
  return true;
}

bool check_window_balance(const GameParams& params, std::int64_t i, std::int64_t n,
                          std::int64_t sample_length) {
  if (n < 0) throw std::invalid_argument("window index must be non-negative");
  const std::int64_t window = extra_pair_at(params, i, n).g;
  const std::int64_t high = extra_pair_at(params, i, n - 1).g;
  if (sample_length < window) throw std::invalid_argument("sample shorter than the window");
  Word word = phi_word_plain(params, sample_length);
  std::int64_t count = 0;
  for (std::int64_t j = 0; j < window; ++j) count += word[static_cast<std::size_t>(j)] == 0;
  bool saw_high = false;
  bool saw_low = false;
  for (std::int64_t start = 0;; ++start) {
    if (count == high) {
      saw_high = true;
    } else if (count == high - 1) {
      saw_low = true;
    } else {
      return false;
    }
    if (start + window >= sample_length) break;
    count += word[static_cast<std::size_t>(start + window)] == 0;
    count -= word[static_cast<std::size_t>(start)] == 0;
  }
  // the lower count recurs with gaps on the order of g^i_{n+1}, so only a
  // sample that long past one window is guaranteed to expose both values
  if (sample_length >= window + extra_pair_at(params, i, n + 1).g && !(saw_high && saw_low))
    return false;
  return true;
}

std::vector<std::int64_t> sigma_window_counts(const Word& word, std::int64_t window) {
  if (window < 1 || window > static_cast<std::int64_t>(word.size()))
    throw std::invalid_argument("window must fit inside the word");
  std::int64_t count = 0;
  for (std::int64_t j = 0; j < window; ++j) count += word[static_cast<std::size_t>(j)] == 0;
  std::vector<std::int64_t> seen{count};
  for (std::int64_t start = 0; start + window < static_cast<std::int64_t>(word.size()); ++start) {
    count += word[static_cast<std::size_t>(start + window)] == 0;
    count -= word[static_cast<std::size_t>(start)] == 0;
    if (std::find(seen.begin(), seen.end(), count) == seen.end()) seen.push_back(count);
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

bool check_factor_sigma_counts(const GameParams& params, std::int64_t i, std::int64_t n,
                               std::int64_t* suffix_sigma_count) {
  if (n < -1) throw std::invalid_argument("factor level must be >= -1");
  const Word word = seed_word(params, i, n + 2);
  const std::int64_t len = static_cast<std::int64_t>(word.size());
  const std::int64_t factor_len = extra_pair_at(params, i, n + 1).g;
  const std::int64_t expected = extra_pair_at(params, i, n).g;
  std::vector<std::int64_t> sigma_prefix(static_cast<std::size_t>(len) + 1, 0);
  for (std::int64_t j = 0; j < len; ++j) {
    sigma_prefix[static_cast<std::size_t>(j + 1)] =
        sigma_prefix[static_cast<std::size_t>(j)] + (word[static_cast<std::size_t>(j)] == 0);
  }
  auto sigma_in = [&](std::int64_t first, std::int64_t last) {  // inclusive range
    return sigma_prefix[static_cast<std::size_t>(last + 1)] - sigma_prefix[static_cast<std::size_t>(first)];
  };
  for (std::int64_t end = factor_len - 1; end < len; ++end) {
    if (word[static_cast<std::size_t>(end)] != i) continue;
    std::int64_t count = sigma_in(end - factor_len + 1, end);
    if (end == len - 1) {
      if (suffix_sigma_count != nullptr) *suffix_sigma_count = count;
      continue;  // the suffix is recorded, never asserted
    }
    if (count != expected) return false;
  }
  return true;
}

bool check_binary_correspondence(const GameParams& params, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("word length must be >= 1");
  Word via_phi = phi_word_plain(params, length);
  Word via_theta;
  via_theta.push_back(0);
  if (length > 1) {
    Word tail = theta_word(params, length - 1);
    via_theta.insert(via_theta.end(), tail.begin(), tail.end());
  }
  return via_phi == via_theta;
}

AgreementReport check_constructions_agree(const GameParams& params, std::int64_t length) {
  BeattyTables tables(params, length);
  Word from_steps = word_from_steps(tables, length);
  Word from_phi = phi_word(params, length);
  Word from_theta = theta_based_word(params, length);
  for (std::int64_t j = 1; j <= length; ++j) {
    std::size_t idx = static_cast<std::size_t>(j - 1);
    if (from_steps[idx] != from_phi[idx] || from_phi[idx] != from_theta[idx]) {
      return AgreementReport{false, j};
    }
  }
  return AgreementReport{true, 0};
}

Word BinaryMorphism::apply(const Word& word) const {
  Word out;
  out.reserve(word.size() * std::max(image0.size(), image1.size()));
  for (std::int32_t letter : word) {
    const Word& image = letter == 0 ? image0 : image1;
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

BinaryMorphism compose(const BinaryMorphism& outer, const BinaryMorphism& inner) {
  return BinaryMorphism{outer.apply(inner.image0), outer.apply(inner.image1)};
}

BinaryMorphism exchange_morphism() { return BinaryMorphism{{1}, {0}}; }

BinaryMorphism eta_morphism() { return BinaryMorphism{{0, 1}, {0}}; }

BinaryMorphism eta_bar_morphism() { return BinaryMorphism{{1, 0}, {0}}; }

BinaryMorphism theta_morphism(const GameParams& params) {
  BinaryMorphism out;
  for (std::int64_t t = 0; t < params.k; ++t) out.image0.push_back(1);
  out.image0.push_back(0);
  out.image1 = out.image0;
  out.image1.push_back(1);
  return out;
}

BinaryMorphism standard_theta_morphism(const GameParams& params) {
  BinaryMorphism exchange_eta = compose(exchange_morphism(), eta_morphism());
  BinaryMorphism out = eta_morphism();
  for (std::int64_t t = 0; t < params.k; ++t) out = compose(exchange_eta, out);
  return out;
}

Word standard_sequence(const std::vector<std::int64_t>& directive, std::int64_t n) {
  if (n < -1) throw std::invalid_argument("sequence index must be >= -1");
  Word prev{1};  // s_{-1}
  Word cur{0};   // s_0
  if (n == -1) return prev;
  for (std::int64_t step = 1; step <= n; ++step) {
    if (step > static_cast<std::int64_t>(directive.size()))
      throw std::invalid_argument("directive too short");
    std::int64_t repeats = directive[static_cast<std::size_t>(step - 1)];
    if (repeats < 0 || (step > 1 && repeats < 1))
      throw std::invalid_argument("directive entries past the first must be positive");
    Word next;
    next.reserve(cur.size() * static_cast<std::size_t>(repeats) + prev.size());
    for (std::int64_t r = 0; r < repeats; ++r) next.insert(next.end(), cur.begin(), cur.end());
    next.insert(next.end(), prev.begin(), prev.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace gammak
