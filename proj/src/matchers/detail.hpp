#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "varpat/core.hpp"
#include "varpat/matchers.hpp"

namespace varpat::detail {

inline bool factors_equal(const Word& w, std::size_t a, std::size_t b, std::size_t len) {
  return std::equal(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(a + len),
                    w.begin() + static_cast<std::ptrdiff_t>(b));
}

inline Word slice(const Word& w, std::size_t start, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(start + len));
}

// Start positions of one representative per distinct factor of length len,
// in lexicographic order of the factors.
inline std::vector<std::size_t> distinct_factors(const Word& w, std::size_t len) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i + len <= w.size(); ++i) starts.push_back(i);
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(a),
                                        w.begin() + static_cast<std::ptrdiff_t>(a + len),
                                        w.begin() + static_cast<std::ptrdiff_t>(b),
                                        w.begin() + static_cast<std::ptrdiff_t>(b + len));
  };
  std::stable_sort(starts.begin(), starts.end(), less);
  starts.erase(std::unique(starts.begin(), starts.end(),
                           [&](std::size_t a, std::size_t b) { return factors_equal(w, a, b, len); }),
               starts.end());
  return starts;
}

// Re-applies the witness and refuses to hand out a wrong one.
inline MatchResult finish(std::span<const Symbol> symbols, const Word& w, MatchResult r) {
  if (r.matched) {
    if (!r.witness) throw std::logic_error("matcher reported a match without a witness");
    if (apply_substitution(symbols, *r.witness) != w) {
      throw std::logic_error(std::string("witness verification failed for ") +
                             std::string(to_string(r.algorithm_used)));
    }
  } else {
    r.witness.reset();
  }
  return r;
}

// Image placement of a one-variable factor gamma (exactly one distinct
// variable plus terminals) at `start` with image length `len`. The image is
// taken from the first variable occurrence.
struct OneVarFit {
  std::size_t end;
  std::size_t image_start;
};

inline std::optional<OneVarFit> fit_one_variable(std::span<const Symbol> gamma, const Word& w, std::size_t start,
                                                 std::size_t len) {
  std::size_t cur = start;
  std::optional<std::size_t> image;
  for (const Symbol& s : gamma) {
    if (s.is_terminal()) {
      if (cur >= w.size() || w[cur] != s.value) return std::nullopt;
      ++cur;
      continue;
    }
    if (cur + len > w.size()) return std::nullopt;
    if (!image) {
      image = cur;
    } else if (!factors_equal(w, *image, cur, len)) {
      return std::nullopt;
    }
    cur += len;
  }
  return OneVarFit{cur, image.value_or(start)};
}

// Regular-pattern core shared by match_regular and match_repvar: fills the
// images of the variables occurring in `symbols` (each at most once).
bool match_regular_into(std::span<const Symbol> symbols, const Word& w, std::vector<Word>& images,
                        MatchStats& stats);

inline void require_non_erasing(const MatchOptions& opts, Algorithm a) {
  if (opts.mode == SubstitutionMode::erasing || opts.injective) {
    throw Error(std::string("algorithm ") + std::string(to_string(a)) +
                " supports only non-erasing, non-injective matching");
  }
}

inline Substitution make_substitution(std::vector<Word> images) {
  return Substitution{std::move(images), SubstitutionMode::non_erasing};
}

}  // namespace varpat::detail
