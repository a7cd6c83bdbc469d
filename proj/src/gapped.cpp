#include "varpat/gapped.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>

namespace varpat {

namespace {

bool alpha_gapped(std::size_t arm, std::size_t gap, Ratio alpha) {
  return alpha.q * (arm + gap) <= alpha.p * arm;
}

void validate(const Word& w, Ratio alpha) {
  if (alpha.q == 0 || alpha.p < alpha.q) throw Error("alpha must be at least 1");
  if (w.size() < 2) throw Error("word must have length at least 2");
}

// Maximal runs of w[i] == w[i + d]. A run of length L <= d is the repeat
// w[l..l+L) w[l+L..l+d) w[l+d..l+d+L).
void scan_period(const Word& w, std::size_t d, Ratio alpha, std::vector<GappedOccurrence>& out) {
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i + d < n) {
    if (w[i] != w[i + d]) {
      ++i;
      continue;
    }
    const std::size_t l = i;
    while (i + d < n && w[i] == w[i + d]) ++i;
    const std::size_t len = i - l;
    if (len <= d && alpha_gapped(len, d - len, alpha)) out.push_back({l + 1, len, d - len, GappedKind::repeat});
  }
}

// Pairs (i, c - i) with i < c - i, walked from the outside in.
void scan_centre(const Word& w, std::size_t c, Ratio alpha, std::vector<GappedOccurrence>& out) {
  const std::size_t n = w.size();
  std::size_t i = c >= n ? c - (n - 1) : 0;
  while (2 * i < c) {
    if (w[i] != w[c - i]) {
      ++i;
      continue;
    }
    const std::size_t l = i;
    while (2 * i < c && w[i] == w[c - i]) ++i;
    const std::size_t arm = i - l;
    const std::size_t inner = i - 1;
    const std::size_t gap = c - 2 * inner - 1;
    if (alpha_gapped(arm, gap, alpha)) out.push_back({l + 1, arm, gap, GappedKind::palindrome});
  }
}

template <typename Scan>
std::vector<GappedOccurrence> collect_serial(std::size_t lo, std::size_t hi, Scan scan) {
  std::vector<GappedOccurrence> out;
  for (std::size_t x = lo; x < hi; ++x) scan(x, out);
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Scan>
std::vector<GappedOccurrence> collect_parallel(std::size_t lo, std::size_t hi, Scan scan) {
  std::vector<std::vector<GappedOccurrence>> parts(static_cast<std::size_t>(omp_get_max_threads()));
  const auto count = static_cast<std::ptrdiff_t>(hi - lo);
#pragma omp parallel
  {
    auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (std::ptrdiff_t k = 0; k < count; ++k) scan(lo + static_cast<std::size_t>(k), local);
  }
  std::vector<GappedOccurrence> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Ratio parse_ratio(std::string_view text) {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ParseError("invalid ratio '" + std::string(text) + "'", 0);
    }
    return v;
  };
  Ratio r;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.p = parse_uint(text);
    r.q = 1;
  } else {
    r.p = parse_uint(text.substr(0, slash));
    r.q = parse_uint(text.substr(slash + 1));
  }
  if (r.q == 0) throw ParseError("invalid ratio '" + std::string(text) + "'", slash + 1);
  if (r.p < r.q) throw Error("alpha must be at least 1");
  return r;
}

std::string to_string(Ratio r) {
  return r.q == 1 ? std::to_string(r.p) : std::to_string(r.p) + "/" + std::to_string(r.q);
}

std::string_view to_string(GappedKind k) { return k == GappedKind::repeat ? "repeat" : "palindrome"; }

namespace gapped {

namespace serial {

std::vector<GappedOccurrence> repeats(const Word& w, Ratio alpha) {
  return collect_serial(1, w.size(), [&](std::size_t d, auto& out) { scan_period(w, d, alpha, out); });
}

std::vector<GappedOccurrence> palindromes(const Word& w, Ratio alpha) {
  if (w.size() < 2) return {};
  return collect_serial(1, 2 * w.size() - 2, [&](std::size_t c, auto& out) { scan_centre(w, c, alpha, out); });
}

}  // namespace serial

namespace parallel {

std::vector<GappedOccurrence> repeats(const Word& w, Ratio alpha) {
  return collect_parallel(1, w.size(), [&](std::size_t d, auto& out) { scan_period(w, d, alpha, out); });
}

std::vector<GappedOccurrence> palindromes(const Word& w, Ratio alpha) {
  if (w.size() < 2) return {};
  return collect_parallel(1, 2 * w.size() - 2, [&](std::size_t c, auto& out) { scan_centre(w, c, alpha, out); });
}

}  // namespace parallel

}  // namespace gapped

std::vector<GappedOccurrence> find_maximal_gapped_repeats(const Word& w, Ratio alpha) {
  validate(w, alpha);
  return gapped::parallel::repeats(w, alpha);
}

std::vector<GappedOccurrence> find_maximal_gapped_palindromes(const Word& w, Ratio alpha) {
  validate(w, alpha);
  return gapped::parallel::palindromes(w, alpha);
}

}  // namespace varpat
