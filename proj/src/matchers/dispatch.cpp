#include "detail.hpp"
#include "varpat/structure.hpp"

namespace varpat {

namespace {

constexpr std::pair<Algorithm, std::string_view> kAlgorithmNames[] = {
    {Algorithm::automatic, "auto"},   {Algorithm::brute, "brute"},   {Algorithm::regular, "regular"},
    {Algorithm::noncross, "noncross"}, {Algorithm::scd, "scd"},       {Algorithm::repvar, "repvar"},
    {Algorithm::local, "local"},       {Algorithm::repetition, "repetition"},
};

MatchResult literal_match(const Pattern& p, const Word& w, Algorithm tag) {
  MatchResult r;
  r.algorithm_used = tag;
  r.matched = apply_substitution(p.symbols(), Substitution{}) == w;
  if (r.matched) r.witness = detail::make_substitution(std::vector<Word>(p.table_size()));
  return detail::finish(p.symbols(), w, std::move(r));
}

Pattern power(const Pattern& beta, std::size_t k) {
  SymbolSeq s;
  for (std::size_t i = 0; i < k; ++i) s.insert(s.end(), beta.symbols().begin(), beta.symbols().end());
  return Pattern(std::move(s), beta.variable_names());
}

MatchResult run_forced(const Pattern& p, const Word& w, Algorithm a) {
  switch (a) {
    case Algorithm::regular:
      return match_regular(p, w);
    case Algorithm::noncross:
      return match_non_cross(p, w);
    case Algorithm::scd: {
      const std::size_t k = p.has_variables() ? scope_coincidence_degree(p) : 0;
      return match_scd(p, w, k);
    }
    case Algorithm::repvar:
      return match_repvar(p, w, p.has_variables() ? repeated_variables(p).size() : 0);
    case Algorithm::local: {
      if (!p.has_variables()) return match_k_local(p, w, 1, {});
      if (p.variables().size() > kMaxLocalitySymbols) throw Error("alphabet too large for exact locality");
      const auto loc = locality_number(p);
      return match_k_local(p, w, loc.k, loc.witness);
    }
    case Algorithm::repetition: {
      auto rep = as_repetition(p);
      if (!rep) throw Error("wrong class: pattern is not a repetition");
      return match_repetition(rep->first, rep->second, w);
    }
    default:
      throw std::logic_error("unexpected algorithm");
  }
}

}  // namespace

std::string_view to_string(Algorithm a) {
  for (const auto& [alg, name] : kAlgorithmNames) {
    if (alg == a) return name;
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  for (const auto& [alg, n] : kAlgorithmNames) {
    if (n == name) return alg;
  }
  return std::nullopt;
}

std::optional<std::pair<Pattern, std::size_t>> as_repetition(const Pattern& p) {
  const auto [root, exponent] = root_length_and_exponent(p.symbols());
  if (exponent < 2) return std::nullopt;
  SymbolSeq beta(p.symbols().begin(), p.symbols().begin() + static_cast<std::ptrdiff_t>(root));
  return std::pair{Pattern(std::move(beta), p.variable_names()), exponent};
}

MatchResult match_repetition(const Pattern& beta, std::size_t k, const Word& w) {
  if (k < 2) throw Error("repetition exponent must be at least 2");
  MatchResult r;
  r.algorithm_used = Algorithm::repetition;
  const Pattern full = power(beta, k);
  const std::size_t n = w.size();
  if (n % k != 0) return detail::finish(full.symbols(), w, std::move(r));
  const std::size_t m = n / k;
  for (std::size_t i = 1; i < k; ++i) {
    if (!detail::factors_equal(w, 0, i * m, m)) return detail::finish(full.symbols(), w, std::move(r));
  }
  const Word v = detail::slice(w, 0, m);
  MatchResult inner = match(beta, v);
  r.matched = inner.matched;
  r.stats = inner.stats;
  r.witness = std::move(inner.witness);
  return detail::finish(full.symbols(), w, std::move(r));
}

MatchResult match(const Pattern& p, const Word& w, const MatchOptions& opts) {
  if (opts.algorithm == Algorithm::brute) return match_brute(p, w, opts);
  if (opts.algorithm != Algorithm::automatic) {
    detail::require_non_erasing(opts, opts.algorithm);
    return run_forced(p, w, opts.algorithm);
  }
  if (opts.mode == SubstitutionMode::erasing || opts.injective) return match_brute(p, w, opts);
  if (!p.has_variables()) return literal_match(p, w, Algorithm::regular);

  const auto symbols = p.symbols();
  if (is_regular(symbols)) return match_regular(p, w);
  const std::size_t repeated = repeated_variables(p).size();
  if (repeated <= 2) return match_repvar(p, w, repeated);
  const std::size_t scd = scope_coincidence_degree(symbols);
  if (scd <= 1) return match_non_cross(p, w);
  if (auto rep = as_repetition(p)) return match_repetition(rep->first, rep->second, w);
  if (scd <= 3) return match_scd(p, w, scd);
  if (p.variables().size() <= kMaxLocalitySymbols) {
    const auto loc = locality_number(p);
    if (loc.k <= 2) return match_k_local(p, w, loc.k, loc.witness);
  }
  return match_brute(p, w, opts);
}

}  // namespace varpat
