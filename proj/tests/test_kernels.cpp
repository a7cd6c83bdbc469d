#include <doctest.h>

#include <random>

#include "varpat/kernels.hpp"

using namespace varpat::kernels;

namespace {

std::vector<std::uint32_t> random_sequence(std::mt19937& rng, std::size_t length, std::size_t alphabet) {
  std::vector<std::uint32_t> seq(length);
  for (auto& c : seq) c = static_cast<std::uint32_t>(rng() % alphabet);
  for (std::uint32_t c = 0; c < alphabet && c < length; ++c) seq[c] = c;
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("run counts of a small word") {
    const std::vector<std::uint32_t> seq{0, 1, 0, 1, 2, 0, 2};  // agagcac
    const auto g = serial::run_counts(seq, 3);
    CHECK(g[0b001] == 3);
    CHECK(g[0b010] == 2);
    CHECK(g[0b011] == 2);
    CHECK(g[0b111] == 1);
    CHECK(parallel::tabulate(run_count_function(seq, 3)) == g);
    const auto layout = serial::minmax_layout(g, 3);
    CHECK(layout.value == 2);
    CHECK(layout.order == std::vector<std::uint32_t>{1, 0, 2});
  }

  TEST_CASE("quadratic form agrees with the direct scan") {
    std::mt19937 rng(11);
    for (int round = 0; round < 50; ++round) {
      const std::size_t alphabet = 1 + rng() % 9;
      const auto seq = random_sequence(rng, alphabet + rng() % 30, alphabet);
      const auto direct = serial::run_counts(seq, alphabet);
      const auto form = run_count_function(seq, alphabet);
      CHECK(serial::tabulate(form) == direct);
      CHECK(parallel::tabulate(form) == direct);

      const std::size_t n = 1 + rng() % 9;
      std::vector<Edge> edges;
      for (std::size_t e = rng() % 20; e > 0; --e) {
        const auto u = static_cast<std::uint32_t>(rng() % n);
        const auto v = static_cast<std::uint32_t>(rng() % n);
        if (u != v) edges.push_back({u, v});
      }
      const auto cuts = serial::cut_sizes(n, edges);
      CHECK(serial::tabulate(cut_function(n, edges)) == cuts);
      CHECK(parallel::tabulate(cut_function(n, edges)) == cuts);
    }
  }

  TEST_CASE("serial and parallel layouts are identical") {
    std::mt19937 rng(5);
    for (int round = 0; round < 40; ++round) {
      const std::size_t alphabet = 1 + rng() % 12;
      const auto seq = random_sequence(rng, alphabet + rng() % 40, alphabet);
      const auto g = serial::run_counts(seq, alphabet);
      const auto a = serial::minmax_layout(g, alphabet);
      const auto b = parallel::minmax_layout(g, alphabet);
      CHECK(a.value == b.value);
      CHECK(a.order == b.order);
      REQUIRE(a.order.size() == alphabet);
      Mask seen = 0;
      std::uint32_t worst = 0;
      for (const auto x : a.order) {
        seen |= Mask{1} << x;
        worst = std::max(worst, g[seen]);
      }
      CHECK(worst == a.value);
    }
  }

  TEST_CASE("empty set function") {
    const auto r = parallel::minmax_layout(std::vector<std::uint32_t>{0}, 0);
    CHECK(r.value == 0);
    CHECK(r.order.empty());
  }
}
