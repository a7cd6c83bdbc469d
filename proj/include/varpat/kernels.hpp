#pragma once

// Subset dynamic programs shared by the exact locality number and the exact
// cutwidth. Both parameters are min-max layouts
//
//   f(S) = max(g(S), min_{x in S} f(S \ {x})),   f(empty) = 0,
//
// over a set function g: g(S) = number of maximal runs of positions carrying
// symbols of S (locality), or the number of edges leaving S (cutwidth). Both g
// are quadratic set functions, which is what the parallel tabulation exploits.
//
// Every kernel exists twice: `serial::` is the reference (definitional where
// possible) and `parallel::` is the OpenMP version used by the public API.
// Both produce bit-identical results, including tie-breaking.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace varpat::kernels {

using Mask = std::uint32_t;

inline constexpr std::size_t kMaxLayoutElements = 24;

struct Edge {
  std::uint32_t u;
  std::uint32_t v;
};

// g(S) = sum_{a in S} linear[a] - sum_{a<b, a,b in S} pair[a*n+b]
struct QuadraticSetFunction {
  std::size_t elements = 0;
  std::vector<std::int64_t> linear;
  std::vector<std::int64_t> pair;  // symmetric, row-major, diagonal unused
};

// seq holds dense symbol codes in [0, alphabet).
QuadraticSetFunction run_count_function(std::span<const std::uint32_t> seq, std::size_t alphabet);
// Edges are 0-indexed; parallel edges count with multiplicity.
QuadraticSetFunction cut_function(std::size_t vertices, std::span<const Edge> edges);

struct LayoutResult {
  std::uint32_t value = 0;
  std::vector<std::uint32_t> order;  // element order achieving `value`
};

// Reads the optimal order back out of a filled f table. Shared by both
// variants so witnesses agree.
std::vector<std::uint32_t> extract_order(std::span<const std::uint32_t> f, std::size_t elements);

namespace serial {

// Scans `seq` once per subset: O(2^n * |seq|).
std::vector<std::uint32_t> run_counts(std::span<const std::uint32_t> seq, std::size_t alphabet);
// Scans the edge list once per subset: O(2^n * |E|).
std::vector<std::uint32_t> cut_sizes(std::size_t vertices, std::span<const Edge> edges);
// Evaluates the quadratic form directly per subset: O(2^n * n^2).
std::vector<std::uint32_t> tabulate(const QuadraticSetFunction& g);

LayoutResult minmax_layout(std::span<const std::uint32_t> g, std::size_t elements);

}  // namespace serial

namespace parallel {

// Highest-bit recurrence g(2^k + T) = g(T) + linear[k] - sum_{b in T} pair[k][b],
// one parallel sweep per k.
std::vector<std::uint32_t> tabulate(const QuadraticSetFunction& g);

// Popcount layers are independent; each layer is one parallel sweep.
LayoutResult minmax_layout(std::span<const std::uint32_t> g, std::size_t elements);

}  // namespace parallel

}  // namespace varpat::kernels
