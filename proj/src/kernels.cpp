#include "varpat/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>

#include "varpat/error.hpp"

namespace varpat::kernels {

namespace {

constexpr std::int64_t kParallelThreshold = 1 << 12;

void check_elements(std::size_t elements) {
  if (elements > kMaxLayoutElements) throw Error("too many elements for an exact subset DP");
}

std::uint32_t narrow(std::int64_t v) {
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) throw Error("set function out of range");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

QuadraticSetFunction run_count_function(std::span<const std::uint32_t> seq, std::size_t alphabet) {
  check_elements(alphabet);
  QuadraticSetFunction g;
  g.elements = alphabet;
  g.linear.assign(alphabet, 0);
  g.pair.assign(alphabet * alphabet, 0);
  // runs(S) = #{i : seq[i] in S} - #{i >= 1 : seq[i-1], seq[i] in S}
  for (std::size_t i = 0; i < seq.size(); ++i) {
    ++g.linear[seq[i]];
    if (i == 0) continue;
    const auto a = seq[i - 1];
    const auto b = seq[i];
    if (a == b) {
      --g.linear[a];
    } else {
      ++g.pair[a * alphabet + b];
      ++g.pair[b * alphabet + a];
    }
  }
  return g;
}

QuadraticSetFunction cut_function(std::size_t vertices, std::span<const Edge> edges) {
  check_elements(vertices);
  QuadraticSetFunction g;
  g.elements = vertices;
  g.linear.assign(vertices, 0);
  g.pair.assign(vertices * vertices, 0);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error("self-loop");
    ++g.linear[e.u];
    ++g.linear[e.v];
    g.pair[e.u * vertices + e.v] += 2;
    g.pair[e.v * vertices + e.u] += 2;
  }
  return g;
}

std::vector<std::uint32_t> extract_order(std::span<const std::uint32_t> f, std::size_t elements) {
  std::vector<std::uint32_t> order(elements);
  Mask s = elements == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << elements) - 1);
  for (std::size_t pos = elements; pos-- > 0;) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t pick = 0;
    for (std::uint32_t x = 0; x < elements; ++x) {
      if (!(s >> x & 1U)) continue;
      if (f[s & ~(Mask{1} << x)] < best) {
        best = f[s & ~(Mask{1} << x)];
        pick = x;
      }
    }
    order[pos] = pick;
    s &= ~(Mask{1} << pick);
  }
  return order;
}

namespace serial {

std::vector<std::uint32_t> run_counts(std::span<const std::uint32_t> seq, std::size_t alphabet) {
  check_elements(alphabet);
  const std::size_t total = std::size_t{1} << alphabet;
  std::vector<std::uint32_t> table(total, 0);
  for (std::size_t s = 0; s < total; ++s) {
    std::uint32_t runs = 0;
    bool inside = false;
    for (const auto c : seq) {
      const bool marked = (s >> c) & 1U;
      if (marked && !inside) ++runs;
      inside = marked;
    }
    table[s] = runs;
  }
  return table;
}

std::vector<std::uint32_t> cut_sizes(std::size_t vertices, std::span<const Edge> edges) {
  check_elements(vertices);
  const std::size_t total = std::size_t{1} << vertices;
  std::vector<std::uint32_t> table(total, 0);
  for (std::size_t s = 0; s < total; ++s) {
    std::uint32_t cut = 0;
    for (const Edge& e : edges) {
      if (((s >> e.u) & 1U) != ((s >> e.v) & 1U)) ++cut;
    }
    table[s] = cut;
  }
  return table;
}

std::vector<std::uint32_t> tabulate(const QuadraticSetFunction& g) {
  check_elements(g.elements);
  const std::size_t n = g.elements;
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint32_t> table(total, 0);
  for (std::size_t s = 0; s < total; ++s) {
    std::int64_t v = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (!((s >> a) & 1U)) continue;
      v += g.linear[a];
      for (std::size_t b = a + 1; b < n; ++b) {
        if ((s >> b) & 1U) v -= g.pair[a * n + b];
      }
    }
    table[s] = narrow(v);
  }
  return table;
}

LayoutResult minmax_layout(std::span<const std::uint32_t> g, std::size_t elements) {
  check_elements(elements);
  const std::size_t total = std::size_t{1} << elements;
  std::vector<std::uint32_t> f(total, 0);
  for (std::size_t s = 1; s < total; ++s) {
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (Mask rest = static_cast<Mask>(s); rest != 0; rest &= rest - 1) {
      const Mask bit = rest & (~rest + 1);
      best = std::min(best, f[s & ~bit]);
    }
    f[s] = std::max(g[s], best);
  }
  return {f[total - 1], extract_order(f, elements)};
}

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> tabulate(const QuadraticSetFunction& g) {
  check_elements(g.elements);
  const std::size_t n = g.elements;
  std::vector<std::uint32_t> table(std::size_t{1} << n, 0);
  bool overflow = false;
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t half = std::int64_t{1} << k;
    const std::int64_t* row = g.pair.data() + k * n;
    const std::int64_t base = g.linear[k];
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold) reduction(|| : overflow)
    for (std::int64_t t = 0; t < half; ++t) {
      std::int64_t v = static_cast<std::int64_t>(table[t]) + base;
      for (Mask rest = static_cast<Mask>(t); rest != 0; rest &= rest - 1) {
        v -= row[std::countr_zero(rest)];
      }
      if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) overflow = true;
      table[half + t] = static_cast<std::uint32_t>(v);
    }
  }
  if (overflow) throw Error("set function out of range");
  return table;
}

LayoutResult minmax_layout(std::span<const std::uint32_t> g, std::size_t elements) {
  check_elements(elements);
  const std::int64_t total = std::int64_t{1} << elements;
  std::vector<std::uint32_t> f(static_cast<std::size_t>(total), 0);
  for (int layer = 1; layer <= static_cast<int>(elements); ++layer) {
#pragma omp parallel for schedule(static) if (total >= kParallelThreshold)
    for (std::int64_t s = 1; s < total; ++s) {
      if (std::popcount(static_cast<Mask>(s)) != layer) continue;
      std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
      for (Mask rest = static_cast<Mask>(s); rest != 0; rest &= rest - 1) {
        const Mask bit = rest & (~rest + 1);
        best = std::min(best, f[static_cast<Mask>(s) & ~bit]);
      }
      f[s] = std::max(g[s], best);
    }
  }
  return {f[total - 1], extract_order(f, elements)};
}

}  // namespace parallel

}  // namespace varpat::kernels
