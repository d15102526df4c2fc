#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hexa/graph.hpp"
#include "hexa/polynomial.hpp"

namespace hexa {

inline constexpr int kSubsetEdgeCap = 30;

// counts[i][j] = number of edge subsets with rank i and j edges.
struct RankSizeTable {
  int max_size = 0;  // sizes above this were not enumerated
  std::vector<std::vector<std::uint64_t>> counts;

  std::uint64_t at(int rank, int size) const;
  friend bool operator==(const RankSizeTable&, const RankSizeTable&) = default;
};

// Number of subsets with at most max_size of m edges, saturating.
std::uint64_t subset_count_up_to(int m, int max_size);
// Exactly `size` edges, saturating.
std::uint64_t subset_count(int m, int size);

struct EnumerationOptions {
  int workers = 1;
  // Largest number of subsets the caller is willing to visit.
  std::uint64_t budget = 200'000'000;
};

// Throws BudgetError if the subsets of size <= max_size exceed the budget.
RankSizeTable rank_size(const Multigraph& g, std::optional<int> max_size = std::nullopt,
                        const EnumerationOptions& opt = {});
std::uint64_t coefficient(const Multigraph& g, int rank, int size, const EnumerationOptions& opt = {});

BivariatePolynomial rank_size_polynomial(const RankSizeTable& t);
// (xy)^{r(E)} T((xy+1)/(xy), y+1), expanded.
BivariatePolynomial rank_size_from_tutte(const BivariatePolynomial& tutte, int full_rank);
BivariatePolynomial tutte_from_rank_size(const RankSizeTable& t, int full_rank);

// Sum over all subsets; |E| <= kSubsetEdgeCap.
BivariatePolynomial tutte_subset(const Multigraph& g, const EnumerationOptions& opt = {});

struct TutteOptions {
  int workers = 1;
  int cache_max_edges = 24;           // only graphs this small enter the memo table
  std::size_t cache_max_entries = 5'000'000;
};

struct TutteStats {
  std::uint64_t calls = 0;
  std::uint64_t cache_hits = 0;
  std::size_t cache_entries = 0;
};

// Deletion-contraction with loop, bridge, component and parallel-bundle
// reductions, memoised on canonical certificates.
BivariatePolynomial tutte_dc(const Multigraph& g, const TutteOptions& opt = {}, TutteStats* stats = nullptr);

// Matrix-tree determinant by fraction-free elimination; 0 when disconnected.
BigInt spanning_tree_count(const Multigraph& g);

}  // namespace hexa
