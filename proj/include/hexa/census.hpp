#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hexa/graph.hpp"
#include "hexa/lattice.hpp"
#include "hexa/polynomial.hpp"
#include "hexa/tiling.hpp"

namespace hexa {

struct CensusOptions {
  int workers = 1;
  std::uint64_t budget = 200'000'000;  // subsets visited
};

struct CensusRow {
  int rank = 0;
  int size = 0;
  int components = 0;  // among vertices touched by the set
  bool normal = true;
  BigInt count;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// All edge subsets of size <= max_size, grouped; rows sorted by
// (size, rank, components, normal).
std::vector<CensusRow> census(const Tiling& t, int max_size, const CensusOptions& opt = {});

// Sum of rows matching the filter.
BigInt census_count(std::span<const CensusRow> rows, int rank, int size, std::optional<int> components = {},
                    std::optional<bool> normal = {});

struct SubsetVisit {
  std::span<const EdgeId> edges;  // increasing
  int rank = 0;
  int components = 0;
  bool normal = true;
  int full_cells = 0;  // hexagons of the tiling contained in the set
};

// Calls fn for every subset of exactly `size` edges, in lexicographic order.
void for_each_subset(const Tiling& t, int size, const std::function<void(const SubsetVisit&)>& fn,
                     std::uint64_t budget = 200'000'000);

// Sum over shape classes with rank n-1 and size n of 4pq / sym.
// Precondition n <= l_H.
BigInt word_count_formula(const Tiling& t, int n);
// Same sum for any rank <= l_H - 1 and size <= l_H; counts connected normal sets.
BigInt word_count_formula(const Tiling& t, int rank, int size);

// Normal sets of rank r and size n containing a copy of the word's shape.
BigInt motif_count(const Tiling& t, const Word& w, int n, int r, std::uint64_t budget = 50'000'000);

// Edges joining (alpha, x) to (alpha + 1, x) inside the domain, alpha in [0, m-1].
std::vector<std::vector<EdgeId>> column_layers(const Tiling& t);
// First alpha whose layer misses the set, or nullopt.
std::optional<int> stratum_of(const std::vector<std::vector<EdgeId>>& layers, std::span<const EdgeId> a);

struct Strata {
  std::map<int, std::vector<std::vector<EdgeId>>> by_alpha;
  std::vector<std::vector<EdgeId>> undefined;  // every layer hit
};
// Normal sets of the given rank and size split by s(A); families r, a, b only.
Strata strata(const Tiling& t, int rank, int size, std::uint64_t budget = 200'000'000);

struct StratumCheck {
  int alpha = 0;
  std::uint64_t left = 0;   // sets in the stratum of the first tiling
  std::uint64_t right = 0;  // sets in the stratum of the second
  std::uint64_t forward_failures = 0;
  std::uint64_t backward_failures = 0;
};

struct BijectionReport {
  int case_number = 0;
  int rank = 0;
  int size = 0;
  std::vector<StratumCheck> strata;
  std::uint64_t unstratified = 0;  // sets with no empty layer, both sides
  std::vector<std::string> violations;  // first few, human readable
  bool ok = false;
};

// Case 1: H_{k,m,0} vs H_{k,m,r}; case 2: vs H_{k,m,a}; case 3: vs H_{k,m,b}.
// psi_offset shifts every moved row and exists for negative controls.
BijectionReport verify_bijection(const Tiling& t1, const Tiling& t2, int case_number, int rank, int size,
                                 int psi_offset = 0, std::uint64_t budget = 200'000'000);

struct Case4Report {
  int k = 0;
  std::uint64_t a = 0;      // normal, rank 2k+2
  std::uint64_t b = 0;      // normal, rank 2k+1
  std::uint64_t c = 0;      // not normal
  std::uint64_t other = 0;  // normal with any other rank
  std::uint64_t s = 0;      // normal sets of rank 2k+1, size 2k+2, with a hexagon
  BigInt lhs;               // (A + B + C)(2k - 3)
  BigInt rhs;               // s (|E| - 2k - 2)
  bool identity_ok = false;
};

// Sets of size 2k+3 that contain a hexagon, grouped.
Case4Report case4_decomposition(const Tiling& t, int k, std::uint64_t budget = 500'000'000);

struct Distinction {
  bool separated = false;
  int rank = 0;
  int size = 0;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  int max_size = 0;  // sizes compared
};

// First (rank, size) coefficient, by size then rank, where the graphs differ.
Distinction distinguish(const Multigraph& g1, const Multigraph& g2, int workers = 1,
                        std::uint64_t budget = 400'000'000);

}  // namespace hexa
