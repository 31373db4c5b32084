#pragma once

// Set families over product boxes [n_1] x ... x [n_k], box shattering and
// VC_k dimension, the adversarial hypergraph R^{k-1}_{d,n}, random ordered
// partite hypergraphs, and monochromatic sub-box search.
//
// Cells of a product are flattened row-major with coordinate 1 outermost:
// (c_1, ..., c_k) -> ((c_1 * n_2 + c_2) * n_3 + ...) + c_k.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace multiform {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  std::size_t count() const;
  bool is_subset_of(const Bitset& o) const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool operator==(const Bitset&) const = default;
  auto operator<=>(const Bitset&) const = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t flatten_cell(std::span<const std::size_t> sizes, std::span<const std::size_t> cell);
std::size_t product_size(std::span<const std::size_t> sizes);

struct Box {
  // parts[i]: increasing indices into coordinate i.
  std::vector<std::vector<std::size_t>> parts;

  std::size_t arity() const { return parts.size(); }
  std::size_t cell_count() const;
  bool operator==(const Box&) const = default;
};

class BoxFamily {
 public:
  BoxFamily() = default;
  explicit BoxFamily(std::vector<std::size_t> sizes);

  std::size_t arity() const { return sizes_.size(); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t cell_count() const { return cells_; }
  const std::vector<Bitset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  void add(Bitset s);
  // Sorts the sets and drops repeats.
  void deduplicate();

  void write_binary(std::ostream& out) const;
  // Deduplicates on load. Throws DomainError on malformed input.
  static BoxFamily read_binary(std::istream& in);

 private:
  std::vector<std::size_t> sizes_;
  std::size_t cells_ = 0;
  std::vector<Bitset> sets_;
};

// Throws DomainError when the box does not fit the family's sizes.
bool shatters(const BoxFamily& fam, const Box& box);

// Number of distinct traces of the family on the box.
std::size_t trace_count(const BoxFamily& fam, const Box& box);

// Largest d such that some d-box is shattered; 0 when none is.
std::size_t vc_k(const BoxFamily& fam);

// Lexicographically first shattered d-box (coordinate 1 most significant,
// each part's subsets in lexicographic order), or nullopt.
std::optional<Box> sauer_shelah_search(const BoxFamily& fam, std::size_t d);

// k-partite hypergraph on parts [part_sizes[0]], ..., [part_sizes[k-1]], each
// ordered by the integers. Edges are stored as a bitset over the product.
struct PartiteHypergraph {
  std::vector<std::size_t> part_sizes;
  Bitset adjacency;

  PartiteHypergraph() = default;
  explicit PartiteHypergraph(std::vector<std::size_t> sizes);

  std::size_t arity() const { return part_sizes.size(); }
  bool has_edge(std::span<const std::size_t> vertices) const;
  void set_edge(std::span<const std::size_t> vertices, bool value = true);
  std::size_t edge_count() const { return adjacency.count(); }
  // All edges in lexicographic order.
  std::vector<std::vector<std::size_t>> edges() const;

  bool operator==(const PartiteHypergraph&) const = default;
};

// Parts of sizes (n, ..., n, 2d * 2^N) with N = n^(k-1). Vertex v = t * 2^N + a
// of the last part is adjacent to (a_1, ..., a_{k-1}) iff bit
// flatten(a_1, ..., a_{k-1}) of a is set. Throws SizeGuard when N > 20.
PartiteHypergraph build_bad_hypergraph(std::size_t k, std::size_t d, std::size_t n);

// Every potential edge present independently with probability 1/2.
PartiteHypergraph random_partite_extension_graph(std::span<const std::size_t> part_sizes,
                                                 std::uint64_t seed);

// Fraction of sampled extension demands met: a demand is two disjoint sets
// of `side` tuples from the first k-1 parts and b0 < b1 in the last part; it
// is met when some b strictly between them is adjacent to every tuple of the
// first set and to none of the second.
double extension_score(const PartiteHypergraph& g, std::size_t demands, std::size_t side,
                       std::uint64_t seed);

struct ColorArray {
  std::vector<std::size_t> sizes;
  std::vector<int> labels;  // row-major, coordinate 1 outermost

  int at(std::span<const std::size_t> cell) const { return labels[flatten_cell(sizes, cell)]; }
};

// Lexicographically first sub-box with the given part sizes on which the
// coloring is constant (with one index per coordinate a cell has a single
// order type, so indiscernibility means one color). nullopt when the
// target exceeds the array or no such box exists. Throws BudgetExceeded past
// `budget` candidate boxes.
std::optional<Box> indiscernible_subbox(const ColorArray& colors,
                                        std::span<const std::size_t> target_sizes,
                                        std::uint64_t budget);

}  // namespace multiform
