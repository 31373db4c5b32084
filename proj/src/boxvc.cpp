#include "multiform/boxvc.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "multiform/combinatorics.hpp"
#include "multiform/error.hpp"
#include "multiform/parallel.hpp"
#include "multiform/random.hpp"

namespace multiform {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  if (bits_ != o.bits_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t product_size(std::span<const std::size_t> sizes) {
  std::size_t total = 1;
  for (std::size_t s : sizes) total *= s;
  return total;
}

std::size_t flatten_cell(std::span<const std::size_t> sizes, std::span<const std::size_t> cell) {
  std::size_t flat = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) flat = flat * sizes[i] + cell[i];
  return flat;
}

std::size_t Box::cell_count() const {
  std::size_t c = 1;
  for (const auto& part : parts) c *= part.size();
  return c;
}

namespace {

// Flat indices of every cell of `box`, in row-major order.
std::vector<std::size_t> box_cells(std::span<const std::size_t> sizes, const Box& box) {
  std::vector<std::size_t> out;
  const std::size_t k = box.parts.size();
  for (const auto& part : box.parts) {
    if (part.empty()) return out;
  }
  std::vector<std::size_t> pos(k, 0);
  std::vector<std::size_t> cell(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) cell[i] = box.parts[i][pos[i]];
    out.push_back(flatten_cell(sizes, cell));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pos[i] < box.parts[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

void require_box(const BoxFamily& fam, const Box& box) {
  if (box.arity() != fam.arity()) throw DomainError("box arity differs from family arity");
  for (std::size_t i = 0; i < box.arity(); ++i) {
    const auto& part = box.parts[i];
    for (std::size_t j = 0; j < part.size(); ++j) {
      if (part[j] >= fam.sizes()[i] || (j > 0 && part[j - 1] >= part[j])) {
        throw DomainError("box part " + std::to_string(i) + " is out of range or not increasing");
      }
    }
  }
}

std::vector<std::size_t> to_indices(const IndexTuple& t) {
  return std::vector<std::size_t>(t.begin(), t.end());
}

// Enumerates boxes with part i drawn from an r_i-subset of [n_i], coordinate 1
// most significant.
class BoxEnumerator {
 public:
  BoxEnumerator(std::span<const std::size_t> sizes, std::span<const std::size_t> targets) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      choices_.push_back(combinations(static_cast<int>(sizes[i]), static_cast<int>(targets[i])));
      total_ = sat_mul(total_, choices_.back().size());
    }
  }
  std::uint64_t total() const { return total_; }
  Box at(std::uint64_t index) const {
    Box box;
    box.parts.resize(choices_.size());
    for (std::size_t i = choices_.size(); i-- > 0;) {
      const std::uint64_t radix = choices_[i].size();
      box.parts[i] = to_indices(choices_[i][static_cast<std::size_t>(index % radix)]);
      index /= radix;
    }
    return box;
  }

 private:
  static std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
  }
  std::vector<std::vector<IndexTuple>> choices_;
  std::uint64_t total_ = 1;
};

bool shatters_unchecked(const BoxFamily& fam, const Box& box) {
  const std::size_t cells = box.cell_count();
  if (cells >= 40) return false;
  const std::uint64_t patterns = std::uint64_t{1} << cells;
  if (patterns > fam.size()) return false;
  const auto flat = box_cells(fam.sizes(), box);
  std::vector<char> seen(static_cast<std::size_t>(patterns), 0);
  std::uint64_t distinct = 0;
  for (const Bitset& s : fam.sets()) {
    std::uint64_t trace = 0;
    for (std::size_t c = 0; c < flat.size(); ++c) {
      if (s.test(flat[c])) trace |= std::uint64_t{1} << c;
    }
    if (!seen[trace]) {
      seen[trace] = 1;
      if (++distinct == patterns) return true;
    }
  }
  return false;
}

void put_u64(std::ostream& out, std::uint64_t v) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(buf, 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8)) throw DomainError("truncated family file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | buf[i];
  return v;
}

constexpr char kMagic[4] = {'M', 'F', 'B', 'F'};
constexpr std::uint64_t kFormatVersion = 1;

}  // namespace

BoxFamily::BoxFamily(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw DomainError("box family needs arity at least 1");
  cells_ = product_size(sizes_);
}

void BoxFamily::add(Bitset s) {
  if (s.size() != cells_) throw DimensionMismatch("set length differs from the product size");
  sets_.push_back(std::move(s));
}

void BoxFamily::deduplicate() {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

void BoxFamily::write_binary(std::ostream& out) const {
  out.write(kMagic, 4);
  put_u64(out, kFormatVersion);
  put_u64(out, sizes_.size());
  for (std::size_t s : sizes_) put_u64(out, s);
  put_u64(out, sets_.size());
  for (const Bitset& s : sets_) {
    for (std::uint64_t w : s.words()) put_u64(out, w);
  }
}

BoxFamily BoxFamily::read_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw DomainError("not a box family file");
  if (get_u64(in) != kFormatVersion) throw DomainError("unsupported box family format version");
  const std::uint64_t k = get_u64(in);
  if (k == 0 || k > 64) throw DomainError("implausible family arity");
  std::vector<std::size_t> sizes;
  for (std::uint64_t i = 0; i < k; ++i) sizes.push_back(static_cast<std::size_t>(get_u64(in)));
  BoxFamily fam(std::move(sizes));
  const std::uint64_t count = get_u64(in);
  for (std::uint64_t i = 0; i < count; ++i) {
    Bitset s(fam.cells_);
    for (std::uint64_t& w : s.words()) w = get_u64(in);
    if (fam.cells_ % 64 != 0 && !s.words().empty() && (s.words().back() >> (fam.cells_ % 64)) != 0) {
      throw DomainError("set has bits beyond the product size");
    }
    fam.sets_.push_back(std::move(s));
  }
  fam.deduplicate();
  return fam;
}

bool shatters(const BoxFamily& fam, const Box& box) {
  require_box(fam, box);
  return shatters_unchecked(fam, box);
}

std::size_t trace_count(const BoxFamily& fam, const Box& box) {
  require_box(fam, box);
  const auto flat = box_cells(fam.sizes(), box);
  std::set<Bitset> traces;
  for (const Bitset& s : fam.sets()) {
    Bitset t(flat.size());
    for (std::size_t c = 0; c < flat.size(); ++c) t.set(c, s.test(flat[c]));
    traces.insert(std::move(t));
  }
  return traces.size();
}

std::optional<Box> sauer_shelah_search(const BoxFamily& fam, std::size_t d) {
  for (std::size_t s : fam.sizes()) {
    if (d > s) return std::nullopt;
  }
  const std::vector<std::size_t> targets(fam.arity(), d);
  const BoxEnumerator boxes(fam.sizes(), targets);
  const auto hit = parallel_find_first(static_cast<std::size_t>(boxes.total()), [&](std::size_t i) {
    return shatters_unchecked(fam, boxes.at(i));
  });
  if (!hit) return std::nullopt;
  return boxes.at(*hit);
}

std::size_t vc_k(const BoxFamily& fam) {
  std::size_t best = 0;
  for (std::size_t d = 1;; ++d) {
    const std::uint64_t cells = ipow(d, fam.arity());
    if (cells >= 40 || (std::uint64_t{1} << cells) > fam.size()) break;
    if (!sauer_shelah_search(fam, d)) break;
    best = d;
  }
  return best;
}

PartiteHypergraph::PartiteHypergraph(std::vector<std::size_t> sizes) : part_sizes(std::move(sizes)) {
  if (part_sizes.empty()) throw DomainError("hypergraph needs at least one part");
  adjacency = Bitset(product_size(part_sizes));
}

bool PartiteHypergraph::has_edge(std::span<const std::size_t> vertices) const {
  return adjacency.test(flatten_cell(part_sizes, vertices));
}

void PartiteHypergraph::set_edge(std::span<const std::size_t> vertices, bool value) {
  if (vertices.size() != part_sizes.size()) throw DimensionMismatch("edge arity differs from part count");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= part_sizes[i]) throw DomainError("edge vertex outside its part");
  }
  adjacency.set(flatten_cell(part_sizes, vertices), value);
}

std::vector<std::vector<std::size_t>> PartiteHypergraph::edges() const {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t k = part_sizes.size();
  for (std::size_t flat = 0; flat < adjacency.size(); ++flat) {
    if (!adjacency.test(flat)) continue;
    std::vector<std::size_t> e(k);
    std::size_t rest = flat;
    for (std::size_t i = k; i-- > 0;) {
      e[i] = rest % part_sizes[i];
      rest /= part_sizes[i];
    }
    out.push_back(std::move(e));
  }
  return out;
}

PartiteHypergraph build_bad_hypergraph(std::size_t k, std::size_t d, std::size_t n) {
  if (k < 2 || d < 1 || n < 1) throw DomainError("bad hypergraph needs k >= 2, d >= 1, n >= 1");
  const std::uint64_t big_n = ipow(n, k - 1);
  if (big_n > 20) throw SizeGuard("n^(k-1) = " + std::to_string(big_n) + " exceeds 20");
  const std::size_t subsets = std::size_t{1} << big_n;
  std::vector<std::size_t> sizes(k - 1, n);
  sizes.push_back(2 * d * subsets);
  PartiteHypergraph g(sizes);
  // The first k-1 coordinates flatten to the bit position, so the adjacency
  // index is (bit * |V_k|) + v.
  const std::size_t last = sizes.back();
  for (std::size_t bit = 0; bit < big_n; ++bit) {
    for (std::size_t v = 0; v < last; ++v) {
      if ((v % subsets) >> bit & 1u) g.adjacency.set(bit * last + v);
    }
  }
  return g;
}

PartiteHypergraph random_partite_extension_graph(std::span<const std::size_t> part_sizes,
                                                 std::uint64_t seed) {
  PartiteHypergraph g(std::vector<std::size_t>(part_sizes.begin(), part_sizes.end()));
  Rng rng(seed);
  for (std::size_t i = 0; i < g.adjacency.size(); ++i) g.adjacency.set(i, coin(rng));
  return g;
}

double extension_score(const PartiteHypergraph& g, std::size_t demands, std::size_t side,
                       std::uint64_t seed) {
  if (g.arity() < 2) throw DomainError("extension demands need at least two parts");
  const std::size_t last = g.part_sizes.back();
  const std::size_t heads = product_size(std::span(g.part_sizes).first(g.arity() - 1));
  if (last < 3) throw DomainError("last part needs at least three vertices");
  if (heads < 2 * side) throw DomainError("not enough tuples for disjoint demand sets");
  if (demands == 0) return 1.0;
  Rng rng(seed);
  std::size_t met = 0;
  for (std::size_t q = 0; q < demands; ++q) {
    std::vector<std::size_t> picked;
    while (picked.size() < 2 * side) {
      const auto h = static_cast<std::size_t>(uniform_below(rng, heads));
      if (std::find(picked.begin(), picked.end(), h) == picked.end()) picked.push_back(h);
    }
    std::size_t b0, b1;
    do {
      b0 = static_cast<std::size_t>(uniform_below(rng, last));
      b1 = static_cast<std::size_t>(uniform_below(rng, last));
    } while (b0 + 2 > b1);
    for (std::size_t b = b0 + 1; b < b1; ++b) {
      bool ok = true;
      for (std::size_t i = 0; i < picked.size() && ok; ++i) {
        const bool want = i < side;
        ok = g.adjacency.test(picked[i] * last + b) == want;
      }
      if (ok) {
        ++met;
        break;
      }
    }
  }
  return static_cast<double>(met) / static_cast<double>(demands);
}

std::optional<Box> indiscernible_subbox(const ColorArray& colors,
                                        std::span<const std::size_t> target_sizes,
                                        std::uint64_t budget) {
  if (target_sizes.size() != colors.sizes.size()) throw DimensionMismatch("target arity differs from array arity");
  if (colors.labels.size() != product_size(colors.sizes)) throw DimensionMismatch("label count differs from array size");
  for (std::size_t i = 0; i < target_sizes.size(); ++i) {
    if (target_sizes[i] == 0) throw DomainError("target sizes must be positive");
    if (target_sizes[i] > colors.sizes[i]) return std::nullopt;
  }
  const BoxEnumerator boxes(colors.sizes, target_sizes);
  for (std::uint64_t i = 0; i < boxes.total(); ++i) {
    if (i >= budget) throw BudgetExceeded("sub-box search exceeded " + std::to_string(budget) + " candidates");
    const Box box = boxes.at(i);
    const auto flat = box_cells(colors.sizes, box);
    const int first = colors.labels[flat.front()];
    if (std::all_of(flat.begin(), flat.end(), [&](std::size_t c) { return colors.labels[c] == first; })) {
      return box;
    }
  }
  return std::nullopt;
}

}  // namespace multiform
