#pragma once

// Counting phi-types over finite sequences, the (dagger)_{f,eps} interval
// criterion with f(n) = n^dExp, composition of relations with arbitrary
// function tables, and the cardinality of array-shattering families.
//
// A RelationOracle has slots 0..k: slot 0 is the parameter y_0 (b), slots
// 1..k are the object variables. Elements of slot s are the integers
// [0, universes[s]).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "multiform/boxvc.hpp"
#include "multiform/ffla.hpp"
#include "multiform/form.hpp"

namespace multiform {

class RelationOracle {
 public:
  using Fn = std::function<bool(std::span<const std::size_t>)>;

  RelationOracle() = default;
  RelationOracle(std::vector<std::size_t> universes, Fn fn, std::string kind);

  std::size_t slots() const { return universes_.size(); }
  const std::vector<std::size_t>& universes() const { return universes_; }
  const std::string& kind() const { return kind_; }
  // Throws DomainError on a wrong argument count or out-of-range element.
  bool operator()(std::span<const std::size_t> args) const;

 private:
  std::vector<std::size_t> universes_;
  Fn fn_;
  std::string kind_;
};

// Bits of `table` indexed row-major over the product of `universes`.
RelationOracle table_oracle(std::vector<std::size_t> universes, Bitset table);
RelationOracle constant_oracle(std::vector<std::size_t> universes, bool value);
// Edge relation of g on slots 1..k; slot 0 is a dummy of size 1.
RelationOracle hypergraph_oracle(const PartiteHypergraph& g);
// phi(b; v_1, ..., v_{n-1}) := [<v_1, ..., v_{n-1}, b> = 0], vectors encoded
// by encode_vector. Throws SizeGuard when p^d > 2^20.
RelationOracle form_oracle(const AlternatingForm& form);

// Base-p digits, coordinate 0 least significant.
std::uint64_t encode_vector(const FVector& v);
FVector decode_vector(std::uint64_t code, std::uint32_t p, std::size_t d);

// Number of distinct traces (a_1, ..., a_{k-1}) -> phi(b, a_1, ..., a_{k-1}, c)
// on seqs[0] x ... x seqs[k-2] as c ranges over `window`.
std::size_t phi_types_realized(const RelationOracle& oracle, std::size_t b,
                               std::span<const std::vector<std::size_t>> seqs,
                               std::span<const std::size_t> window);

struct TypeCountReport {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double d_exp = 0;
  double eps = 0;
  // bound = 2^bound_exponent, bound_exponent = ceil(n^(k-1-eps)).
  std::uint64_t bound_exponent = 0;
  // Qualifying intervals have length >= m / n^dExp - 1; by monotonicity of
  // the type count only the shortest ones are scanned.
  std::size_t window_length = 0;
  std::size_t intervals_scanned = 0;
  std::vector<std::size_t> counts;
  // First passing interval [start, start + window_length).
  std::optional<std::size_t> pass_start;
  bool passed() const { return pass_start.has_value(); }
};

TypeCountReport dagger_check(const RelationOracle& oracle, std::size_t b,
                             std::span<const std::vector<std::size_t>> seqs,
                             std::span<const std::size_t> long_seq, double d_exp, double eps);

// Same criterion for an arbitrary f; d_exp is reported as 0.
TypeCountReport dagger_check_f(const RelationOracle& oracle, std::size_t b,
                               std::span<const std::vector<std::size_t>> seqs,
                               std::span<const std::size_t> long_seq,
                               const std::function<double(std::size_t)>& f, double eps);

// A function of some of the composed relation's slots into one slot of the
// base relation.
struct FunctionTable {
  // Composed-relation slots feeding the arguments, in argument order.
  std::vector<std::size_t> slots;
  // Row-major over the universes of `slots`.
  std::vector<std::size_t> values;
};

// psi(y_0, ..., y_k) := base(f_1(...), ..., f_D(...)) with D = base.slots()
// and k + 1 = universes.size(). Each function takes at most k arguments.
RelationOracle compose_relation(const RelationOracle& base, std::vector<FunctionTable> fns,
                                std::vector<std::size_t> universes);

// Evaluates the composed shape directly, without building an oracle.
bool substitute_directly(const RelationOracle& base, std::span<const FunctionTable> fns,
                         std::span<const std::size_t> universes,
                         std::span<const std::size_t> args);

struct FamilyCardinality {
  std::size_t count = 0;
  bool exact = false;
  std::uint64_t assignments_examined = 0;
};

// |{S_{zeta^1..zeta^k}}| for phi with k+1 slots, S = {i in [n]^k :
// phi(zeta^1_{i minus coordinate 1}, ..., zeta^k_{i minus coordinate k}, delta_i)}.
// zeta^t ranges over all arrays [n]^(k-1) -> universe of slot t-1 (0-based).
// Exact when the assignment space fits `budget`; otherwise `budget` seeded
// random assignments give a lower bound.
FamilyCardinality array_family_cardinality(const RelationOracle& phi, std::size_t n,
                                           std::span<const std::size_t> delta,
                                           std::uint64_t budget, std::uint64_t seed);

}  // namespace multiform
