#pragma once

// Finitely generated substructures of (V, F_p, theta, coord, <...>_n), their
// quantifier-free fingerprints, and the back-and-forth extension of partial
// isomorphisms between two forms.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "multiform/ffla.hpp"
#include "multiform/form.hpp"
#include "multiform/mform.hpp"

namespace multiform {

struct Substructure {
  std::shared_ptr<const AlternatingForm> form;
  std::vector<FVector> basis;
  // Form values on increasing n-tuples of basis positions, zeros included.
  std::map<IndexTuple, Residue> gram;
};

// Positions of the greedy leftmost maximal independent subtuple.
std::vector<std::size_t> leftmost_support(std::span<const FVector> tuple);

Substructure generate(const AlternatingForm& form, std::span<const FVector> vectors);

struct AtomicInvariant {
  std::uint32_t p = 2;
  int n = 2;
  std::size_t length = 0;
  std::vector<std::size_t> support;
  // coords[i]: coordinates of tuple entry i over the support vectors.
  std::vector<std::vector<Residue>> coords;
  // Keys are increasing n-tuples of support ordinals; zeros included.
  std::map<IndexTuple, Residue> form_values;

  bool operator==(const AtomicInvariant&) const = default;
};

AtomicInvariant atomic_invariant(const AlternatingForm& form, std::span<const FVector> tuple);

// top().dim() - rank(tuple) >= |tuple|.
bool has_headroom(const Tower& tower, std::span<const FVector> tuple);

// Equality of atomic invariants. Both towers must share (p, n) and have
// headroom for their tuple, otherwise InsufficientHeadroom / DimensionMismatch.
bool equivalent(const Tower& a, std::span<const FVector> tuple_a, const Tower& b,
                std::span<const FVector> tuple_b);

struct PartialIso {
  std::shared_ptr<const AlternatingForm> domain_form;
  std::shared_ptr<const AlternatingForm> image_form;
  std::vector<FVector> domain;
  std::vector<FVector> image;

  bool is_valid() const;
};

PartialIso make_partial_iso(const AlternatingForm& domain_form, const AlternatingForm& image_form);

// Adds x to the domain. A vector in the span of the domain goes to the forced
// combination; otherwise a fresh witness is found in the image ambient.
// Throws TargetExhausted when no witness exists there.
PartialIso extend_iso(const PartialIso& iso, const FVector& x);

// Maps the basis of `sub` into `target` one vector at a time.
PartialIso embed(const Substructure& sub, const AlternatingForm& target);

}  // namespace multiform
