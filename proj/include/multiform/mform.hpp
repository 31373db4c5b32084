#pragma once

// Evaluation, non-degeneracy and genericity of alternating forms, dual tuples,
// the prescribed-pairing solver, and the chain of extensions that kills the
// radical one step at a time.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "multiform/exterior.hpp"
#include "multiform/ffla.hpp"
#include "multiform/form.hpp"

namespace multiform {

// Largest ambient dimension extend_step will produce.
constexpr int kMaxTowerDim = 64;

// Multilinear alternating extension of the stored coefficients to n vectors.
Scalar eval(const AlternatingForm& form, std::span<const FVector> vs);

// Basis of ker(psi_matrix(form)) as wedge vectors.
std::vector<WedgeVector> radical(const AlternatingForm& form);

// Empty radical. Vacuously true when d < n-1.
bool is_nondegenerate(const AlternatingForm& form);

// phi_matrix over the standard basis is surjective.
bool is_generic(const AlternatingForm& form);

struct DualTuples {
  std::vector<WedgeVector> ts;
  std::vector<FVector> us;
};

// Wedge basis of span(w_basis) and vectors u_j with pairing2(t_i, u_j) = delta_ij.
// Throws NotGenericHere when no such u_j exists in the ambient space.
DualTuples dual_tuples(const AlternatingForm& form, std::span<const FVector> w_basis);

// A vector w independent of U with pairing2(ts[i], w) = ks[i]. Takes the
// particular solution of the pairing system, or else the first
// particular + kernel-basis vector that escapes span(U).
// Throws NoSolution when none exists, DomainError on dependent ts or U.
FVector find_w(const AlternatingForm& form, std::span<const WedgeVector> ts,
               std::span<const Scalar> ks, std::span<const FVector> U);

// Appends one fresh vector per radical basis element. The fresh vector w_i
// pairs to delta_ij with the wedge basis (radical basis first, then
// lexicographic standard wedges); coefficients involving two or more fresh
// vectors are 0. Returns the input unchanged when it is non-degenerate.
// Throws SizeGuard past kMaxTowerDim.
AlternatingForm extend_step(const AlternatingForm& form);

struct TowerCertificate {
  int from_dim = 0;
  int to_dim = 0;
  std::size_t radical_size = 0;
  // Rank of the new psi restricted to the old wedge columns, and the rank
  // that injectivity requires, C(from_dim, n-1).
  std::size_t restricted_rank = 0;
  std::size_t required_rank = 0;
  bool passed() const { return restricted_rank == required_rank; }
};

struct Tower {
  std::vector<AlternatingForm> levels;
  std::vector<TowerCertificate> certificates;
  const AlternatingForm& top() const { return levels.back(); }
};

TowerCertificate certify_step(const AlternatingForm& from, const AlternatingForm& to);

// Iterates extend_step `steps` times. Throws DomainError if a certificate
// fails (it cannot by construction; the check is the point).
Tower certify_tower(const AlternatingForm& form0, int steps);

// For every (n-1)-dimensional subspace, enumerated by reduced echelon
// bases, some vector pairs nontrivially with it. Throws TooLarge when the
// number of subspaces exceeds the enumeration budget (default 10^6).
bool nondeg_pure_tensors_bruteforce(const AlternatingForm& form);

// Uniform coefficients on increasing tuples, lexicographic draw order.
AlternatingForm random_form(std::uint32_t p, int n, int d, std::uint64_t seed);

// c * e_0 ^ ... ^ e_{n-1} on F_p^n.
AlternatingForm volume_form(std::uint32_t p, int n, std::int64_t c = 1);

// <e_{2i}, e_{2i+1}> = 1; a trailing odd coordinate is radical.
AlternatingForm standard_symplectic(std::uint32_t p, int d);

}  // namespace multiform
