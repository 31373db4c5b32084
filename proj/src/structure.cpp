#include "multiform/structure.hpp"

#include <string>

#include "multiform/combinatorics.hpp"
#include "multiform/error.hpp"

namespace multiform {

namespace {

std::vector<FVector> pick(std::span<const FVector> tuple, std::span<const std::size_t> positions) {
  std::vector<FVector> out;
  out.reserve(positions.size());
  for (std::size_t i : positions) out.push_back(tuple[i]);
  return out;
}

std::map<IndexTuple, Residue> gram_of(const AlternatingForm& form, std::span<const FVector> basis) {
  std::map<IndexTuple, Residue> gram;
  std::vector<FVector> args(static_cast<std::size_t>(form.arity()));
  for (const IndexTuple& idx : combinations(static_cast<int>(basis.size()), form.arity())) {
    for (std::size_t i = 0; i < idx.size(); ++i) args[i] = basis[static_cast<std::size_t>(idx[i])];
    gram.emplace(idx, eval(form, args).value());
  }
  return gram;
}

void require_ambient(const AlternatingForm& form, std::span<const FVector> vs) {
  require_shape(vs, form.modulus(), static_cast<std::size_t>(form.dim()));
}

}  // namespace

std::vector<std::size_t> leftmost_support(std::span<const FVector> tuple) {
  std::vector<std::size_t> support;
  std::vector<FVector> chosen;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    chosen.push_back(tuple[i]);
    if (theta(chosen)) {
      support.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  return support;
}

Substructure generate(const AlternatingForm& form, std::span<const FVector> vectors) {
  require_ambient(form, vectors);
  Substructure sub;
  sub.form = std::make_shared<const AlternatingForm>(form);
  sub.basis = pick(vectors, leftmost_support(vectors));
  sub.gram = gram_of(form, sub.basis);
  return sub;
}

AtomicInvariant atomic_invariant(const AlternatingForm& form, std::span<const FVector> tuple) {
  require_ambient(form, tuple);
  AtomicInvariant inv;
  inv.p = form.modulus();
  inv.n = form.arity();
  inv.length = tuple.size();
  inv.support = leftmost_support(tuple);
  const std::vector<FVector> basis = pick(tuple, inv.support);
  for (const FVector& v : tuple) {
    auto c = coordinates(v, basis);
    if (!c) throw DomainError("tuple entry outside the span of its support");
    inv.coords.push_back(std::move(*c));
  }
  inv.form_values = gram_of(form, basis);
  return inv;
}

bool has_headroom(const Tower& tower, std::span<const FVector> tuple) {
  const auto rank_used = leftmost_support(tuple).size();
  return static_cast<std::size_t>(tower.top().dim()) >= rank_used + tuple.size();
}

bool equivalent(const Tower& a, std::span<const FVector> tuple_a, const Tower& b,
                std::span<const FVector> tuple_b) {
  if (a.top().modulus() != b.top().modulus() || a.top().arity() != b.top().arity()) {
    throw DimensionMismatch("forms over different fields or of different arity");
  }
  if (!has_headroom(a, tuple_a) || !has_headroom(b, tuple_b)) {
    throw InsufficientHeadroom("ambient dimension leaves no room to extend the tuple");
  }
  return atomic_invariant(a.top(), tuple_a) == atomic_invariant(b.top(), tuple_b);
}

bool PartialIso::is_valid() const {
  if (domain.size() != image.size()) return false;
  return atomic_invariant(*domain_form, domain) == atomic_invariant(*image_form, image);
}

PartialIso make_partial_iso(const AlternatingForm& domain_form, const AlternatingForm& image_form) {
  if (domain_form.modulus() != image_form.modulus() || domain_form.arity() != image_form.arity()) {
    throw DimensionMismatch("forms over different fields or of different arity");
  }
  PartialIso iso;
  iso.domain_form = std::make_shared<const AlternatingForm>(domain_form);
  iso.image_form = std::make_shared<const AlternatingForm>(image_form);
  return iso;
}

PartialIso extend_iso(const PartialIso& iso, const FVector& x) {
  const AlternatingForm& dom = *iso.domain_form;
  const AlternatingForm& img = *iso.image_form;
  const std::uint32_t p = dom.modulus();
  require_ambient(dom, std::span(&x, 1));
  if (!iso.is_valid()) throw DomainError("partial map does not preserve the atomic invariant");

  const std::vector<std::size_t> support = leftmost_support(iso.domain);
  const std::vector<FVector> dom_basis = pick(iso.domain, support);
  const std::vector<FVector> img_basis = pick(iso.image, support);

  PartialIso out = iso;
  out.domain.push_back(x);
  if (const auto c = coordinates(x, dom_basis)) {
    FVector y(p, static_cast<std::size_t>(img.dim()));
    for (std::size_t i = 0; i < c->size(); ++i) y.add_scaled(img_basis[i], (*c)[i]);
    out.image.push_back(std::move(y));
  } else {
    const int k = dom.arity() - 1;
    std::vector<WedgeVector> ts;
    std::vector<Scalar> ks;
    std::vector<FVector> args(static_cast<std::size_t>(dom.arity()));
    std::vector<FVector> sub(static_cast<std::size_t>(k));
    for (const IndexTuple& idx : combinations(static_cast<int>(support.size()), k)) {
      for (int i = 0; i < k; ++i) {
        args[static_cast<std::size_t>(i)] = dom_basis[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        sub[static_cast<std::size_t>(i)] = img_basis[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      }
      args.back() = x;
      ks.push_back(eval(dom, args));
      ts.push_back(wedge_of_vectors(sub));
    }
    try {
      out.image.push_back(find_w(img, ts, ks, img_basis));
    } catch (const NoSolution& e) {
      throw TargetExhausted(std::string("no witness in the image ambient: ") + e.what());
    }
  }
  if (!out.is_valid()) throw DomainError("extension broke the atomic invariant");
  return out;
}

PartialIso embed(const Substructure& sub, const AlternatingForm& target) {
  PartialIso iso = make_partial_iso(*sub.form, target);
  for (const FVector& v : sub.basis) iso = extend_iso(iso, v);
  if (gram_of(target, iso.image) != sub.gram) throw DomainError("embedding does not preserve the form");
  return iso;
}

}  // namespace multiform
