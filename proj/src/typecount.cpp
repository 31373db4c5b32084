#include "multiform/typecount.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <set>

#include "multiform/combinatorics.hpp"
#include "multiform/error.hpp"
#include "multiform/mform.hpp"
#include "multiform/parallel.hpp"
#include "multiform/random.hpp"

namespace multiform {

RelationOracle::RelationOracle(std::vector<std::size_t> universes, Fn fn, std::string kind)
    : universes_(std::move(universes)), fn_(std::move(fn)), kind_(std::move(kind)) {
  if (universes_.empty()) throw DomainError("relation needs at least one slot");
  for (std::size_t u : universes_) {
    if (u == 0) throw DomainError("relation universes must be nonempty");
  }
}

bool RelationOracle::operator()(std::span<const std::size_t> args) const {
  if (args.size() != universes_.size()) throw DimensionMismatch("wrong number of relation arguments");
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] >= universes_[i]) throw DomainError("relation argument outside its universe");
  }
  return fn_(args);
}

RelationOracle table_oracle(std::vector<std::size_t> universes, Bitset table) {
  if (table.size() != product_size(universes)) throw DimensionMismatch("table size differs from the product of universes");
  auto shared = std::make_shared<const Bitset>(std::move(table));
  auto sizes = universes;
  return RelationOracle(
      std::move(universes),
      [shared, sizes](std::span<const std::size_t> a) { return shared->test(flatten_cell(sizes, a)); },
      "table");
}

RelationOracle constant_oracle(std::vector<std::size_t> universes, bool value) {
  return RelationOracle(std::move(universes), [value](std::span<const std::size_t>) { return value; },
                        "constant");
}

RelationOracle hypergraph_oracle(const PartiteHypergraph& g) {
  auto shared = std::make_shared<const PartiteHypergraph>(g);
  std::vector<std::size_t> universes{1};
  universes.insert(universes.end(), g.part_sizes.begin(), g.part_sizes.end());
  return RelationOracle(
      std::move(universes),
      [shared](std::span<const std::size_t> a) { return shared->has_edge(a.subspan(1)); }, "hypergraph");
}

std::uint64_t encode_vector(const FVector& v) {
  std::uint64_t code = 0;
  for (std::size_t i = v.dim(); i-- > 0;) code = code * v.modulus() + v[i];
  return code;
}

FVector decode_vector(std::uint64_t code, std::uint32_t p, std::size_t d) {
  FVector v(p, d);
  for (std::size_t i = 0; i < d; ++i) {
    v.set(i, static_cast<Residue>(code % p));
    code /= p;
  }
  return v;
}

RelationOracle form_oracle(const AlternatingForm& form) {
  const std::uint64_t size = ipow(form.modulus(), static_cast<std::uint64_t>(form.dim()));
  if (size > (std::uint64_t{1} << 20)) throw SizeGuard("form oracle universe p^d exceeds 2^20");
  auto shared = std::make_shared<const AlternatingForm>(form);
  const std::vector<std::size_t> universes(static_cast<std::size_t>(form.arity()), static_cast<std::size_t>(size));
  return RelationOracle(
      universes,
      [shared](std::span<const std::size_t> a) {
        const auto d = static_cast<std::size_t>(shared->dim());
        std::vector<FVector> vs;
        vs.reserve(a.size());
        for (std::size_t i = 1; i < a.size(); ++i) vs.push_back(decode_vector(a[i], shared->modulus(), d));
        vs.push_back(decode_vector(a[0], shared->modulus(), d));
        return eval(*shared, vs).is_zero();
      },
      "form");
}

namespace {

// Trace of c on seqs[0] x ... x seqs[k-2], row-major.
Bitset trace_of(const RelationOracle& oracle, std::size_t b,
                std::span<const std::vector<std::size_t>> seqs, std::size_t c) {
  const std::size_t k1 = seqs.size();
  std::size_t cells = 1;
  for (const auto& s : seqs) cells *= s.size();
  Bitset t(cells);
  std::vector<std::size_t> args(k1 + 2);
  args[0] = b;
  args[k1 + 1] = c;
  std::vector<std::size_t> pos(k1, 0);
  for (std::size_t flat = 0; flat < cells; ++flat) {
    for (std::size_t i = 0; i < k1; ++i) args[i + 1] = seqs[i][pos[i]];
    t.set(flat, oracle(args));
    for (std::size_t i = k1; i-- > 0;) {
      if (++pos[i] < seqs[i].size()) break;
      pos[i] = 0;
    }
  }
  return t;
}

void require_type_shape(const RelationOracle& oracle, std::span<const std::vector<std::size_t>> seqs) {
  if (oracle.slots() < 2) throw DomainError("type counting needs at least one object slot");
  if (seqs.size() + 2 != oracle.slots()) throw DimensionMismatch("need one sequence per slot 1..k-1");
}

std::size_t window_length_for(std::size_t m, double f) {
  if (!(f > 0)) throw DomainError("f(n) must be positive");
  const double rounded = std::nearbyint(f);
  if (std::abs(f - rounded) < 1e-9 && rounded < 9e15) {
    const auto fi = static_cast<std::uint64_t>(rounded);
    if (m <= fi) return 0;
    return static_cast<std::size_t>((m - fi + fi - 1) / fi);
  }
  const double x = static_cast<double>(m) / f - 1.0;
  return x <= 0 ? 0 : static_cast<std::size_t>(std::ceil(x));
}

}  // namespace

std::size_t phi_types_realized(const RelationOracle& oracle, std::size_t b,
                               std::span<const std::vector<std::size_t>> seqs,
                               std::span<const std::size_t> window) {
  require_type_shape(oracle, seqs);
  std::set<Bitset> types;
  for (std::size_t c : window) types.insert(trace_of(oracle, b, seqs, c));
  return types.size();
}

TypeCountReport dagger_check(const RelationOracle& oracle, std::size_t b,
                             std::span<const std::vector<std::size_t>> seqs,
                             std::span<const std::size_t> long_seq, double d_exp, double eps) {
  TypeCountReport rep = dagger_check_f(
      oracle, b, seqs, long_seq,
      [d_exp](std::size_t x) { return std::pow(static_cast<double>(x), d_exp); }, eps);
  rep.d_exp = d_exp;
  return rep;
}

TypeCountReport dagger_check_f(const RelationOracle& oracle, std::size_t b,
                               std::span<const std::vector<std::size_t>> seqs,
                               std::span<const std::size_t> long_seq,
                               const std::function<double(std::size_t)>& f, double eps) {
  require_type_shape(oracle, seqs);
  TypeCountReport rep;
  rep.k = oracle.slots() - 1;
  if (rep.k < 2) throw DomainError("the interval criterion needs k >= 2");
  rep.n = seqs[0].size();
  for (const auto& s : seqs) {
    if (s.size() != rep.n) throw DimensionMismatch("sequences I_1..I_{k-1} must share a length");
  }
  rep.m = long_seq.size();
  if (rep.n == 0 || rep.n > rep.m) throw DomainError("need 1 <= n <= m");
  rep.eps = eps;
  rep.bound_exponent = static_cast<std::uint64_t>(
      std::ceil(std::pow(static_cast<double>(rep.n), static_cast<double>(rep.k - 1) - eps)));
  rep.window_length = window_length_for(rep.m, f(rep.n));
  auto below_bound = [&](std::size_t count) {
    return rep.bound_exponent >= 63 || count < (std::uint64_t{1} << rep.bound_exponent);
  };

  if (rep.window_length == 0) {
    rep.intervals_scanned = 1;
    rep.counts.push_back(0);
    rep.pass_start = 0;
    return rep;
  }
  if (rep.window_length > rep.m) return rep;

  std::vector<Bitset> traces(rep.m);
  parallel_for(rep.m, [&](std::size_t j) { traces[j] = trace_of(oracle, b, seqs, long_seq[j]); });

  std::map<Bitset, std::size_t> live;
  const std::size_t L = rep.window_length;
  for (std::size_t j = 0; j < rep.m; ++j) {
    ++live[traces[j]];
    if (j >= L) {
      auto it = live.find(traces[j - L]);
      if (--it->second == 0) live.erase(it);
    }
    if (j + 1 >= L) {
      rep.counts.push_back(live.size());
      ++rep.intervals_scanned;
      if (!rep.pass_start && below_bound(live.size())) rep.pass_start = j + 1 - L;
    }
  }
  return rep;
}

namespace {

void require_functions(const RelationOracle& base, std::span<const FunctionTable> fns,
                       std::span<const std::size_t> universes) {
  if (universes.empty()) throw DomainError("composed relation needs at least one slot");
  const std::size_t k = universes.size() - 1;
  if (fns.size() != base.slots()) throw DimensionMismatch("need one function per base slot");
  for (std::size_t t = 0; t < fns.size(); ++t) {
    const FunctionTable& f = fns[t];
    if (f.slots.size() > k) throw DimensionMismatch("function arity exceeds k");
    std::size_t size = 1;
    for (std::size_t s : f.slots) {
      if (s >= universes.size()) throw DimensionMismatch("function argument slot out of range");
      size *= universes[s];
    }
    if (f.values.size() != size) throw DimensionMismatch("function table size differs from its domain");
    for (std::size_t v : f.values) {
      if (v >= base.universes()[t]) throw DomainError("function value outside the base universe");
    }
  }
}

}  // namespace

RelationOracle compose_relation(const RelationOracle& base, std::vector<FunctionTable> fns,
                                std::vector<std::size_t> universes) {
  require_functions(base, fns, universes);
  // strides[t][j]: weight of argument j in table t's row-major index.
  std::vector<std::vector<std::size_t>> strides;
  for (const FunctionTable& f : fns) {
    std::vector<std::size_t> s(f.slots.size());
    std::size_t w = 1;
    for (std::size_t j = f.slots.size(); j-- > 0;) {
      s[j] = w;
      w *= universes[f.slots[j]];
    }
    strides.push_back(std::move(s));
  }
  struct Plan {
    RelationOracle base;
    std::vector<FunctionTable> fns;
    std::vector<std::vector<std::size_t>> strides;
  };
  auto plan = std::make_shared<const Plan>(Plan{base, std::move(fns), std::move(strides)});
  return RelationOracle(
      std::move(universes),
      [plan](std::span<const std::size_t> a) {
        std::vector<std::size_t> x(plan->fns.size());
        for (std::size_t t = 0; t < plan->fns.size(); ++t) {
          const FunctionTable& f = plan->fns[t];
          std::size_t idx = 0;
          for (std::size_t j = 0; j < f.slots.size(); ++j) idx += plan->strides[t][j] * a[f.slots[j]];
          x[t] = f.values[idx];
        }
        return plan->base(x);
      },
      "composed");
}

bool substitute_directly(const RelationOracle& base, std::span<const FunctionTable> fns,
                         std::span<const std::size_t> universes,
                         std::span<const std::size_t> args) {
  require_functions(base, fns, universes);
  std::vector<std::size_t> x;
  for (const FunctionTable& f : fns) {
    std::vector<std::size_t> sizes, cell;
    for (std::size_t s : f.slots) {
      sizes.push_back(universes[s]);
      cell.push_back(args[s]);
    }
    x.push_back(f.values[flatten_cell(sizes, cell)]);
  }
  return base(x);
}

FamilyCardinality array_family_cardinality(const RelationOracle& phi, std::size_t n,
                                           std::span<const std::size_t> delta,
                                           std::uint64_t budget, std::uint64_t seed) {
  if (phi.slots() < 2) throw DomainError("array families need k >= 1");
  const std::size_t k = phi.slots() - 1;
  const std::uint64_t cells = ipow(n, k);
  if (cells > (1u << 20)) throw SizeGuard("n^k exceeds 2^20 cells");
  if (delta.size() != cells) throw DimensionMismatch("delta must have n^k entries");
  for (std::size_t v : delta) {
    if (v >= phi.universes()[k]) throw DomainError("delta entry outside the last universe");
  }
  const auto faces = static_cast<std::size_t>(ipow(n, k - 1));

  // Variable layout: zeta^t occupies [t * faces, (t+1) * faces).
  std::vector<std::size_t> radix(k * faces);
  std::uint64_t space = 1;
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t f = 0; f < faces; ++f) {
      radix[t * faces + f] = phi.universes()[t];
      space = space > UINT64_MAX / phi.universes()[t] ? UINT64_MAX : space * phi.universes()[t];
    }
  }
  // face_of[i][t]: index of i with coordinate t removed.
  std::vector<std::vector<std::size_t>> face_of(static_cast<std::size_t>(cells), std::vector<std::size_t>(k));
  std::vector<std::size_t> coords(k);
  for (std::size_t i = 0; i < cells; ++i) {
    std::size_t rest = i;
    for (std::size_t c = k; c-- > 0;) {
      coords[c] = rest % n;
      rest /= n;
    }
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t f = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != t) f = f * n + coords[c];
      }
      face_of[i][t] = f;
    }
  }

  std::set<Bitset> family;
  std::vector<std::size_t> assign(k * faces, 0);
  std::vector<std::size_t> args(k + 1);
  auto record = [&] {
    Bitset s(static_cast<std::size_t>(cells));
    for (std::size_t i = 0; i < cells; ++i) {
      for (std::size_t t = 0; t < k; ++t) args[t] = assign[t * faces + face_of[i][t]];
      args[k] = delta[i];
      s.set(i, phi(args));
    }
    family.insert(std::move(s));
  };

  FamilyCardinality out;
  if (space <= budget) {
    out.exact = true;
    for (;;) {
      record();
      ++out.assignments_examined;
      std::size_t v = 0;
      while (v < assign.size() && ++assign[v] == radix[v]) assign[v++] = 0;
      if (v == assign.size()) break;
    }
  } else {
    Rng rng(seed);
    for (std::uint64_t s = 0; s < budget; ++s) {
      for (std::size_t v = 0; v < assign.size(); ++v) assign[v] = static_cast<std::size_t>(uniform_below(rng, radix[v]));
      record();
      ++out.assignments_examined;
    }
  }
  out.count = family.size();
  return out;
}

}  // namespace multiform
