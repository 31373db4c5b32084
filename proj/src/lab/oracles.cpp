#include "multiform/lab/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "multiform/error.hpp"

namespace multiform::lab {

Residue naive_eval(const AlternatingForm& form, std::span<const FVector> vs) {
  const std::uint32_t p = form.modulus();
  const std::size_t n = vs.size();
  if (static_cast<int>(n) != form.arity()) throw DimensionMismatch("naive_eval needs n vectors");
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < vs[j].dim(); ++i) {
      if (vs[j][i] != 0) support[j].push_back(i);
    }
  }
  IndexTuple idx(n);
  std::uint64_t acc = 0;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t slot, std::uint64_t weight) {
    if (slot == n) {
      acc = (acc + weight * form.basis_value(idx)) % p;
      return;
    }
    for (std::size_t i : support[slot]) {
      idx[slot] = static_cast<int>(i);
      rec(slot + 1, weight * vs[slot][i] % p);
    }
  };
  rec(0, 1 % p);
  return static_cast<Residue>(acc);
}

std::vector<FVector> all_vectors(std::uint32_t p, std::size_t d) {
  std::vector<FVector> out;
  std::vector<std::int64_t> digits(d, 0);
  for (;;) {
    out.emplace_back(p, digits);
    std::size_t i = 0;
    while (i < d && ++digits[i] == static_cast<std::int64_t>(p)) digits[i++] = 0;
    if (i == d) break;
  }
  return out;
}

std::vector<FVector> span_closure(std::span<const FVector> gens, std::uint32_t p, std::size_t d) {
  std::set<FVector> seen{FVector(p, d)};
  std::vector<FVector> frontier{FVector(p, d)};
  // Breadth-first closure under adding a generator.
  while (!frontier.empty()) {
    std::vector<FVector> next;
    for (const FVector& v : frontier) {
      for (const FVector& g : gens) {
        FVector w = v + g;
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<FVector>(seen.begin(), seen.end());
}

namespace {

std::size_t index_of(const std::vector<FVector>& sorted, const FVector& v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

// Form values on every ordered n-tuple of `elems`, flattened base |elems|.
std::vector<Residue> value_table(const AlternatingForm& form, const std::vector<FVector>& elems) {
  const std::size_t m = elems.size();
  const auto n = static_cast<std::size_t>(form.arity());
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  std::vector<Residue> table(total);
  std::vector<FVector> args(n);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t s = n; s-- > 0;) {
      args[s] = elems[rest % m];
      rest /= m;
    }
    table[flat] = naive_eval(form, args);
  }
  return table;
}

}  // namespace

bool form_preserving_bijection_exists(const AlternatingForm& fa, std::span<const FVector> a,
                                      const AlternatingForm& fb, std::span<const FVector> b) {
  if (a.size() != b.size() || fa.modulus() != fb.modulus() || fa.arity() != fb.arity()) return false;
  const std::uint32_t p = fa.modulus();
  const auto sa = span_closure(a, p, static_cast<std::size_t>(fa.dim()));
  const auto sb = span_closure(b, p, static_cast<std::size_t>(fb.dim()));
  if (sa.size() != sb.size()) return false;
  const std::size_t m = sa.size();
  const auto n = static_cast<std::size_t>(fa.arity());

  // forced[i]: required image index of sa[i], or m.
  std::vector<std::size_t> forced(m, m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t x = index_of(sa, a[i]);
    const std::size_t y = index_of(sb, b[i]);
    if (forced[x] != m && forced[x] != y) return false;
    forced[x] = y;
  }
  std::vector<std::vector<std::size_t>> plus_a(m, std::vector<std::size_t>(m)), minus_a = plus_a;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      plus_a[i][j] = index_of(sa, sa[i] + sa[j]);
      minus_a[i][j] = index_of(sa, sa[i] - sa[j]);
    }
  }
  const auto ta = value_table(fa, sa);
  const auto tb = value_table(fb, sb);

  std::vector<std::size_t> img(m, m);
  std::vector<bool> used(m, false);
  std::vector<std::size_t> order;  // assigned domain indices

  auto consistent = [&](std::size_t i) {
    for (std::size_t j : order) {
      const std::size_t s = plus_a[i][j];
      if (img[s] != m && sb[img[s]] != sb[img[i]] + sb[img[j]]) return false;
      const std::size_t u = minus_a[i][j];
      if (img[u] != m && sb[img[i]] != sb[img[j]] + sb[img[u]]) return false;
    }
    // Ordered n-tuples of assigned indices that use i.
    std::vector<std::size_t> pos(n, 0);
    const std::size_t r = order.size();
    for (;;) {
      bool has_i = false;
      std::size_t fa_idx = 0, fb_idx = 0;
      for (std::size_t s = 0; s < n; ++s) {
        const std::size_t x = order[pos[s]];
        has_i = has_i || x == i;
        fa_idx = fa_idx * m + x;
        fb_idx = fb_idx * m + img[x];
      }
      if (has_i && ta[fa_idx] != tb[fb_idx]) return false;
      std::size_t s = 0;
      while (s < n && ++pos[s] == r) pos[s++] = 0;
      if (s == n) break;
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == m) return true;
    for (std::size_t y = 0; y < m; ++y) {
      if (used[y] || (forced[i] != m && forced[i] != y)) continue;
      img[i] = y;
      used[y] = true;
      order.push_back(i);
      if (consistent(i) && assign(i + 1)) return true;
      order.pop_back();
      used[y] = false;
      img[i] = m;
    }
    return false;
  };
  return assign(0);
}

std::vector<FVector> brute_perp_set(const AlternatingForm& form, std::span<const FVector> A) {
  const std::uint32_t p = form.modulus();
  const auto d = static_cast<std::size_t>(form.dim());
  const auto k = static_cast<std::size_t>(form.arity() - 1);
  // Functionals of every ordered tuple with repetition, read off on unit vectors.
  std::vector<std::vector<Residue>> functionals;
  if (!A.empty()) {
    std::vector<std::size_t> pos(k, 0);
    std::vector<FVector> args(k + 1);
    for (;;) {
      for (std::size_t s = 0; s < k; ++s) args[s] = A[pos[s]];
      std::vector<Residue> f(d);
      for (std::size_t j = 0; j < d; ++j) {
        args[k] = FVector::unit(p, d, j);
        f[j] = naive_eval(form, args);
      }
      functionals.push_back(std::move(f));
      std::size_t s = 0;
      while (s < k && ++pos[s] == A.size()) pos[s++] = 0;
      if (s == k) break;
    }
  }
  std::vector<FVector> out;
  for (const FVector& v : all_vectors(p, d)) {
    bool zero = true;
    for (const auto& f : functionals) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += static_cast<std::uint64_t>(f[j]) * v[j];
      if (acc % p != 0) {
        zero = false;
        break;
      }
    }
    if (zero) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t brute_trace_count(const BoxFamily& fam, const Box& box) {
  std::set<std::vector<bool>> traces;
  const std::size_t k = box.parts.size();
  for (const Bitset& s : fam.sets()) {
    std::vector<bool> trace;
    std::vector<std::size_t> cell(k);
    std::function<void(std::size_t)> walk = [&](std::size_t c) {
      if (c == k) {
        trace.push_back(s.test(flatten_cell(fam.sizes(), cell)));
        return;
      }
      for (std::size_t x : box.parts[c]) {
        cell[c] = x;
        walk(c + 1);
      }
    };
    walk(0);
    traces.insert(std::move(trace));
  }
  return traces.size();
}

std::size_t brute_type_count(const RelationOracle& oracle, std::size_t b,
                             std::span<const std::vector<std::size_t>> seqs,
                             std::span<const std::size_t> window) {
  std::set<std::vector<bool>> types;
  const std::size_t k1 = seqs.size();
  for (std::size_t c : window) {
    std::vector<bool> trace;
    std::vector<std::size_t> args(k1 + 2);
    args[0] = b;
    args[k1 + 1] = c;
    std::function<void(std::size_t)> walk = [&](std::size_t s) {
      if (s == k1) {
        trace.push_back(oracle(args));
        return;
      }
      for (std::size_t a : seqs[s]) {
        args[s + 1] = a;
        walk(s + 1);
      }
    };
    walk(0);
    types.insert(std::move(trace));
  }
  return types.size();
}

std::size_t brute_array_family(const RelationOracle& phi, std::size_t n, std::span<const std::size_t> delta) {
  const std::size_t k = phi.slots() - 1;
  std::size_t faces = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) faces *= n;
  const std::size_t cells = faces * n;
  std::vector<std::vector<std::size_t>> zeta(k, std::vector<std::size_t>(faces, 0));
  std::set<std::vector<bool>> family;

  auto realize = [&] {
    std::vector<bool> s(cells);
    std::vector<std::size_t> coords(k), args(k + 1);
    for (std::size_t i = 0; i < cells; ++i) {
      std::size_t rest = i;
      for (std::size_t c = k; c-- > 0;) {
        coords[c] = rest % n;
        rest /= n;
      }
      for (std::size_t t = 0; t < k; ++t) {
        std::size_t face = 0;
        for (std::size_t c = 0; c < k; ++c) {
          if (c != t) face = face * n + coords[c];
        }
        args[t] = zeta[t][face];
      }
      args[k] = delta[i];
      s[i] = phi(args);
    }
    family.insert(std::move(s));
  };
  std::function<void(std::size_t)> rec = [&](std::size_t var) {
    if (var == k * faces) {
      realize();
      return;
    }
    const std::size_t t = var / faces;
    for (std::size_t v = 0; v < phi.universes()[t]; ++v) {
      zeta[t][var % faces] = v;
      rec(var + 1);
    }
  };
  rec(0);
  return family.size();
}

}  // namespace multiform::lab
