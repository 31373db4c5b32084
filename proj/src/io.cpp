#include "multiform/io.hpp"

#include <sstream>

#include "multiform/error.hpp"
#include "multiform/random.hpp"

namespace multiform {

Json coords_json(const FVector& v) {
  Json a = Json::array();
  for (Residue c : v.coords()) a.push_back(c);
  return a;
}

Json coords_json(std::span<const FVector> vs) {
  Json a = Json::array();
  for (const FVector& v : vs) a.push_back(coords_json(v));
  return a;
}

Json to_json(const FVector& v) { return Json{{"p", v.modulus()}, {"coords", coords_json(v)}}; }

Json to_json(const FMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(coords_json(m.row(r)));
  return Json{{"p", m.modulus()}, {"rows", rows}, {"shape", {m.rows(), m.cols()}}};
}

Json to_json(const AlternatingForm& f) {
  Json coeffs = Json::array();
  for (const auto& [idx, c] : f.coeffs()) coeffs.push_back(Json::array({idx, c}));
  return Json{{"p", f.modulus()}, {"n", f.arity()}, {"d", f.dim()}, {"coeffs", coeffs}};
}

Json to_json(const WedgeVector& t) {
  Json terms = Json::array();
  for (const auto& [idx, c] : t.terms()) {
    Json row(idx);
    row.push_back(c);
    terms.push_back(row);
  }
  return Json{{"p", t.modulus()}, {"n", t.degree() + 1}, {"d", t.dim()}, {"terms", terms}};
}

Json to_json(const TowerCertificate& c) {
  return Json{{"from_dim", c.from_dim},
              {"to_dim", c.to_dim},
              {"radical_size", c.radical_size},
              {"restricted_rank", c.restricted_rank},
              {"required_rank", c.required_rank},
              {"passed", c.passed()}};
}

Json to_json(const Tower& t) {
  Json levels = Json::array();
  for (const auto& f : t.levels) levels.push_back(to_json(f));
  Json certs = Json::array();
  for (const auto& c : t.certificates) certs.push_back(to_json(c));
  return Json{{"levels", levels}, {"certificates", certs}};
}

namespace {

Json gram_json(const std::map<IndexTuple, Residue>& gram) {
  Json g = Json::array();
  for (const auto& [idx, c] : gram) g.push_back(Json::array({idx, c}));
  return g;
}

}  // namespace

Json to_json(const Substructure& s) {
  return Json{{"p", s.form->modulus()},
              {"n", s.form->arity()},
              {"basis", coords_json(s.basis)},
              {"gram", gram_json(s.gram)}};
}

Json to_json(const AtomicInvariant& inv) {
  return Json{{"p", inv.p},
              {"n", inv.n},
              {"length", inv.length},
              {"support", inv.support},
              {"coords", inv.coords},
              {"form_values", gram_json(inv.form_values)}};
}

Json to_json(const PartialIso& iso) {
  return Json{{"domain", coords_json(iso.domain)}, {"image", coords_json(iso.image)}};
}

Json to_json(const Box& b) { return Json{{"parts", b.parts}}; }

Json to_json(const BoxFamily& fam) {
  Json sets = Json::array();
  for (const Bitset& s : fam.sets()) {
    Json members = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.test(i)) members.push_back(i);
    }
    sets.push_back(members);
  }
  return Json{{"k", fam.arity()}, {"sizes", fam.sizes()}, {"sets", sets}};
}

Json to_json(const PartiteHypergraph& g) {
  return Json{{"k", g.arity()}, {"partSizes", g.part_sizes}, {"edges", g.edges()}};
}

Json to_json(const Subspace& s) {
  return Json{{"p", s.modulus()},
              {"d", s.ambient_dim()},
              {"dim", s.dim()},
              {"codim", s.codim()},
              {"basis", coords_json(s.basis())}};
}

Json to_json(const TypeCountReport& r) {
  Json j{{"k", r.k},
         {"n", r.n},
         {"m", r.m},
         {"d_exp", r.d_exp},
         {"eps", r.eps},
         {"bound_exponent", r.bound_exponent},
         {"window_length", r.window_length},
         {"intervals_scanned", r.intervals_scanned},
         {"counts", r.counts},
         {"passed", r.passed()}};
  j["pass_interval"] = r.pass_start ? Json::array({*r.pass_start, *r.pass_start + r.window_length}) : Json(nullptr);
  return j;
}

FVector vector_from_json(const Json& j, std::uint32_t p) {
  if (j.is_object()) {
    const auto q = j.at("p").get<std::uint32_t>();
    if (q != p) throw DimensionMismatch("vector modulus differs from the form's");
    return vector_from_json(j.at("coords"), p);
  }
  if (!j.is_array()) throw DomainError("vector must be an array of integers");
  return FVector(p, j.get<std::vector<std::int64_t>>());
}

std::vector<FVector> vectors_from_json(const Json& j, std::uint32_t p) {
  if (!j.is_array()) throw DomainError("expected an array of vectors");
  std::vector<FVector> out;
  for (const Json& v : j) out.push_back(vector_from_json(v, p));
  return out;
}

AlternatingForm form_from_json(const Json& j) {
  AlternatingForm f(j.at("p").get<std::uint32_t>(), j.at("n").get<int>(), j.at("d").get<int>());
  for (const Json& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 2) throw DomainError("coefficient entries are [[indices], value]");
    const auto idx = entry[0].get<IndexTuple>();
    if (f.coeff(idx) != 0) throw DomainError("duplicate coefficient key");
    f.set_coeff(idx, entry[1].get<std::int64_t>());
  }
  return f;
}

WedgeVector wedge_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  WedgeVector t(j.at("p").get<std::uint32_t>(), n - 1, j.at("d").get<int>());
  for (const Json& term : j.at("terms")) {
    auto row = term.get<std::vector<std::int64_t>>();
    if (static_cast<int>(row.size()) != n) throw DomainError("wedge terms are [indices..., coefficient]");
    const std::int64_t c = row.back();
    row.pop_back();
    t.set_coeff(IndexTuple(row.begin(), row.end()), c);
  }
  return t;
}

Box box_from_json(const Json& j) {
  Box b;
  b.parts = (j.is_object() ? j.at("parts") : j).get<std::vector<std::vector<std::size_t>>>();
  return b;
}

BoxFamily family_from_json(const Json& j) {
  BoxFamily fam(j.at("sizes").get<std::vector<std::size_t>>());
  if (j.contains("k") && j.at("k").get<std::size_t>() != fam.arity()) throw DomainError("k differs from sizes");
  for (const Json& members : j.at("sets")) {
    Bitset s(fam.cell_count());
    for (const Json& m : members) {
      const auto i = m.get<std::size_t>();
      if (i >= fam.cell_count()) throw DomainError("set member outside the product");
      s.set(i);
    }
    fam.add(std::move(s));
  }
  fam.deduplicate();
  return fam;
}

PartiteHypergraph hypergraph_from_json(const Json& j) {
  PartiteHypergraph g(j.at("partSizes").get<std::vector<std::size_t>>());
  for (const Json& e : j.at("edges")) g.set_edge(e.get<std::vector<std::size_t>>());
  return g;
}

ColorArray colors_from_json(const Json& j) {
  ColorArray c;
  c.sizes = j.at("sizes").get<std::vector<std::size_t>>();
  c.labels = j.at("labels").get<std::vector<int>>();
  if (c.labels.size() != product_size(c.sizes)) throw DimensionMismatch("label count differs from array size");
  return c;
}

std::vector<FunctionTable> functions_from_json(const Json& j) {
  std::vector<FunctionTable> fns;
  for (const Json& f : j) {
    fns.push_back(FunctionTable{f.at("slots").get<std::vector<std::size_t>>(),
                                f.at("values").get<std::vector<std::size_t>>()});
  }
  return fns;
}

RelationOracle oracle_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "constant") {
    return constant_oracle(j.at("universes").get<std::vector<std::size_t>>(), j.at("value").get<bool>());
  }
  if (kind == "table" || kind == "random_table") {
    auto universes = j.at("universes").get<std::vector<std::size_t>>();
    Bitset table(product_size(universes));
    if (kind == "table") {
      const auto bits = j.at("table").get<std::string>();
      if (bits.size() != table.size()) throw DimensionMismatch("table length differs from the product of universes");
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw DomainError("table must be a 0/1 string");
        table.set(i, bits[i] == '1');
      }
    } else {
      Rng rng(j.at("seed").get<std::uint64_t>());
      for (std::size_t i = 0; i < table.size(); ++i) table.set(i, coin(rng));
    }
    return table_oracle(std::move(universes), std::move(table));
  }
  if (kind == "badgraph") {
    return hypergraph_oracle(build_bad_hypergraph(j.at("k").get<std::size_t>(), j.at("d").get<std::size_t>(),
                                                  j.at("n").get<std::size_t>()));
  }
  if (kind == "form") return form_oracle(form_from_json(j.at("form")));
  if (kind == "order") {
    const auto s = j.at("size").get<std::size_t>();
    return RelationOracle({s, s}, [](std::span<const std::size_t> a) { return a[0] < a[1]; }, "order");
  }
  if (kind == "composed") {
    return compose_relation(oracle_from_json(j.at("base")), functions_from_json(j.at("functions")),
                            j.at("universes").get<std::vector<std::size_t>>());
  }
  throw DomainError("unknown oracle kind '" + kind + "'");
}

std::string csv_header() {
  return "k,n,m,d_exp,eps,bound_exponent,window_length,intervals,max_count,passed";
}

std::string csv_row(const TypeCountReport& r) {
  std::size_t max_count = 0;
  for (std::size_t c : r.counts) max_count = std::max(max_count, c);
  std::ostringstream os;
  os << r.k << ',' << r.n << ',' << r.m << ',' << Json(r.d_exp).dump() << ',' << Json(r.eps).dump() << ','
     << r.bound_exponent << ',' << r.window_length << ',' << r.intervals_scanned << ',' << max_count << ','
     << (r.passed() ? 1 : 0);
  return os.str();
}

}  // namespace multiform
