#include "multiform/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>

#include "multiform/error.hpp"
#include "multiform/lab/experiments.hpp"
#include "multiform/parallel.hpp"
#include "multiform/random.hpp"

#ifndef MULTIFORM_SOURCE_DIR
#define MULTIFORM_SOURCE_DIR "."
#endif

namespace multiform::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool is_inline(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  return first != std::string::npos && (arg[first] == '[' || arg[first] == '{');
}

// A JSON argument is either a literal or the path of a file holding one.
Json load_json(const std::string& arg) {
  const std::string text = is_inline(arg) ? arg : read_file(arg);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

AlternatingForm load_form(const std::string& arg) { return form_from_json(load_json(arg)); }

BoxFamily load_family(const std::string& arg) {
  if (is_inline(arg)) return family_from_json(load_json(arg));
  const std::string bytes = read_file(arg);
  if (bytes.rfind("MFBF", 0) == 0) {
    std::istringstream in(bytes);
    return BoxFamily::read_binary(in);
  }
  return family_from_json(load_json(bytes));
}

std::vector<WedgeVector> load_wedges(const std::string& arg, const AlternatingForm& form) {
  std::vector<WedgeVector> ts;
  for (const Json& item : load_json(arg)) {
    if (item.is_object()) {
      ts.push_back(wedge_from_json(item));
    } else {
      const auto vs = vectors_from_json(item, form.modulus());
      ts.push_back(wedge_of_vectors(vs));
    }
  }
  return ts;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json criterion_json(const lab::CriterionResult& r) {
  return Json{{"criterion", r.id},
              {"title", r.title},
              {"passed", r.passed},
              {"time_limit_seconds", r.time_limit_seconds},
              {"details", r.details}};
}

struct Options {
  std::string form, form_b, vectors = "[]", tuple_b, target, wedges, values, exclude = "[]", parts;
  std::string family, box, colors, targets, sizes, kind;
  std::string oracle, base, functions, universes, seqs = "[]", window, long_seq, delta;
  std::string fixtures = std::string(MULTIFORM_SOURCE_DIR) + "/tests/fixtures";
  std::string goldens = std::string(MULTIFORM_SOURCE_DIR) + "/tests/golden";
  std::uint32_t p = 2;
  int n = 2, d = 2, steps = 1, criterion = 0;
  std::int64_t c = 1;
  std::size_t k = 2, b = 0, demands = 0, side = 1, box_d = 1, long_range = 0, array_n = 2;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  double d_exp = 1, eps = 0.2, f_const = 0;
  bool csv = false, update = false;
};

// Vectors given over a lower level of a tower, read in its top level.
std::vector<FVector> padded(std::vector<FVector> vs, int dim) {
  for (FVector& v : vs) {
    if (v.dim() > static_cast<std::size_t>(dim)) throw DimensionMismatch("vector longer than the ambient dimension");
    FVector w(v.modulus(), static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < v.dim(); ++i) w.set(i, v[i]);
    v = std::move(w);
  }
  return vs;
}

std::vector<FVector> union_of(std::span<const std::vector<FVector>> parts, std::size_t skip) {
  std::vector<FVector> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != skip) out.insert(out.end(), parts[i].begin(), parts[i].end());
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating forms over prime fields and higher-arity VC tools", "multiform"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  std::string out_path;
  app.add_option("--threads", threads, "worker threads, 0 = hardware")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "write output to this file");

  Options o;
  std::function<std::string()> action;
  auto on = [&](CLI::App* sub, std::function<std::string()> fn) {
    sub->callback([&action, fn] { action = fn; });
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto req = [](CLI::App* s, const std::string& flag, auto& dst, const std::string& help) {
    s->add_option(flag, dst, help)->required();
  };

  // form
  CLI::App* form = group("form", "alternating forms");
  {
    CLI::App* s = form->add_subcommand("eval", "value on n vectors");
    req(s, "--form", o.form, "form JSON");
    req(s, "--vectors", o.vectors, "n vectors");
    on(s, [&] {
      const auto f = load_form(o.form);
      return dump(Json{{"value", eval(f, vectors_from_json(load_json(o.vectors), f.modulus())).value()}});
    });

    s = form->add_subcommand("radical", "basis of ker psi");
    req(s, "--form", o.form, "form JSON");
    on(s, [&] {
      const auto rad = radical(load_form(o.form));
      Json ts = Json::array();
      for (const auto& t : rad) ts.push_back(to_json(t));
      return dump(Json{{"radical", ts}, {"dimension", rad.size()}});
    });

    s = form->add_subcommand("nondeg", "empty radical");
    req(s, "--form", o.form, "form JSON");
    on(s, [&] { return dump(Json{{"nondegenerate", is_nondegenerate(load_form(o.form))}}); });

    s = form->add_subcommand("generic", "phi surjective over the standard basis");
    req(s, "--form", o.form, "form JSON");
    on(s, [&] { return dump(Json{{"generic", is_generic(load_form(o.form))}}); });

    s = form->add_subcommand("dual", "dual tuples for a subspace");
    req(s, "--form", o.form, "form JSON");
    req(s, "--vectors", o.vectors, "basis of W");
    on(s, [&] {
      const auto f = load_form(o.form);
      const auto dt = dual_tuples(f, vectors_from_json(load_json(o.vectors), f.modulus()));
      Json ts = Json::array();
      for (const auto& t : dt.ts) ts.push_back(to_json(t));
      return dump(Json{{"ts", ts}, {"us", coords_json(dt.us)}});
    });

    s = form->add_subcommand("findw", "vector with prescribed pairings");
    req(s, "--form", o.form, "form JSON");
    req(s, "--wedges", o.wedges, "wedge objects or (n-1)-tuples of vectors");
    req(s, "--values", o.values, "prescribed pairing values");
    s->add_option("--exclude", o.exclude, "U: the result avoids span(U)");
    on(s, [&] {
      const auto f = load_form(o.form);
      const auto ts = load_wedges(o.wedges, f);
      std::vector<Scalar> ks;
      for (const Json& v : load_json(o.values)) ks.emplace_back(v.get<std::int64_t>(), f.modulus());
      const auto w = find_w(f, ts, ks, vectors_from_json(load_json(o.exclude), f.modulus()));
      return dump(Json{{"w", coords_json(w)}});
    });

    s = form->add_subcommand("extend", "one radical-killing extension step");
    req(s, "--form", o.form, "form JSON");
    on(s, [&] { return dump(to_json(extend_step(load_form(o.form)))); });

    s = form->add_subcommand("tower", "certified chain of extension steps");
    req(s, "--form", o.form, "form JSON");
    req(s, "--steps", o.steps, "number of steps");
    on(s, [&] {
      const Tower t = certify_tower(load_form(o.form), o.steps);
      Json j = to_json(t);
      bool ok = true;
      for (const auto& c : t.certificates) ok = ok && c.passed();
      j["passed"] = ok;
      return dump(j);
    });

    s = form->add_subcommand("random", "uniform random form");
    req(s, "--p", o.p, "prime");
    req(s, "--n", o.n, "arity");
    req(s, "--d", o.d, "dimension");
    req(s, "--seed", o.seed, "seed");
    on(s, [&] { return dump(to_json(random_form(o.p, o.n, o.d, o.seed))); });

    s = form->add_subcommand("standard", "volume or standard symplectic form");
    req(s, "--kind", o.kind, "volume | symplectic");
    req(s, "--p", o.p, "prime");
    s->add_option("--n", o.n, "arity, volume form");
    s->add_option("--d", o.d, "dimension, symplectic form");
    s->add_option("--c", o.c, "scale of the volume form");
    on(s, [&] {
      if (o.kind == "volume") return dump(to_json(volume_form(o.p, o.n, o.c)));
      if (o.kind == "symplectic") return dump(to_json(standard_symplectic(o.p, o.d)));
      throw DomainError("unknown kind " + o.kind);
    });
  }

  // struct
  CLI::App* st = group("struct", "substructures and back-and-forth");
  {
    CLI::App* s = st->add_subcommand("generate", "substructure generated by vectors");
    req(s, "--form", o.form, "form JSON");
    req(s, "--vectors", o.vectors, "generators");
    on(s, [&] {
      const auto f = load_form(o.form);
      return dump(to_json(generate(f, vectors_from_json(load_json(o.vectors), f.modulus()))));
    });

    s = st->add_subcommand("invariant", "atomic invariant of a tuple");
    req(s, "--form", o.form, "form JSON");
    req(s, "--vectors", o.vectors, "tuple");
    on(s, [&] {
      const auto f = load_form(o.form);
      return dump(to_json(atomic_invariant(f, vectors_from_json(load_json(o.vectors), f.modulus()))));
    });

    s = st->add_subcommand("equiv", "same type in the extended forms");
    req(s, "--form", o.form, "first form");
    req(s, "--vectors", o.vectors, "first tuple");
    req(s, "--form-b", o.form_b, "second form");
    req(s, "--vectors-b", o.tuple_b, "second tuple");
    s->add_option("--steps", o.steps, "extension steps applied to both forms");
    on(s, [&] {
      const Tower ta = certify_tower(load_form(o.form), o.steps);
      const Tower tb = certify_tower(load_form(o.form_b), o.steps);
      const auto a = padded(vectors_from_json(load_json(o.vectors), ta.top().modulus()), ta.top().dim());
      const auto b = padded(vectors_from_json(load_json(o.tuple_b), tb.top().modulus()), tb.top().dim());
      const bool eq = equivalent(ta, a, tb, b);
      return dump(Json{{"equivalent", eq},
                       {"dims", Json::array({ta.top().dim(), tb.top().dim()})},
                       {"invariant_a", to_json(atomic_invariant(ta.top(), a))},
                       {"invariant_b", to_json(atomic_invariant(tb.top(), b))}});
    });

    s = st->add_subcommand("embed", "embed a substructure into a target form");
    req(s, "--form", o.form, "source form");
    req(s, "--vectors", o.vectors, "generators");
    req(s, "--target", o.target, "target form");
    on(s, [&] {
      const auto f = load_form(o.form);
      const auto sub = generate(f, vectors_from_json(load_json(o.vectors), f.modulus()));
      return dump(to_json(embed(sub, load_form(o.target))));
    });
  }

  // vc
  CLI::App* vc = group("vc", "box shattering and hypergraphs");
  {
    CLI::App* s = vc->add_subcommand("shatter", "does the family shatter a box");
    req(s, "--family", o.family, "family (JSON or binary)");
    req(s, "--box", o.box, "box parts");
    on(s, [&] {
      const auto fam = load_family(o.family);
      const auto bx = box_from_json(load_json(o.box));
      return dump(Json{{"shatters", shatters(fam, bx)}, {"trace_count", trace_count(fam, bx)},
                       {"cells", bx.cell_count()}});
    });

    s = vc->add_subcommand("dim", "VC_k dimension");
    req(s, "--family", o.family, "family (JSON or binary)");
    on(s, [&] {
      const auto fam = load_family(o.family);
      return dump(Json{{"k", fam.arity()}, {"size", fam.size()}, {"vc", vc_k(fam)}});
    });

    s = vc->add_subcommand("sauer", "first shattered d-box");
    req(s, "--family", o.family, "family (JSON or binary)");
    req(s, "--d", o.box_d, "box side");
    on(s, [&] {
      const auto bx = sauer_shelah_search(load_family(o.family), o.box_d);
      return dump(Json{{"box", bx ? to_json(*bx) : Json(nullptr)}});
    });

    s = vc->add_subcommand("badgraph", "the hypergraph R^{k-1}_{d,n}");
    req(s, "--k", o.k, "arity");
    req(s, "--d", o.box_d, "d");
    req(s, "--n", o.array_n, "n");
    on(s, [&] { return dump(to_json(build_bad_hypergraph(o.k, o.box_d, o.array_n))); });

    s = vc->add_subcommand("randgraph", "random ordered partite hypergraph");
    req(s, "--sizes", o.sizes, "part sizes");
    req(s, "--seed", o.seed, "seed");
    s->add_option("--demands", o.demands, "extension demands to sample");
    s->add_option("--side", o.side, "tuples per side of a demand");
    on(s, [&] {
      const auto sizes = load_json(o.sizes).get<std::vector<std::size_t>>();
      const auto g = random_partite_extension_graph(sizes, o.seed);
      Json j{{"graph", to_json(g)}};
      if (o.demands > 0) j["extension_score"] = extension_score(g, o.demands, o.side, derive_seed(o.seed, 1));
      return dump(j);
    });

    s = vc->add_subcommand("ramsey", "monochromatic sub-box");
    req(s, "--colors", o.colors, "color array");
    req(s, "--targets", o.targets, "sub-box part sizes");
    s->add_option("--budget", o.budget, "candidate boxes");
    on(s, [&] {
      const auto colors = colors_from_json(load_json(o.colors));
      const auto targets = load_json(o.targets).get<std::vector<std::size_t>>();
      const auto bx = indiscernible_subbox(colors, targets, o.budget ? o.budget : enumeration_budget(1000000));
      return dump(Json{{"box", bx ? to_json(*bx) : Json(nullptr)}});
    });
  }

  // types
  CLI::App* ty = group("types", "type counting");
  {
    CLI::App* s = ty->add_subcommand("count", "types realized on a window");
    req(s, "--oracle", o.oracle, "oracle description");
    s->add_option("--b", o.b, "parameter");
    req(s, "--seqs", o.seqs, "sequences for slots 1..k-1");
    req(s, "--window", o.window, "elements of slot k");
    on(s, [&] {
      const auto rel = oracle_from_json(load_json(o.oracle));
      const auto seqs = load_json(o.seqs).get<std::vector<std::vector<std::size_t>>>();
      const auto window = load_json(o.window).get<std::vector<std::size_t>>();
      return dump(Json{{"types", phi_types_realized(rel, o.b, seqs, window)}});
    });

    s = ty->add_subcommand("dagger", "interval criterion");
    req(s, "--oracle", o.oracle, "oracle description");
    s->add_option("--b", o.b, "parameter");
    req(s, "--seqs", o.seqs, "sequences for slots 1..k-1");
    CLI::Option* lo = s->add_option("--long", o.long_seq, "sequence for slot k");
    CLI::Option* lr = s->add_option("--long-range", o.long_range, "slot k sequence 0..m-1");
    lo->excludes(lr);
    CLI::Option* de = s->add_option("--dexp", o.d_exp, "f(n) = n^dexp");
    CLI::Option* fc = s->add_option("--f", o.f_const, "constant f");
    de->excludes(fc);
    req(s, "--eps", o.eps, "epsilon");
    s->add_flag("--csv", o.csv, "CSV row instead of JSON");
    on(s, [&, lo, fc] {
      const auto rel = oracle_from_json(load_json(o.oracle));
      const auto seqs = load_json(o.seqs).get<std::vector<std::vector<std::size_t>>>();
      std::vector<std::size_t> long_seq;
      if (lo->count() > 0) {
        long_seq = load_json(o.long_seq).get<std::vector<std::size_t>>();
      } else {
        for (std::size_t i = 0; i < o.long_range; ++i) long_seq.push_back(i);
      }
      const double f = o.f_const;
      const TypeCountReport rep = fc->count() > 0
                                      ? dagger_check_f(rel, o.b, seqs, long_seq, [f](std::size_t) { return f; }, o.eps)
                                      : dagger_check(rel, o.b, seqs, long_seq, o.d_exp, o.eps);
      if (o.csv) return csv_header() + "\n" + csv_row(rep) + "\n";
      return dump(to_json(rep));
    });

    s = ty->add_subcommand("compose", "relation composed with function tables");
    req(s, "--base", o.base, "base oracle");
    req(s, "--functions", o.functions, "function tables");
    req(s, "--universes", o.universes, "universes of the composed slots");
    on(s, [&] {
      const auto base = oracle_from_json(load_json(o.base));
      const auto fns = functions_from_json(load_json(o.functions));
      const auto universes = load_json(o.universes).get<std::vector<std::size_t>>();
      const auto psi = compose_relation(base, fns, universes);
      const std::size_t total = product_size(universes);
      if (total > (std::size_t{1} << 20)) throw SizeGuard("composed table exceeds 2^20 entries");
      std::string table;
      bool agrees = true;
      std::vector<std::size_t> a(universes.size(), 0);
      for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (std::size_t i = a.size(); i-- > 0;) {
          a[i] = rest % universes[i];
          rest /= universes[i];
        }
        const bool v = psi(a);
        agrees = agrees && v == substitute_directly(base, fns, universes, a);
        table.push_back(v ? '1' : '0');
      }
      return dump(Json{{"universes", universes}, {"table", table}, {"agrees_with_substitution", agrees}});
    });

    s = ty->add_subcommand("arrayfam", "array-shattering family cardinality");
    req(s, "--oracle", o.oracle, "oracle with k+1 slots");
    req(s, "--n", o.array_n, "array side");
    req(s, "--delta", o.delta, "delta over [n]^k, row-major");
    req(s, "--seed", o.seed, "seed for sampling");
    s->add_option("--budget", o.budget, "assignments to examine");
    on(s, [&] {
      const auto rel = oracle_from_json(load_json(o.oracle));
      const auto delta = load_json(o.delta).get<std::vector<std::size_t>>();
      const auto r = array_family_cardinality(rel, o.array_n, delta,
                                              o.budget ? o.budget : enumeration_budget(1000000), o.seed);
      return dump(Json{{"count", r.count}, {"exact", r.exact}, {"assignments_examined", r.assignments_examined}});
    });
  }

  // conn
  CLI::App* cn = group("conn", "the subspaces V_a and their intersections");
  {
    CLI::App* s = cn->add_subcommand("perp", "V_a for an (n-1)-tuple");
    req(s, "--form", o.form, "form JSON");
    req(s, "--vectors", o.vectors, "n-1 vectors");
    on(s, [&] {
      const auto f = load_form(o.form);
      return dump(to_json(v_perp(f, vectors_from_json(load_json(o.vectors), f.modulus()))));
    });

    s = cn->add_subcommand("ginfty", "intersection of V_a over tuples from A");
    req(s, "--form", o.form, "form JSON");
    s->add_option("--vectors", o.vectors, "A");
    on(s, [&] {
      const auto f = load_form(o.form);
      return dump(to_json(g_infty(f, vectors_from_json(load_json(o.vectors), f.modulus()))));
    });

    s = cn->add_subcommand("identity", "intersection identity over n parts");
    req(s, "--form", o.form, "form JSON");
    req(s, "--parts", o.parts, "n lists of vectors");
    on(s, [&] {
      const auto f = load_form(o.form);
      std::vector<std::vector<FVector>> parts;
      for (const Json& part : load_json(o.parts)) parts.push_back(vectors_from_json(part, f.modulus()));
      const bool holds = intersection_identity_check(f, parts);
      const Subspace lhs = g_infty(f, union_of(parts, parts.size()));
      Subspace rhs = Subspace::full(f.modulus(), static_cast<std::size_t>(f.dim()));
      for (std::size_t i = 0; i < parts.size(); ++i) rhs = rhs.intersect(g_infty(f, union_of(parts, i)));
      return dump(Json{{"holds", holds}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
    });
  }

  CLI::App* ex = app.add_subcommand("experiment", "acceptance experiments 1-9");
  {
    req(ex, "--criterion", o.criterion, "criterion number");
    CLI::Option* so = ex->add_option("--seed", o.seed, "seed");
    ex->add_option("--fixtures", o.fixtures, "fixtures directory, criterion 9");
    ex->add_option("--goldens", o.goldens, "golden directory, criterion 9");
    ex->add_flag("--update", o.update, "rewrite the golden files, criterion 9");
    on(ex, [&, so] {
      if (o.criterion == 9) {
        if (o.update) {
          write_goldens(o.fixtures, o.goldens);
          return dump(Json{{"criterion", 9}, {"updated", true}});
        }
        bool passed = false;
        Json details = golden_check(o.fixtures, o.goldens, passed);
        return dump(Json{{"criterion", 9}, {"title", "golden determinism"}, {"passed", passed}, {"details", details}});
      }
      const bool seeded = o.criterion != 1 && o.criterion != 7;
      if (seeded && so->count() == 0) throw DomainError("this experiment needs --seed");
      return dump(criterion_json(lab::run_criterion(o.criterion, o.seed)));
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }

  set_worker_count(static_cast<std::size_t>(threads));
  std::string text;
  try {
    text = action();
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return kExitDomain;
  }
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << out_path << "\n";
      return kExitDomain;
    }
    file << text;
  }
  return kExitOk;
}

std::vector<GoldenCase> golden_suite() {
  const std::string fx = "{fixtures}/";
  const std::string vol3 = fx + "volume_p5_n3.json";
  const std::string symp = fx + "symplectic_p2_d6.json";
  const std::string zero = fx + "zero_p2_n2_d2.json";
  const std::string deg = fx + "degenerate_p2_n3_d4.json";
  const std::string cube = fx + "family_k2_n3.json";
  const std::string sub10 = fx + "subsets_le2_n6.mfbf";
  return {
      {"form_eval", {"form", "eval", "--form", vol3, "--vectors", "[[1,2,0],[0,1,0],[3,0,1]]"}},
      {"form_radical", {"form", "radical", "--form", deg}},
      {"form_nondeg_volume", {"form", "nondeg", "--form", vol3}},
      {"form_nondeg_degenerate", {"form", "nondeg", "--form", deg}},
      {"form_generic", {"form", "generic", "--form", symp}},
      {"form_dual", {"form", "dual", "--form", symp, "--vectors", "[[1,0,0,0,0,0],[0,0,1,0,0,0]]"}},
      {"form_findw", {"form", "findw", "--form", symp, "--wedges", "[[[1,0,0,0,0,0]],[[0,0,1,0,0,0]]]",
                      "--values", "[1,1]", "--exclude", "[[0,1,0,0,0,0]]"}},
      {"form_extend", {"form", "extend", "--form", zero}},
      {"form_tower", {"form", "tower", "--form", zero, "--steps", "2"}},
      {"form_tower_guard", {"form", "tower", "--form", fx + "zero_p2_n3_d6.json", "--steps", "3"}},
      {"form_random", {"form", "random", "--p", "3", "--n", "3", "--d", "5", "--seed", "7"}},
      {"form_standard", {"form", "standard", "--kind", "symplectic", "--p", "2", "--d", "4"}},
      {"form_bad_input", {"form", "nondeg", "--form", "{\"p\": 4, \"n\": 2, \"d\": 2, \"coeffs\": []}"}},
      {"struct_generate", {"struct", "generate", "--form", symp, "--vectors", "[[1,0,0,0,0,0],[0,1,0,0,0,0],[1,1,0,0,0,0]]"}},
      {"struct_invariant", {"struct", "invariant", "--form", symp, "--vectors", "[[1,0,0,0,0,0],[0,1,1,0,0,0],[1,1,1,0,0,0]]"}},
      {"struct_equiv", {"struct", "equiv", "--form", zero, "--vectors", "[[1,0],[0,1]]", "--form-b", zero,
                        "--vectors-b", "[[1,1],[0,1]]", "--steps", "1"}},
      {"struct_embed", {"struct", "embed", "--form", symp, "--vectors", "[[1,0,0,0,0,0],[0,1,0,0,0,0]]", "--target", symp}},
      {"vc_shatter", {"vc", "shatter", "--family", cube, "--box", "[[0,1],[1,2]]"}},
      {"vc_dim", {"vc", "dim", "--family", sub10}},
      {"vc_sauer", {"vc", "sauer", "--family", sub10, "--d", "2"}},
      {"vc_sauer_none", {"vc", "sauer", "--family", sub10, "--d", "3"}},
      {"vc_badgraph", {"vc", "badgraph", "--k", "2", "--d", "1", "--n", "2"}},
      {"vc_randgraph", {"vc", "randgraph", "--sizes", "[3,3,8]", "--seed", "11", "--demands", "40", "--side", "1"}},
      {"vc_ramsey", {"vc", "ramsey", "--colors", fx + "colors_4x4.json", "--targets", "[2,2]"}},
      {"types_count", {"types", "count", "--oracle", "{\"kind\":\"badgraph\",\"k\":2,\"d\":1,\"n\":2}", "--seqs",
                       "[[0,1]]", "--window", "[0,1,2,3,4,5,6]"}},
      {"types_dagger", {"types", "dagger", "--oracle", "{\"kind\":\"badgraph\",\"k\":2,\"d\":2,\"n\":2}", "--seqs",
                        "[[0,1]]", "--long-range", "16", "--f", "2", "--eps", "0.2"}},
      {"types_dagger_csv", {"types", "dagger", "--oracle", "{\"kind\":\"random_table\",\"universes\":[1,4,16],\"seed\":9}",
                            "--seqs", "[[0,1,2,3]]", "--long-range", "16", "--dexp", "1", "--eps", "0.2", "--csv"}},
      {"types_compose", {"types", "compose", "--base", fx + "order8.json", "--functions", fx + "functions_k2.json",
                         "--universes", "[2,4,4]"}},
      {"types_arrayfam", {"types", "arrayfam", "--oracle", fx + "table_k2.json", "--n", "2", "--delta", "[0,1,2,0]",
                          "--seed", "5"}},
      {"conn_perp", {"conn", "perp", "--form", symp, "--vectors", "[[1,0,1,0,0,0]]"}},
      {"conn_ginfty_empty", {"conn", "ginfty", "--form", symp}},
      {"conn_ginfty", {"conn", "ginfty", "--form", fx + "random_p2_n3_d6.json", "--vectors",
                       "[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,1,0,0]]"}},
      {"conn_identity", {"conn", "identity", "--form", fx + "random_p2_n3_d6.json", "--parts",
                         "[[[1,0,0,0,0,0]],[[0,1,0,0,0,1]],[[0,0,1,0,1,0],[1,1,1,1,1,1]]]"}},
      {"experiment_1", {"experiment", "--criterion", "1"}},
      {"experiment_7", {"experiment", "--criterion", "7"}},
      {"unknown_command", {"frobnicate"}},
  };
}

namespace {

std::vector<std::string> substituted(const GoldenCase& c, const std::string& fixtures_dir) {
  std::vector<std::string> args;
  for (std::string a : c.args) {
    for (auto pos = a.find("{fixtures}"); pos != std::string::npos; pos = a.find("{fixtures}"))
      a.replace(pos, 10, fixtures_dir);
    args.push_back(std::move(a));
  }
  return args;
}

}  // namespace

std::string golden_text(const GoldenCase& c, const std::string& fixtures_dir, int threads) {
  auto args = substituted(c, fixtures_dir);
  args.push_back("--threads");
  args.push_back(std::to_string(threads));
  std::ostringstream out, err;
  const int code = run(args, out, err);
  // Usage text is not part of the golden: only the exit code is.
  return "exit " + std::to_string(code) + "\n" + out.str();
}

Json golden_check(const std::string& fixtures_dir, const std::string& golden_dir, bool& passed) {
  passed = true;
  Json cases = Json::array();
  for (const GoldenCase& c : golden_suite()) {
    const std::string a1 = golden_text(c, fixtures_dir, 1);
    const std::string b1 = golden_text(c, fixtures_dir, 1);
    const std::string a4 = golden_text(c, fixtures_dir, 4);
    const std::string b4 = golden_text(c, fixtures_dir, 4);
    std::string golden;
    bool have_golden = true;
    try {
      golden = read_file(golden_dir + "/" + c.name + ".golden");
    } catch (const DomainError&) {
      have_golden = false;
    }
    const bool stable = a1 == b1 && a4 == b4 && a1 == a4;
    const bool matches = have_golden && a1 == golden;
    passed = passed && stable && matches;
    cases.push_back(Json{{"name", c.name}, {"stable", stable}, {"matches_golden", matches}});
  }
  return cases;
}

void write_goldens(const std::string& fixtures_dir, const std::string& golden_dir) {
  for (const GoldenCase& c : golden_suite()) {
    std::ofstream file(golden_dir + "/" + c.name + ".golden", std::ios::binary);
    if (!file) throw DomainError("cannot write into " + golden_dir);
    file << golden_text(c, fixtures_dir, 1);
  }
}

}  // namespace multiform::cli
