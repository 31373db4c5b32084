#pragma once

// JSON forms of every public type. Keys are emitted sorted, so equal values
// serialize to identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "multiform/boxvc.hpp"
#include "multiform/conncomp.hpp"
#include "multiform/exterior.hpp"
#include "multiform/ffla.hpp"
#include "multiform/form.hpp"
#include "multiform/mform.hpp"
#include "multiform/structure.hpp"
#include "multiform/typecount.hpp"

namespace multiform {

using Json = nlohmann::json;

Json to_json(const FVector& v);
Json to_json(const FMatrix& m);
Json to_json(const AlternatingForm& f);
Json to_json(const WedgeVector& t);
Json to_json(const TowerCertificate& c);
Json to_json(const Tower& t);
Json to_json(const Substructure& s);
Json to_json(const AtomicInvariant& inv);
Json to_json(const PartialIso& iso);
Json to_json(const Box& b);
Json to_json(const BoxFamily& fam);
Json to_json(const PartiteHypergraph& g);
Json to_json(const Subspace& s);
Json to_json(const TypeCountReport& r);

// Coordinates only, without the modulus.
Json coords_json(const FVector& v);
Json coords_json(std::span<const FVector> vs);

// A vector is either {"p": p, "coords": [...]} or a bare integer array read
// over F_p.
FVector vector_from_json(const Json& j, std::uint32_t p);
std::vector<FVector> vectors_from_json(const Json& j, std::uint32_t p);
AlternatingForm form_from_json(const Json& j);
WedgeVector wedge_from_json(const Json& j);
Box box_from_json(const Json& j);
BoxFamily family_from_json(const Json& j);
PartiteHypergraph hypergraph_from_json(const Json& j);
ColorArray colors_from_json(const Json& j);

// Oracle descriptions:
//   {"kind": "constant", "universes": [...], "value": bool}
//   {"kind": "table", "universes": [...], "table": "0110..."}
//   {"kind": "random_table", "universes": [...], "seed": s}
//   {"kind": "badgraph", "k": k, "d": d, "n": n}
//   {"kind": "form", "form": {...}}
//   {"kind": "order", "size": s}            x_0 < x_1 on [s]
//   {"kind": "composed", "base": {...}, "universes": [...],
//    "functions": [{"slots": [...], "values": [...]}, ...]}
RelationOracle oracle_from_json(const Json& j);
std::vector<FunctionTable> functions_from_json(const Json& j);

// One CSV line: k,n,m,d_exp,eps,bound_exponent,window_length,intervals,max_count,passed
std::string csv_header();
std::string csv_row(const TypeCountReport& r);

}  // namespace multiform
