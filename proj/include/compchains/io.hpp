#pragma once

#include <json.hpp>

#include "compchains/composition.hpp"
#include "compchains/ncgen.hpp"
#include "compchains/operators.hpp"
#include "compchains/polyfrac.hpp"

namespace compchains {

using nlohmann::json;

// Compositions are integer arrays, words and letters their text form,
// rationals strings like "-3/2".
void to_json(json& j, const Composition& p);
void from_json(const json& j, Composition& p);
void to_json(json& j, const Letter& t);
void from_json(const json& j, Letter& t);

/// {"terms": [{"exponents": [..], "coeff": "c"}, ...]}
void to_json(json& j, const MultiPoly& p);
void from_json(const json& j, MultiPoly& p);
/// {"numerator": poly, "denominator": [{"factor": poly, "exponent": m}, ...]}
void to_json(json& j, const FactoredRational& f);
void from_json(const json& j, FactoredRational& f);
/// {"coeffs": ["a0", "a1", ...]}
void to_json(json& j, const UniPoly& p);
void from_json(const json& j, UniPoly& p);
void to_json(json& j, const UniRational& f);
void from_json(const json& j, UniRational& f);

/// {"max_length": n, "terms": [{"word": "U2 L L", "monomial": [1, 2]}, ...]}
void to_json(json& j, const NCSeries& s);
void from_json(const json& j, NCSeries& s);
/// {"states": n, "start": s, "accept": a,
///  "edges": [{"from": u, "to": v, "letter": "L" or null, "weight": [..]}]}
void to_json(json& j, const WeightedDigraph& g);
void from_json(const json& j, WeightedDigraph& g);

}  // namespace compchains
