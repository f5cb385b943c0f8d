#pragma once

#include <json.hpp>

#include "silc/nildaha.hpp"
#include "silc/pieri.hpp"

namespace silc {

using json = nlohmann::ordered_json;

// Schema "silc/1".  Weights are integer arrays in the fundamental-weight
// basis, coweights in the simple-coroot basis, affine elements
// {"word": [...], "trans": [...]} with the word the canonical reduced word of
// the finite part, rationals "p/q" strings, characters sorted term lists.

json to_json(const Weight& w);
json to_json(const Coweight& xi);
json to_json(const CartanDatum& cd, const AffineWeylElement& x);
json to_json(const CartanDatum& cd, const SiLSPath& pi);
json to_json(const GroupAlgebraElement& f);
json to_json(const GradedCharacter& g);
json to_json(const LaurentCharacter& f);
json to_json(const CartanDatum& cd, const KClassCombo& k);
json to_json(const Report& r);

Weight weight_from_json(const json& j);
Coweight coweight_from_json(const json& j);
AffineWeylElement affine_from_json(const CartanDatum& cd, const json& j);
SiLSPath path_from_json(const CartanDatum& cd, const json& j);

// Flag-style parsers used by the CLI and job files.
Weight parse_weight_csv(const CartanDatum& cd, const std::string& text);
Coweight parse_coweight_csv(const CartanDatum& cd, const std::string& text);

// "word ; translation": word is space-separated indices over {0} u I applied
// left to right, translation a space- or comma-separated integer vector.
AffineWeylElement parse_affine(const CartanDatum& cd, const std::string& text);

// Finite Weyl word only (0 rejected).
FiniteWeylElement parse_finite_word(const CartanDatum& cd, const std::string& text);

std::string text_of(const CartanDatum& cd, const AffineWeylElement& x);
std::string text_of(const GradedCharacter& g);

// DOT digraph of the si-Bruhat cover graph above x, capped at `levels`.
std::string bruhat_graph_dot(const CartanDatum& cd, const AffineWeylElement& x, const ParabolicSet& J,
                             int levels, const Budget& budget = {});

}  // namespace silc
