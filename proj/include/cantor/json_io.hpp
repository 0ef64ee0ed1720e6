#pragma once

#include <string>

#include <json.hpp>

#include "cantor/algebra.hpp"
#include "cantor/coding.hpp"
#include "cantor/core_space.hpp"
#include "cantor/integration.hpp"
#include "cantor/measure.hpp"
#include "cantor/rational.hpp"

/*
 * JSON encodings used by the CLI and by file inputs.
 *
 *   rational   "p/q" (lowest terms; plain integers also accepted on input)
 *   sequence   {"pre": [symbols], "per": [symbols]}
 *   cylinder   {"prefix": [symbols]}
 *   interval   {"lo": "p/q", "hi": "p/q"}
 *   two-sided  {"left_per": [...], "center": [...], "right_per": [...],
 *               "center_start": int}
 *   op table   {"symbols": [...], "table": [[...]], "identity"?, "inverse"?,
 *               "basepoint"?}
 *   measure    {"type": "product", "weights": [[...]], "pre_weights"?,
 *               "symbols"?, "probability"?, "positive"?}
 *              {"type": "tree", "mass": {"word": "p/q"}, "symbols"?}
 *   step fn    {"depth": m, "values": {"word": "p/q"}, "symbols"?}
 *
 * Symbols appear as their alphabet labels; labels that are decimal numbers
 * are written as JSON numbers. Words inside JSON object keys use the
 * compact single-character form ("01" = [0,1]; "" = the root), so tree
 * masses and step values need single-character labels.
 */
namespace cantor::json_io {

using nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json symbol_to_json(const Alphabet& alphabet, Symbol s);
Symbol symbol_from_json(const Alphabet& alphabet, const json& j);

json descriptor_to_json(const LevelSystem& system, const SequenceDescriptor& x);
SequenceDescriptor descriptor_from_json(const LevelSystem& system, const json& j);

json cylinder_to_json(const LevelSystem& system, const Cylinder& c);
Cylinder cylinder_from_json(const LevelSystem& system, const json& j);

json interval_to_json(const Interval& iv);

json bi_descriptor_to_json(const Alphabet& alphabet, const BiSequenceDescriptor& x);
BiSequenceDescriptor bi_descriptor_from_json(const Alphabet& alphabet, const json& j);

std::string word_to_string(const LevelSystem& system, const Letters& word);
Letters word_from_string(const LevelSystem& system, const std::string& text);

json op_table_to_json(const OpTable& t);
OpTable op_table_from_json(const json& j);

json measure_to_json(const Measure& mu);
Measure measure_from_json(const json& j);

json step_to_json(const StepFunction& f);
StepFunction step_from_json(const json& j);

}  // namespace cantor::json_io
