#include "cantor/json_io.hpp"

#include <charconv>
#include <set>

#include "cantor/errors.hpp"

namespace cantor::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(Error::Kind::invalid_input, what);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    bad(std::string("missing JSON field '") + name + "'");
  return j.at(name);
}

bool numeric_label(const std::string& label) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  return ec == std::errc() && ptr == label.data() + label.size() &&
         std::to_string(value) == label;
}

std::string label_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("symbol must be a string or integer label");
}

Letters letters_from_json(const LevelSystem& system, const json& j, int start_level) {
  if (!j.is_array()) bad("symbol list must be a JSON array");
  Letters out;
  out.reserve(j.size());
  int level = start_level;
  for (const auto& item : j) {
    std::string label = label_from_json(item);
    auto s = system.alphabet_at(level).index_of(label);
    if (!s) bad("unknown symbol label '" + label + "'");
    out.push_back(*s);
    ++level;
  }
  return out;
}

json letters_to_json(const LevelSystem& system, const Letters& word, int start_level) {
  json out = json::array();
  int level = start_level;
  for (Symbol s : word) {
    out.push_back(symbol_to_json(system.alphabet_at(level), s));
    ++level;
  }
  return out;
}

Letters alphabet_letters_from_json(const Alphabet& alphabet, const json& j) {
  if (!j.is_array()) bad("symbol list must be a JSON array");
  Letters out;
  out.reserve(j.size());
  for (const auto& item : j) {
    std::string label = label_from_json(item);
    auto s = alphabet.index_of(label);
    if (!s) bad("unknown symbol label '" + label + "'");
    out.push_back(*s);
  }
  return out;
}

json alphabet_letters_to_json(const Alphabet& alphabet, const Letters& word) {
  json out = json::array();
  for (Symbol s : word) out.push_back(symbol_to_json(alphabet, s));
  return out;
}

json alphabet_to_json(const Alphabet& alphabet) {
  json out = json::array();
  for (Symbol s = 0; s < alphabet.size(); ++s)
    out.push_back(symbol_to_json(alphabet, s));
  return out;
}

Alphabet alphabet_from_json(const json& j, std::optional<Symbol> basepoint = std::nullopt) {
  if (!j.is_array() || j.empty()) bad("alphabet must be a non-empty JSON array");
  std::vector<std::string> labels;
  labels.reserve(j.size());
  for (const auto& item : j) labels.push_back(label_from_json(item));
  return Alphabet(std::move(labels), basepoint);
}

MeasureOptions options_from_json(const json& j) {
  MeasureOptions options;
  if (j.contains("probability")) options.require_probability = j.at("probability").get<bool>();
  if (j.contains("positive")) options.require_positive = j.at("positive").get<bool>();
  return options;
}

std::vector<std::vector<Rational>> weight_rows_from_json(const json& j) {
  if (!j.is_array()) bad("weights must be an array of per-level arrays");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) bad("each weight row must be a non-empty array");
    std::vector<Rational> weights;
    weights.reserve(row.size());
    for (const auto& w : row) weights.push_back(rational_from_json(w));
    rows.push_back(std::move(weights));
  }
  return rows;
}

// Alphabets for a measure/step file: "symbols" may be a flat list (one
// alphabet everywhere) or a list of lists (preperiod rows first, then the
// cycle); with no "symbols" the labels default to "0".."k-1" per row.
LevelSystem system_for_rows(const json& j, const std::vector<std::vector<Rational>>& pre,
                            const std::vector<std::vector<Rational>>& cycle) {
  if (j.contains("symbols")) {
    const json& symbols = j.at("symbols");
    if (!symbols.is_array() || symbols.empty()) bad("symbols must be a non-empty array");
    if (symbols.front().is_array()) {
      if (symbols.size() != pre.size() + cycle.size())
        bad("per-level symbols must match the number of weight rows");
      std::vector<Alphabet> pre_alpha, cycle_alpha;
      for (std::size_t i = 0; i < symbols.size(); ++i)
        (i < pre.size() ? pre_alpha : cycle_alpha).push_back(alphabet_from_json(symbols[i]));
      return LevelSystem::staged(std::move(pre_alpha), std::move(cycle_alpha));
    }
    return LevelSystem::homogeneous(alphabet_from_json(symbols));
  }
  auto digits = [](std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return Alphabet(std::move(labels));
  };
  std::vector<Alphabet> pre_alpha, cycle_alpha;
  for (const auto& row : pre) pre_alpha.push_back(digits(row.size()));
  for (const auto& row : cycle) cycle_alpha.push_back(digits(row.size()));
  return LevelSystem::staged(std::move(pre_alpha), std::move(cycle_alpha));
}

// Homogeneous system for word-keyed JSON objects (tree masses, step
// values): explicit "symbols", or else the sorted set of first characters
// of the keys (totality puts every symbol in first position).
LevelSystem system_for_words(const json& j, const json& words) {
  if (j.contains("symbols"))
    return LevelSystem::homogeneous(alphabet_from_json(j.at("symbols")));
  std::set<char> first_chars;
  for (auto it = words.begin(); it != words.end(); ++it)
    if (!it.key().empty()) first_chars.insert(it.key().front());
  if (first_chars.empty()) bad("cannot infer the alphabet from word keys");
  std::vector<std::string> labels;
  for (char c : first_chars) labels.emplace_back(1, c);
  return LevelSystem::homogeneous(Alphabet(std::move(labels)));
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational must be a \"p/q\" string or an integer");
}

json symbol_to_json(const Alphabet& alphabet, Symbol s) {
  const std::string& label = alphabet.label(s);
  if (numeric_label(label)) {
    int value = 0;
    std::from_chars(label.data(), label.data() + label.size(), value);
    return value;
  }
  return label;
}

Symbol symbol_from_json(const Alphabet& alphabet, const json& j) {
  std::string label = label_from_json(j);
  auto s = alphabet.index_of(label);
  if (!s) bad("unknown symbol label '" + label + "'");
  return *s;
}

json descriptor_to_json(const LevelSystem& system, const SequenceDescriptor& x) {
  int pre_len = static_cast<int>(x.preperiod().size());
  return json{{"pre", letters_to_json(system, x.preperiod(), 1)},
              {"per", letters_to_json(system, x.period(), pre_len + 1)}};
}

SequenceDescriptor descriptor_from_json(const LevelSystem& system, const json& j) {
  Letters pre = letters_from_json(system, field(j, "pre"), 1);
  Letters per = letters_from_json(system, field(j, "per"),
                                  static_cast<int>(pre.size()) + 1);
  return SequenceDescriptor(system, std::move(pre), std::move(per));
}

json cylinder_to_json(const LevelSystem& system, const Cylinder& c) {
  return json{{"prefix", letters_to_json(system, c.prefix, 1)}};
}

Cylinder cylinder_from_json(const LevelSystem& system, const json& j) {
  Cylinder c{letters_from_json(system, field(j, "prefix"), 1)};
  validate(system, c);
  return c;
}

json interval_to_json(const Interval& iv) {
  return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}};
}

json bi_descriptor_to_json(const Alphabet& alphabet, const BiSequenceDescriptor& x) {
  return json{{"left_per", alphabet_letters_to_json(alphabet, x.left_period())},
              {"center", alphabet_letters_to_json(alphabet, x.center())},
              {"right_per", alphabet_letters_to_json(alphabet, x.right_period())},
              {"center_start", x.center_start()}};
}

BiSequenceDescriptor bi_descriptor_from_json(const Alphabet& alphabet, const json& j) {
  BiSequenceDescriptor x(alphabet_letters_from_json(alphabet, field(j, "left_per")),
                         alphabet_letters_from_json(alphabet, field(j, "center")),
                         alphabet_letters_from_json(alphabet, field(j, "right_per")),
                         field(j, "center_start").get<int>());
  validate(alphabet, x);
  return x;
}

std::string word_to_string(const LevelSystem& system, const Letters& word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Alphabet& alphabet = system.alphabet_at(static_cast<int>(i) + 1);
    if (!alphabet.single_char_labels())
      bad("compact word strings need single-character labels");
    out += alphabet.label(word[i]);
  }
  return out;
}

Letters word_from_string(const LevelSystem& system, const std::string& text) {
  Letters out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const Alphabet& alphabet = system.alphabet_at(static_cast<int>(i) + 1);
    auto s = alphabet.index_of(std::string(1, text[i]));
    if (!s) bad(std::string("unknown symbol '") + text[i] + "' in word \"" + text + "\"");
    out.push_back(*s);
  }
  return out;
}

json op_table_to_json(const OpTable& t) {
  const Alphabet& a = t.alphabet();
  json table = json::array();
  for (Symbol x = 0; x < a.size(); ++x) {
    json row = json::array();
    for (Symbol y = 0; y < a.size(); ++y) row.push_back(symbol_to_json(a, t.apply(x, y)));
    table.push_back(std::move(row));
  }
  json out{{"symbols", alphabet_to_json(a)}, {"table", std::move(table)}};
  if (auto e = t.declared_identity()) out["identity"] = symbol_to_json(a, *e);
  if (t.declared_identity()) {
    json inverse = json::object();
    bool total = true;
    for (Symbol s = 0; s < a.size(); ++s) {
      auto inv = t.inverse_of(s);
      if (!inv) { total = false; break; }
      inverse[a.label(s)] = symbol_to_json(a, *inv);
    }
    if (total) out["inverse"] = std::move(inverse);
  }
  if (auto b = a.basepoint()) out["basepoint"] = symbol_to_json(a, *b);
  return out;
}

OpTable op_table_from_json(const json& j) {
  std::optional<Symbol> basepoint;
  Alphabet no_basepoint = alphabet_from_json(field(j, "symbols"));
  if (j.contains("basepoint")) {
    basepoint = symbol_from_json(no_basepoint, j.at("basepoint"));
  } else if (j.contains("identity")) {
    // An identity is the natural basepoint.
    basepoint = symbol_from_json(no_basepoint, j.at("identity"));
  }
  Alphabet alphabet = alphabet_from_json(field(j, "symbols"), basepoint);

  const json& table_json = field(j, "table");
  if (!table_json.is_array()) bad("operation table must be an array of rows");
  std::vector<std::vector<Symbol>> table;
  for (const auto& row_json : table_json) {
    if (!row_json.is_array()) bad("operation table row must be an array");
    std::vector<Symbol> row;
    for (const auto& entry : row_json) row.push_back(symbol_from_json(alphabet, entry));
    table.push_back(std::move(row));
  }

  std::optional<Symbol> identity;
  if (j.contains("identity")) identity = symbol_from_json(alphabet, j.at("identity"));
  std::optional<std::vector<Symbol>> inverse;
  if (j.contains("inverse")) {
    const json& inv_json = j.at("inverse");
    if (!inv_json.is_object()) bad("inverse must be an object of label pairs");
    std::vector<Symbol> inv(static_cast<std::size_t>(alphabet.size()), -1);
    for (auto it = inv_json.begin(); it != inv_json.end(); ++it) {
      auto from = alphabet.index_of(it.key());
      if (!from) bad("unknown symbol label '" + it.key() + "' in inverse map");
      inv[static_cast<std::size_t>(*from)] = symbol_from_json(alphabet, it.value());
    }
    for (Symbol s : inv)
      if (s < 0) bad("inverse map must cover every symbol");
    inverse = std::move(inv);
  }
  return OpTable(std::move(alphabet), std::move(table), identity, std::move(inverse));
}

json measure_to_json(const Measure& mu) {
  if (const auto* product = std::get_if<ProductMeasure>(&mu)) {
    json weights = json::array();
    for (const auto& row : product->cycle_rows()) {
      json r = json::array();
      for (const auto& w : row) r.push_back(w.str());
      weights.push_back(std::move(r));
    }
    json out{{"type", "product"}, {"weights", std::move(weights)}};
    if (!product->pre_rows().empty()) {
      json pre = json::array();
      for (const auto& row : product->pre_rows()) {
        json r = json::array();
        for (const auto& w : row) r.push_back(w.str());
        pre.push_back(std::move(r));
      }
      out["pre_weights"] = std::move(pre);
    }
    json symbols = json::array();
    int rows = static_cast<int>(product->pre_rows().size() + product->cycle_rows().size());
    for (int l = 1; l <= rows; ++l)
      symbols.push_back(alphabet_to_json(product->system().alphabet_at(l)));
    out["symbols"] = std::move(symbols);
    if (product->options().require_probability) out["probability"] = true;
    if (product->options().require_positive) out["positive"] = true;
    return out;
  }
  const TreeMeasure* tree = std::get_if<TreeMeasure>(&mu);
  TreeMeasure materialized = tree ? *tree : std::get<FinitePointMeasure>(mu).to_tree();
  json mass = json::object();
  for (int d = 0; d <= materialized.depth(); ++d)
    for (const auto& [word, r] : materialized.layer(d))
      mass[word_to_string(materialized.system(), word)] = r.str();
  json out{{"type", "tree"}, {"mass", std::move(mass)}};
  out["symbols"] = alphabet_to_json(materialized.system().alphabet_at(1));
  return out;
}

Measure measure_from_json(const json& j) {
  std::string type = field(j, "type").get<std::string>();
  if (type == "product") {
    auto cycle = weight_rows_from_json(field(j, "weights"));
    std::vector<std::vector<Rational>> pre;
    if (j.contains("pre_weights")) pre = weight_rows_from_json(j.at("pre_weights"));
    LevelSystem system = system_for_rows(j, pre, cycle);
    return ProductMeasure(std::move(system), std::move(pre), std::move(cycle),
                          options_from_json(j));
  }
  if (type == "tree") {
    const json& mass_json = field(j, "mass");
    if (!mass_json.is_object()) bad("tree mass must be a JSON object");
    LevelSystem system = system_for_words(j, mass_json);
    int depth = 0;
    for (auto it = mass_json.begin(); it != mass_json.end(); ++it)
      depth = std::max(depth, static_cast<int>(it.key().size()));
    TreeMeasure::Masses masses(static_cast<std::size_t>(depth) + 1);
    for (auto it = mass_json.begin(); it != mass_json.end(); ++it) {
      Letters word = word_from_string(system, it.key());
      masses[word.size()].emplace(std::move(word), rational_from_json(it.value()));
    }
    return TreeMeasure(std::move(system), std::move(masses), options_from_json(j));
  }
  bad("measure type must be \"product\" or \"tree\"");
}

json step_to_json(const StepFunction& f) {
  json values = json::object();
  for (const auto& [word, v] : f.values())
    values[word_to_string(f.system(), word)] = v.str();
  json out{{"depth", f.depth()}, {"values", std::move(values)}};
  out["symbols"] = alphabet_to_json(f.system().alphabet_at(1));
  return out;
}

StepFunction step_from_json(const json& j) {
  int depth = field(j, "depth").get<int>();
  const json& values_json = field(j, "values");
  if (!values_json.is_object()) bad("step function values must be a JSON object");
  LevelSystem system = system_for_words(j, values_json);
  std::map<Letters, Rational> values;
  for (auto it = values_json.begin(); it != values_json.end(); ++it)
    values.emplace(word_from_string(system, it.key()), rational_from_json(it.value()));
  return StepFunction(std::move(system), depth, std::move(values));
}

}  // namespace cantor::json_io
