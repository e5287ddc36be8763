#include "loclaurent/dataset.hpp"

#include <json.hpp>

#include <algorithm>

namespace loclaurent {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string &path, const std::string &what) {
  throw ParseError(path, what);
}

std::string at(const std::string &path, const std::string &key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string &path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const json &member(const json &obj, const std::string &key, const std::string &path) {
  if (!obj.is_object()) {
    fail(path, "expected an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(at(path, key), "missing required field");
  }
  return *it;
}

const json *optional_member(const json &obj, const std::string &key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::int64_t read_int(const json &j, const std::string &path) {
  if (!j.is_number_integer()) {
    fail(path, "expected an integer");
  }
  return j.get<std::int64_t>();
}

std::string read_string(const json &j, const std::string &path) {
  if (!j.is_string()) {
    fail(path, "expected a string");
  }
  return j.get<std::string>();
}

bool read_bool(const json &j, const std::string &path) {
  if (!j.is_boolean()) {
    fail(path, "expected true or false");
  }
  return j.get<bool>();
}

Scalar read_scalar(const json &j, const std::string &path) {
  if (j.is_number_integer()) {
    return Scalar(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (!j.is_string()) {
    fail(path, "expected a rational as a string \"p/q\" or an integer");
  }
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument &e) {
    fail(path, e.what());
  }
}

const json &read_array(const json &j, const std::string &path) {
  if (!j.is_array()) {
    fail(path, "expected an array");
  }
  return j;
}

std::vector<Scalar> read_vector(const json &j, const std::string &path, std::size_t length) {
  read_array(j, path);
  if (j.size() != length) {
    fail(path, "expected " + std::to_string(length) + " entries, got " +
                   std::to_string(j.size()));
  }
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_scalar(j[i], at(path, i)));
  }
  return out;
}

SpecPtr read_algebra(const json &j, const std::string &path) {
  const json &basis = read_array(member(j, "basis", path), at(path, "basis"));
  if (basis.empty()) {
    fail(at(path, "basis"), "an algebra needs at least one basis element");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    labels.push_back(read_string(basis[i], at(at(path, "basis"), i)));
  }
  const std::size_t d = labels.size();
  const std::string table_path = at(path, "structure_constants");
  const json &table_json = read_array(member(j, "structure_constants", path), table_path);
  if (table_json.size() != d) {
    fail(table_path, "expected " + std::to_string(d) + " rows");
  }
  AlgebraSpec::Table table;
  for (std::size_t i = 0; i < d; ++i) {
    const std::string row_path = at(table_path, i);
    const json &row = read_array(table_json[i], row_path);
    if (row.size() != d) {
      fail(row_path, "expected " + std::to_string(d) + " entries");
    }
    std::vector<std::vector<Scalar>> r;
    for (std::size_t k = 0; k < d; ++k) {
      r.push_back(read_vector(row[k], at(row_path, k), d));
    }
    table.push_back(std::move(r));
  }
  auto unit = read_vector(member(j, "unit", path), at(path, "unit"), d);
  return AlgebraSpec::make(std::move(labels), std::move(table), std::move(unit));
}

AlgebraElement read_element(const json &j, const std::string &path, const SpecPtr &spec) {
  return AlgebraElement(spec, read_vector(j, path, spec->dimension()));
}

// Point-form scalar: "c", c, or ["c"].
Scalar read_point_scalar(const json &j, const std::string &path) {
  if (j.is_array()) {
    return read_vector(j, path, 1).front();
  }
  return read_scalar(j, path);
}

FixedComponent read_component(const json &j, const std::string &path,
                              const SpecPtr &default_spec, std::size_t index) {
  if (!j.is_object()) {
    fail(path, "expected an object");
  }
  SpecPtr spec = default_spec;
  bool point_form = !default_spec;
  if (const json *alg = optional_member(j, "algebra")) {
    if (alg->is_string() && alg->get<std::string>() == "point") {
      spec = nullptr;
      point_form = true;
    } else if (alg->is_object()) {
      spec = read_algebra(*alg, at(path, "algebra"));
      point_form = false;
    } else {
      fail(at(path, "algebra"), "expected \"point\" or an algebra object");
    }
  }
  if (point_form) {
    spec = AlgebraSpec::point();
  }

  std::string label = "F" + std::to_string(index);
  if (const json *l = optional_member(j, "label")) {
    label = read_string(*l, at(path, "label"));
  }
  const std::int64_t phi = read_int(member(j, "phi", path), at(path, "phi"));

  AlgebraElement line = AlgebraElement::one(spec);
  if (point_form) {
    if (const json *l = optional_member(j, "line_class")) {
      line = AlgebraElement::constant(spec, read_point_scalar(*l, at(path, "line_class")));
    }
  } else {
    line = read_element(member(j, "line_class", path), at(path, "line_class"), spec);
  }

  std::vector<NormalSummand> normal;
  if (const json *s = optional_member(j, "summands")) {
    const std::string spath = at(path, "summands");
    read_array(*s, spath);
    for (std::size_t i = 0; i < s->size(); ++i) {
      const std::string p = at(spath, i);
      const json &sj = (*s)[i];
      const Weight weight = read_int(member(sj, "weight", p), at(p, "weight"));
      const std::int64_t rank = read_int(member(sj, "rank", p), at(p, "rank"));
      if (rank < 1) {
        fail(at(p, "rank"), "rank must be positive");
      }
      if (rank > 4096) {
        fail(at(p, "rank"), "rank is unreasonably large");
      }
      NormalSummand summand{weight, rank, {}};
      const json *ext = optional_member(sj, "exterior_powers");
      if (!ext) {
        if (!point_form) {
          fail(at(p, "exterior_powers"), "required for components over an algebra");
        }
        summand = NormalSummand::point(weight, rank);
      } else {
        const std::string ep = at(p, "exterior_powers");
        read_array(*ext, ep);
        if (ext->size() != static_cast<std::size_t>(rank + 1)) {
          fail(ep, "expected rank + 1 = " + std::to_string(rank + 1) + " entries");
        }
        for (std::size_t e = 0; e < ext->size(); ++e) {
          summand.exterior_powers.push_back(
              point_form
                  ? AlgebraElement::constant(spec, read_point_scalar((*ext)[e], at(ep, e)))
                  : read_element((*ext)[e], at(ep, e), spec));
        }
      }
      normal.push_back(std::move(summand));
    }
  }

  std::vector<Scalar> push{Scalar(1)};
  if (const json *q = optional_member(j, "pushforward")) {
    push = read_vector(*q, at(path, "pushforward"), spec->dimension());
  } else if (!point_form) {
    fail(at(path, "pushforward"), "required for components over an algebra");
  }
  return FixedComponent{std::move(label), phi, spec, std::move(line), std::move(normal),
                        std::move(push)};
}

std::vector<FixedComponent> read_components(const json &j, const std::string &path,
                                            const SpecPtr &default_spec) {
  read_array(j, path);
  std::vector<FixedComponent> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_component(j[i], at(path, i), default_spec, i));
  }
  return out;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  // nlohmann reports the byte just past the offending character.
  if (column > 1) {
    --column;
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

// ---- writing ----

ordered_json scalar_json(const Scalar &s) { return format_scalar(s); }

ordered_json vector_json(const std::vector<Scalar> &v) {
  ordered_json out = ordered_json::array();
  for (const auto &s : v) {
    out.push_back(scalar_json(s));
  }
  return out;
}

ordered_json algebra_json(const AlgebraSpec &spec) {
  ordered_json out;
  out["basis"] = spec.basis_labels();
  ordered_json table = ordered_json::array();
  for (const auto &row : spec.structure_constants()) {
    ordered_json r = ordered_json::array();
    for (const auto &entry : row) {
      r.push_back(vector_json(entry));
    }
    table.push_back(std::move(r));
  }
  out["structure_constants"] = std::move(table);
  out["unit"] = vector_json(spec.unit());
  return out;
}

bool binomial_powers(const NormalSummand &s) {
  for (std::int64_t j = 0; j <= s.rank; ++j) {
    if (!(s.exterior_powers[j] == AlgebraElement::constant(AlgebraSpec::point(),
                                                           binomial(s.rank, j)))) {
      return false;
    }
  }
  return true;
}

ordered_json component_json(const FixedComponent &c, const SpecPtr &default_spec) {
  ordered_json out;
  out["label"] = c.label;
  out["phi"] = c.phi;
  const bool point_form = c.is_point_mode();
  if (point_form && default_spec) {
    out["algebra"] = "point";
  } else if (!point_form && !same_spec(c.spec, default_spec)) {
    out["algebra"] = algebra_json(*c.spec);
  }
  if (point_form) {
    out["line_class"] = scalar_json(c.line_class[0]);
  } else {
    out["line_class"] = vector_json(c.line_class.coords());
  }
  ordered_json summands = ordered_json::array();
  for (const auto &s : c.normal) {
    ordered_json sj;
    sj["weight"] = s.weight;
    sj["rank"] = s.rank;
    if (!point_form || !binomial_powers(s)) {
      ordered_json ext = ordered_json::array();
      for (const auto &e : s.exterior_powers) {
        ext.push_back(point_form ? scalar_json(e[0]) : vector_json(e.coords()));
      }
      sj["exterior_powers"] = std::move(ext);
    }
    summands.push_back(std::move(sj));
  }
  out["summands"] = std::move(summands);
  if (!point_form) {
    out["pushforward"] = vector_json(c.pushforward);
  }
  return out;
}

ordered_json components_json(const std::vector<FixedComponent> &cs, const SpecPtr &default_spec) {
  ordered_json out = ordered_json::array();
  for (const auto &c : cs) {
    out.push_back(component_json(c, default_spec));
  }
  return out;
}

} // namespace

ExampleRecord parse_dataset(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    std::string what = e.what();
    // drop nlohmann's "[json.exception...] parse error at line L, column C: " prefix
    if (auto col = what.find("column"); col != std::string::npos) {
      if (auto colon = what.find(": ", col); colon != std::string::npos) {
        what = what.substr(colon + 2);
      }
    }
    throw ParseError(line_column(text, e.byte), "malformed JSON: " + what);
  }
  if (!root.is_object()) {
    fail("$", "dataset must be a JSON object");
  }
  const auto version = read_int(member(root, "schema_version", ""), "schema_version");
  if (version != kSchemaVersion) {
    fail("schema_version", "unsupported schema version " + std::to_string(version));
  }

  ExampleRecord record;
  if (const json *n = optional_member(root, "name")) {
    record.name = read_string(*n, "name");
  }
  const std::string mode = read_string(member(root, "mode", ""), "mode");
  SpecPtr default_spec;
  if (mode == "algebra") {
    default_spec = read_algebra(member(root, "algebra", ""), "algebra");
  } else if (mode != "point") {
    fail("mode", "expected \"point\" or \"algebra\", got \"" + mode + "\"");
  }
  if (const json *m = optional_member(root, "metadata")) {
    record.data.metadata = read_string(*m, "metadata");
  }
  record.data.components =
      read_components(member(root, "components", ""), "components", default_spec);
  if (record.data.components.empty()) {
    fail("components", "at least one fixed component is required");
  }

  if (const json *cut = optional_member(root, "cut")) {
    CutTriple t;
    t.original = record.data;
    t.plus_cut.components =
        read_components(member(*cut, "plus_components", "cut"), "cut.plus_components",
                        default_spec);
    t.plus_cut.metadata = "positive cut";
    if (const json *minus = optional_member(*cut, "minus_components")) {
      ManifoldData m;
      m.components = read_components(*minus, "cut.minus_components", default_spec);
      m.metadata = "negative cut";
      t.minus_cut = std::move(m);
    }
    t.reduced_quantization =
        read_scalar(member(*cut, "reduced_quantization", "cut"), "cut.reduced_quantization");
    if (const json *note = optional_member(*cut, "note")) {
      t.note = read_string(*note, "cut.note");
    }
    if (const json *free = optional_member(*cut, "free_action")) {
      t.free_action = read_bool(*free, "cut.free_action");
    }
    record.cut = std::move(t);
  }

  if (const json *expected = optional_member(root, "expected")) {
    if (const json *ch = optional_member(*expected, "character")) {
      read_array(*ch, "expected.character");
      ScalarPoly p;
      for (std::size_t i = 0; i < ch->size(); ++i) {
        const std::string path = at("expected.character", i);
        const json &pair = read_array((*ch)[i], path);
        if (pair.size() != 2) {
          fail(path, "expected a [degree, coefficient] pair");
        }
        const Degree d = read_int(pair[0], at(path, 0));
        if (p.coeff(d) != 0) {
          fail(path, "degree " + std::to_string(d) + " listed twice");
        }
        p.add_term(d, read_scalar(pair[1], at(path, 1)));
      }
      record.expected_character = std::move(p);
    }
    if (const json *inv = optional_member(*expected, "invariant_part")) {
      record.expected_invariant = read_scalar(*inv, "expected.invariant_part");
    }
    if (const json *note = optional_member(*expected, "note")) {
      record.oracle_note = read_string(*note, "expected.note");
    }
  }
  return record;
}

std::string dataset_to_json(const ExampleRecord &record) {
  SpecPtr default_spec;
  for (const auto &c : record.data.components) {
    if (!c.is_point_mode()) {
      default_spec = c.spec;
      break;
    }
  }

  ordered_json root;
  root["schema_version"] = kSchemaVersion;
  root["name"] = record.name;
  root["mode"] = default_spec ? "algebra" : "point";
  root["metadata"] = record.data.metadata;
  if (default_spec) {
    root["algebra"] = algebra_json(*default_spec);
  }
  root["components"] = components_json(record.data.components, default_spec);
  if (record.cut) {
    const auto &t = record.cut.value();
    ordered_json cut;
    cut["plus_components"] = components_json(t.plus_cut.components, default_spec);
    if (t.minus_cut) {
      cut["minus_components"] = components_json(t.minus_cut->components, default_spec);
    }
    cut["reduced_quantization"] = scalar_json(t.reduced_quantization);
    cut["note"] = t.note;
    cut["free_action"] = t.free_action;
    root["cut"] = std::move(cut);
  }
  if (record.expected_character || record.expected_invariant || !record.oracle_note.empty()) {
    ordered_json expected;
    if (record.expected_character) {
      ordered_json ch = ordered_json::array();
      for (const auto &[d, c] : record.expected_character->terms()) {
        ch.push_back(ordered_json::array({d, format_scalar(c)}));
      }
      expected["character"] = std::move(ch);
    }
    if (record.expected_invariant) {
      expected["invariant_part"] = scalar_json(record.expected_invariant.value());
    }
    expected["note"] = record.oracle_note;
    root["expected"] = std::move(expected);
  }
  return root.dump(2) + "\n";
}

} // namespace loclaurent
