// Copyright 2026 The shmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON file formats. Every file is an object with "schema" and "kind"
// fields; element sets are sorted index arrays. Serialization is canonical
// (fixed key order, shared function definitions named in order of first
// use), so Parse followed by Dump reproduces a canonical file byte for byte.

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "shmetric/apps/corpus.hpp"
#include "shmetric/constraint.hpp"
#include "shmetric/element_set.hpp"
#include "shmetric/instance.hpp"
#include "shmetric/polymatroid.hpp"

namespace shm::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Syntax errors carry the 1-based line and column of the offending byte.
// Semantic errors carry a JSON-pointer-like location and line = 0.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(Format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

namespace detail {

[[noreturn]] inline void Fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) Fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

inline std::size_t AsIndex(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    Fail(where, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

inline double AsReal(const Json& j, const std::string& where) {
  if (!j.is_number()) Fail(where, "expected a number");
  return j.get<double>();
}

inline std::vector<double> AsReals(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(AsReal(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline std::vector<std::size_t> AsIndices(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(AsIndex(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline std::vector<std::vector<double>> AsMatrix(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array of rows");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(AsReals(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline std::vector<std::vector<std::size_t>> AsIndexLists(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array of index arrays");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(AsIndices(j[i], where + "/" + std::to_string(i)));
  return out;
}

inline void RequireHeader(const Json& j, const char* kind) {
  const Json& schema = Field(j, "schema", "");
  if (!schema.is_number_integer() || schema.get<std::int64_t>() != kSchemaVersion) {
    Fail("/schema", "unsupported schema version " + schema.dump() + " (expected " +
                        std::to_string(kSchemaVersion) + ")");
  }
  const Json& k = Field(j, "kind", "");
  if (!k.is_string() || k.get<std::string>() != kind) {
    Fail("/kind", "expected \"" + std::string(kind) + "\", got " + k.dump());
  }
}

inline Json Header(const char* kind) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

template <typename T>
std::vector<std::vector<T>> Rows(const std::vector<T>& flat, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<T>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) out[i].assign(flat.begin() + i * cols, flat.begin() + (i + 1) * cols);
  return out;
}

}  // namespace detail

// Converts a syntax error offset into a line/column diagnostic.
inline Json ParseText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

// Element sets.

inline Json SetToJson(const ElementSet& s) { return Json(s.Indices()); }

inline ElementSet SetFromJson(const Json& j, std::size_t n, const std::string& where) {
  ElementSet s(n);
  for (std::size_t i : detail::AsIndices(j, where)) {
    if (i >= n) detail::Fail(where, "index " + std::to_string(i) + " outside ground set of size " + std::to_string(n));
    s.insert(i);
  }
  return s;
}

// Constraints.

inline Json ConstraintToJson(const Constraint& c) {
  Json j;
  switch (c.kind) {
    case Constraint::Kind::kUnconstrained: j["kind"] = "unconstrained"; return j;
    case Constraint::Kind::kCardAtLeast: j["kind"] = "at_least"; break;
    case Constraint::Kind::kCardAtMost: j["kind"] = "at_most"; break;
    case Constraint::Kind::kCardExact: j["kind"] = "exact"; break;
  }
  j["k"] = c.k;
  return j;
}

inline Constraint ConstraintFromJson(const Json& j, const std::string& where) {
  const Json& kind = detail::Field(j, "kind", where);
  if (!kind.is_string()) detail::Fail(where + "/kind", "expected a string");
  const std::string name = kind.get<std::string>();
  if (name == "unconstrained") return Constraint::Unconstrained();
  const std::size_t k = detail::AsIndex(detail::Field(j, "k", where), where + "/k");
  if (name == "at_least") return Constraint::AtLeast(k);
  if (name == "at_most") return Constraint::AtMost(k);
  if (name == "exact") return Constraint::Exact(k);
  detail::Fail(where + "/kind", "unknown constraint kind \"" + name + "\"");
}

// Function records.

inline Json FunctionToJson(const PolymatroidSpec& f) {
  Json j;
  j["type"] = std::string(f.KindName());
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, ModularParams>) {
          j["weights"] = p.weights;
        } else if constexpr (std::is_same_v<P, ConcaveCardinalityParams>) {
          j["n"] = p.n;
          j["alpha"] = p.alpha;
        } else if constexpr (std::is_same_v<P, ClusteredConcaveParams>) {
          j["n"] = p.n;
          j["classes"] = p.classes;
        } else if constexpr (std::is_same_v<P, FacilityLocationParams>) {
          j["similarity"] = detail::Rows(p.similarity, p.n, p.n);
        } else if constexpr (std::is_same_v<P, SaturatedCoverageParams>) {
          j["weights"] = detail::Rows(p.weights, p.rows, p.n);
          j["caps"] = p.caps;
        } else if constexpr (std::is_same_v<P, SetCoverParams>) {
          j["universe"] = p.universe;
          j["covers"] = p.covers;
        } else if constexpr (std::is_same_v<P, ScaledParams>) {
          j["factor"] = p.factor;
          j["inner"] = FunctionToJson(*p.inner);
        } else {
          Json terms = Json::array();
          for (const auto& t : p.terms) terms.push_back(FunctionToJson(*t));
          j["terms"] = std::move(terms);
        }
      },
      f.params());
  return j;
}

inline PolymatroidSpec FunctionFromJson(const Json& j, const std::string& where) {
  using detail::Field;
  const Json& type = Field(j, "type", where);
  if (!type.is_string()) detail::Fail(where + "/type", "expected a string");
  const std::string t = type.get<std::string>();
  try {
    if (t == "modular") return PolymatroidSpec::Modular(detail::AsReals(Field(j, "weights", where), where + "/weights"));
    if (t == "concave_cardinality") {
      return PolymatroidSpec::ConcaveCardinality(detail::AsIndex(Field(j, "n", where), where + "/n"),
                                                 detail::AsReal(Field(j, "alpha", where), where + "/alpha"));
    }
    if (t == "clustered_concave") {
      return PolymatroidSpec::ClusteredConcave(detail::AsIndex(Field(j, "n", where), where + "/n"),
                                               detail::AsIndexLists(Field(j, "classes", where), where + "/classes"));
    }
    if (t == "facility_location") {
      return PolymatroidSpec::FacilityLocation(detail::AsMatrix(Field(j, "similarity", where), where + "/similarity"));
    }
    if (t == "saturated_coverage") {
      return PolymatroidSpec::SaturatedCoverage(detail::AsMatrix(Field(j, "weights", where), where + "/weights"),
                                                detail::AsReals(Field(j, "caps", where), where + "/caps"));
    }
    if (t == "set_cover") {
      return PolymatroidSpec::SetCover(detail::AsIndex(Field(j, "universe", where), where + "/universe"),
                                       detail::AsIndexLists(Field(j, "covers", where), where + "/covers"));
    }
    if (t == "scaled") {
      return PolymatroidSpec::Scaled(FunctionFromJson(Field(j, "inner", where), where + "/inner"),
                                     detail::AsReal(Field(j, "factor", where), where + "/factor"));
    }
    if (t == "sum") {
      const Json& terms = Field(j, "terms", where);
      if (!terms.is_array()) detail::Fail(where + "/terms", "expected an array");
      std::vector<PolymatroidSpec> specs;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        specs.push_back(FunctionFromJson(terms[i], where + "/terms/" + std::to_string(i)));
      }
      return PolymatroidSpec::Sum(std::move(specs));
    }
  } catch (const InvalidFunction& e) {
    detail::Fail(where, e.what());
  }
  detail::Fail(where + "/type", "unknown function type \"" + t + "\"");
}

// Instance files.

inline Json InstanceToJson(const ShInstance& inst) {
  Json j = detail::Header("instance");
  j["n"] = inst.n();
  Json defs = Json::object();
  Json refs = Json::array();
  std::vector<const PolymatroidSpec*> seen;
  for (const auto& f : inst.functions()) {
    std::size_t id = seen.size();
    for (std::size_t s = 0; s < seen.size(); ++s) {
      if (*seen[s] == f) {
        id = s;
        break;
      }
    }
    const std::string name = "f" + std::to_string(id);
    if (id == seen.size()) {
      seen.push_back(&f);
      defs[name] = FunctionToJson(f);
    }
    refs.push_back(name);
  }
  j["definitions"] = std::move(defs);
  j["functions"] = std::move(refs);
  Json bs = Json::array();
  for (const auto& b : inst.b_sets()) bs.push_back(SetToJson(b));
  j["b_sets"] = std::move(bs);
  j["constraint"] = ConstraintToJson(inst.constraint());
  return j;
}

// "functions" entries are either names from "definitions" or inline records.
inline ShInstance InstanceFromJson(const Json& j) {
  detail::RequireHeader(j, "instance");
  const std::size_t n = detail::AsIndex(detail::Field(j, "n", ""), "/n");
  std::map<std::string, PolymatroidSpec> defs;
  if (auto it = j.find("definitions"); it != j.end()) {
    if (!it->is_object()) detail::Fail("/definitions", "expected an object");
    for (const auto& [name, rec] : it->items()) defs.emplace(name, FunctionFromJson(rec, "/definitions/" + name));
  }
  const Json& fs = detail::Field(j, "functions", "");
  if (!fs.is_array()) detail::Fail("/functions", "expected an array");
  std::vector<PolymatroidSpec> functions;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string where = "/functions/" + std::to_string(i);
    if (fs[i].is_string()) {
      auto it = defs.find(fs[i].get<std::string>());
      if (it == defs.end()) detail::Fail(where, "undefined function " + fs[i].dump());
      functions.push_back(it->second);
    } else {
      functions.push_back(FunctionFromJson(fs[i], where));
    }
    if (functions.back().n() != n) detail::Fail(where, "function ground set differs from n");
  }
  const Json& bj = detail::Field(j, "b_sets", "");
  if (!bj.is_array()) detail::Fail("/b_sets", "expected an array");
  std::vector<ElementSet> b_sets;
  for (std::size_t i = 0; i < bj.size(); ++i) b_sets.push_back(SetFromJson(bj[i], n, "/b_sets/" + std::to_string(i)));
  Constraint c = Constraint::Unconstrained();
  if (auto it = j.find("constraint"); it != j.end()) c = ConstraintFromJson(*it, "/constraint");
  try {
    return ShInstance(std::move(functions), std::move(b_sets), c);
  } catch (const std::invalid_argument& e) {
    detail::Fail("", e.what());
  }
}

inline ShInstance ParseInstance(const std::string& text) { return InstanceFromJson(ParseText(text)); }
inline ShInstance LoadInstance(const std::string& path) { return ParseInstance(ReadFile(path)); }
inline std::string DumpInstance(const ShInstance& inst) { return Dump(InstanceToJson(inst)); }

// Function files: one function, optionally shifted by a set B (the checker
// then studies Y -> f(Y ^ B)).

struct FunctionFile {
  PolymatroidSpec function;
  std::optional<ElementSet> shift;
};

inline Json FunctionFileToJson(const FunctionFile& ff) {
  Json j = detail::Header("function");
  j["function"] = FunctionToJson(ff.function);
  if (ff.shift) j["shift"] = SetToJson(*ff.shift);
  return j;
}

inline FunctionFile FunctionFileFromJson(const Json& j) {
  detail::RequireHeader(j, "function");
  FunctionFile ff{FunctionFromJson(detail::Field(j, "function", ""), "/function"), std::nullopt};
  if (auto it = j.find("shift"); it != j.end()) ff.shift = SetFromJson(*it, ff.function.n(), "/shift");
  return ff;
}

inline FunctionFile ParseFunctionFile(const std::string& text) { return FunctionFileFromJson(ParseText(text)); }

// Corpus files.

inline Json CorpusToJson(const apps::Corpus& c) {
  Json j = detail::Header("corpus");
  j["n"] = c.n;
  Json docs = Json::array();
  for (const auto& d : c.docs) docs.push_back(SetToJson(d));
  j["docs"] = std::move(docs);
  if (c.labels) j["labels"] = *c.labels;
  if (c.word_classes) j["word_classes"] = *c.word_classes;
  return j;
}

inline apps::Corpus CorpusFromJson(const Json& j) {
  detail::RequireHeader(j, "corpus");
  apps::Corpus c;
  c.n = detail::AsIndex(detail::Field(j, "n", ""), "/n");
  const Json& docs = detail::Field(j, "docs", "");
  if (!docs.is_array()) detail::Fail("/docs", "expected an array");
  for (std::size_t i = 0; i < docs.size(); ++i) c.docs.push_back(SetFromJson(docs[i], c.n, "/docs/" + std::to_string(i)));
  if (auto it = j.find("labels"); it != j.end()) c.labels = detail::AsIndices(*it, "/labels");
  if (auto it = j.find("word_classes"); it != j.end()) c.word_classes = detail::AsIndexLists(*it, "/word_classes");
  try {
    c.Validate();
  } catch (const std::invalid_argument& e) {
    detail::Fail("", e.what());
  }
  return c;
}

inline apps::Corpus ParseCorpus(const std::string& text) { return CorpusFromJson(ParseText(text)); }

// Collection files for diverse k-best: a quality function and an optional
// diversity function on the same ground set.

struct Collection {
  PolymatroidSpec quality;
  std::optional<PolymatroidSpec> diversity;
};

inline Json CollectionToJson(const Collection& c) {
  Json j = detail::Header("collection");
  j["n"] = c.quality.n();
  j["quality"] = FunctionToJson(c.quality);
  j["diversity"] = c.diversity ? FunctionToJson(*c.diversity) : Json(nullptr);
  return j;
}

inline Collection CollectionFromJson(const Json& j) {
  detail::RequireHeader(j, "collection");
  const std::size_t n = detail::AsIndex(detail::Field(j, "n", ""), "/n");
  Collection c{FunctionFromJson(detail::Field(j, "quality", ""), "/quality"), std::nullopt};
  if (auto it = j.find("diversity"); it != j.end() && !it->is_null()) c.diversity = FunctionFromJson(*it, "/diversity");
  if (c.quality.n() != n || (c.diversity && c.diversity->n() != n)) detail::Fail("", "function ground set differs from n");
  return c;
}

inline Collection ParseCollection(const std::string& text) { return CollectionFromJson(ParseText(text)); }

// Peeks at the "kind" field so callers can dispatch.
inline std::string FileKind(const Json& j) {
  if (!j.is_object()) detail::Fail("", "expected an object");
  auto it = j.find("kind");
  if (it == j.end() || !it->is_string()) detail::Fail("/kind", "missing file kind");
  return it->get<std::string>();
}

}  // namespace shm::io
