#include "raag/io.hpp"

#include "raag/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace raag {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw ValidationError(std::string("field \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw ValidationError(std::string(what) + " must contain integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<BigInt> bigint_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(bigint_from_json(v));
  return out;
}

Json bigint_list_to_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(bigint_to_json(x));
  return a;
}

Json optional_bigint(const std::optional<BigInt>& v) {
  return v ? bigint_to_json(*v) : Json(nullptr);
}

std::optional<BigInt> optional_bigint_from(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_null()) return std::nullopt;
  return bigint_from_json(v);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(source + ": malformed JSON at byte " + std::to_string(e.byte) +
                          ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      return BigInt(s);
    } catch (const std::exception&) {
      throw ValidationError("\"" + s + "\" is not an integer");
    }
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

SimplicialComplex complex_from_json(const Json& j) {
  const int m = int_field(j, "m");
  const bool has_edges = j.contains("edges");
  const bool has_faces = j.contains("maximal_faces");
  if (has_edges && has_faces) {
    throw ValidationError("give either \"edges\" or \"maximal_faces\", not both");
  }
  if (!has_edges && !has_faces) {
    throw ValidationError("missing field \"edges\" or \"maximal_faces\"");
  }
  if (m < 1 || m > VertexSet::kMaxVertex) {
    throw ValidationError("m must be in 1.." + std::to_string(VertexSet::kMaxVertex));
  }
  if (has_edges) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) throw ValidationError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> list;
    for (const auto& e : edges) {
      std::vector<int> pair = int_list(e, "edge");
      if (pair.size() != 2) throw ValidationError("each edge needs exactly two vertices");
      list.emplace_back(pair[0], pair[1]);
    }
    return clique_complex(Graph(m, list));
  }
  const Json& faces = j.at("maximal_faces");
  if (!faces.is_array()) throw ValidationError("\"maximal_faces\" must be an array");
  std::vector<std::vector<int>> list;
  for (const auto& f : faces) list.push_back(int_list(f, "face"));
  return SimplicialComplex::from_maximal_faces(m, list);
}

Json complex_to_json(const SimplicialComplex& K) {
  Json faces = Json::array();
  for (const auto& f : K.maximal_faces()) faces.push_back(f.labels());
  return Json{{"m", K.ambient_size()}, {"maximal_faces", faces}};
}

Json to_json(const CommutatorDescriptor& d) {
  return Json{{"ks", d.ks}, {"j", d.j}, {"i", d.i},
              {"exponents", bigint_list_to_json(d.exponents)}};
}

CommutatorDescriptor descriptor_from_json(const Json& j) {
  CommutatorDescriptor d;
  d.ks = int_list(field(j, "ks"), "\"ks\"");
  d.j = int_field(j, "j");
  d.i = int_field(j, "i");
  d.exponents = bigint_list(field(j, "exponents"), "\"exponents\"");
  validate_structure(d);
  return d;
}

Json to_json(const CountReport& r) {
  Json table = Json::array();
  for (const auto& row : r.table) {
    table.push_back(Json{{"subset", row.subset.labels()},
                         {"components", row.components},
                         {"contribution", bigint_to_json(row.contribution)}});
  }
  return Json{{"m", r.m},
              {"s", r.s},
              {"J", optional_bigint(r.J)},
              {"W_closed", optional_bigint(r.W_closed)},
              {"W_recursive", optional_bigint(r.W_recursive)},
              {"P", bigint_to_json(r.P)},
              {"table", table}};
}

CountReport count_report_from_json(const Json& j) {
  CountReport r;
  r.m = int_field(j, "m");
  r.s = int_field(j, "s");
  r.J = optional_bigint_from(j, "J");
  r.W_closed = optional_bigint_from(j, "W_closed");
  r.W_recursive = optional_bigint_from(j, "W_recursive");
  r.P = bigint_from_json(field(j, "P"));
  const Json& table = field(j, "table");
  if (!table.is_array()) throw ValidationError("\"table\" must be an array");
  for (const auto& row : table) {
    SubsetCount c;
    c.subset = VertexSet::from_labels(int_list(field(row, "subset"), "\"subset\""));
    c.components = int_field(row, "components");
    c.contribution = bigint_from_json(field(row, "contribution"));
    r.table.push_back(std::move(c));
  }
  return r;
}

Json to_json(const SignedFactor& f) {
  return Json{{"sign", f.sign}, {"descriptor", to_json(f.descriptor)}};
}

SignedFactor signed_factor_from_json(const Json& j) {
  SignedFactor f;
  f.sign = int_field(j, "sign");
  if (f.sign != 1 && f.sign != -1) throw ValidationError("\"sign\" must be 1 or -1");
  f.descriptor = descriptor_from_json(field(j, "descriptor"));
  return f;
}

Json to_json(const FactorizedWord& f) {
  Json factors = Json::array();
  for (const auto& x : f.factors) factors.push_back(to_json(x));
  return Json{{"rank", f.rank}, {"factors", factors}};
}

FactorizedWord factorized_from_json(const Json& j) {
  FactorizedWord f;
  f.rank = int_field(j, "rank");
  const Json& factors = field(j, "factors");
  if (!factors.is_array()) throw ValidationError("\"factors\" must be an array");
  for (const auto& x : factors) f.factors.push_back(signed_factor_from_json(x));
  return f;
}

Json to_json(const VertexGroupSpec& spec) {
  Json groups = Json::array();
  for (const auto& g : spec) {
    if (g.is_infinite()) {
      groups.push_back(Json{{"type", "Z"}});
    } else {
      groups.push_back(Json{{"type", "cyclic"}, {"order", *g.order}});
    }
  }
  return Json{{"groups", groups}};
}

VertexGroupSpec group_spec_from_json(const Json& j) {
  const Json& groups = field(j, "groups");
  if (!groups.is_array()) throw ValidationError("\"groups\" must be an array");
  VertexGroupSpec spec;
  for (const auto& g : groups) {
    const Json& type = field(g, "type");
    if (type == "Z") {
      spec.push_back(VertexGroup::integers());
    } else if (type == "cyclic") {
      spec.push_back(VertexGroup::cyclic(int_field(g, "order")));
    } else {
      throw ValidationError("unknown group type " + type.dump());
    }
  }
  return spec;
}

Json to_json(const GPDescriptor& d) {
  return Json{{"ks", d.ks}, {"j", d.j}, {"i", d.i},
              {"elements", bigint_list_to_json(d.elements)}};
}

GPDescriptor gp_descriptor_from_json(const Json& j) {
  GPDescriptor d;
  d.ks = int_list(field(j, "ks"), "\"ks\"");
  d.j = int_field(j, "j");
  d.i = int_field(j, "i");
  d.elements = bigint_list(field(j, "elements"), "\"elements\"");
  validate_structure(to_commutator_descriptor(d));
  return d;
}

Json to_json(const HomologyResult& h) {
  return Json{{"rank", bigint_to_json(h.rank)}, {"torsion", bigint_list_to_json(h.torsion)}};
}

}  // namespace raag
