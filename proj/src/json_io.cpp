// Copyright 2026 The ordchoquet Authors
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

#include "ordchoquet/json_io.hpp"

#include "ordchoquet/error.hpp"

#include <fstream>

namespace ordchoquet::io {

namespace {

std::string label_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::InvalidInput, "element labels must be strings or integers, got " + j.dump());
}

std::size_t index_of(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw Error(ErrorCode::InvalidInput, "expected a non-negative index, got " + j.dump());
  }
  return j.get<std::size_t>();
}

std::vector<OrderSpec::Pair> pairs_of(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "\"pairs\" must be an array");
  std::vector<OrderSpec::Pair> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::InvalidInput, "order pair must be [i, j]");
    pairs.emplace_back(index_of(p[0]), index_of(p[1]));
  }
  return pairs;
}

}  // namespace

SetSystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("family")) {
    throw Error(ErrorCode::InvalidInput, "system needs \"ground\" and \"family\"");
  }
  std::vector<std::string> labels;
  for (const auto& l : j.at("ground")) labels.push_back(label_of(l));
  GroundSet ground(std::move(labels));

  std::vector<ElementSet> family;
  for (const auto& s : j.at("family")) {
    if (!s.is_array()) throw Error(ErrorCode::InvalidInput, "family members must be arrays of labels");
    ElementSet set;
    for (const auto& l : s) {
      auto e = ground.index_of(label_of(l));
      if (!e) throw Error(ErrorCode::InvalidInput, "unknown element " + l.dump());
      set = set.with(*e);
    }
    family.push_back(set);
  }

  OrderSpec order = OrderSpec::trivial();
  if (j.contains("order")) {
    const auto& o = j.at("order");
    if (o.is_string()) {
      const auto kind = o.get<std::string>();
      if (kind == "trivial") {
        order = OrderSpec::trivial();
      } else if (kind == "containment") {
        order = OrderSpec::containment();
      } else {
        throw Error(ErrorCode::InvalidInput, "unknown order \"" + kind + "\"");
      }
    } else if (o.is_object() && o.contains("pairs")) {
      const bool containment = o.value("containment", false);
      order = containment ? OrderSpec{OrderSpec::Kind::Containment, pairs_of(o.at("pairs"))}
                          : OrderSpec::explicit_pairs(pairs_of(o.at("pairs")));
    } else {
      throw Error(ErrorCode::InvalidInput, "order must be \"trivial\", \"containment\" or {\"pairs\": [...]}");
    }
  }
  return SetSystem::build(std::move(ground), family, order);
}

json system_to_json(const SetSystem& sys) {
  json j;
  j["ground"] = sys.ground().labels();
  json family = json::array();
  for (auto s : sys.sets()) family.push_back(sys.ground().labels_of(s));
  j["family"] = family;

  if (sys.is_containment_ordered()) {
    j["order"] = "containment";
  } else {
    bool trivial = true;
    json pairs = json::array();
    for (std::size_t i = 0; i < sys.m(); ++i)
      for (std::size_t k = 0; k < sys.m(); ++k) {
        if (i == k || !sys.precedes(i, k)) continue;
        trivial = false;
        bool covering = true;
        for (std::size_t t = 0; t < sys.m() && covering; ++t)
          if (t != i && t != k && sys.precedes(i, t) && sys.precedes(t, k)) covering = false;
        if (covering) pairs.push_back({i, k});
      }
    if (trivial) {
      j["order"] = "trivial";
    } else {
      j["order"] = {{"pairs", pairs}};
    }
  }
  return j;
}

json index_map_json(const SetSystem& sys) {
  json map = json::array();
  for (std::size_t i = 0; i < sys.m(); ++i) map.push_back(sys.index_of_input(i));
  return map;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>()), 10));
  throw Error(ErrorCode::InvalidInput,
              "numbers must be integers or strings (\"p/q\" or decimal) to stay exact, got " + j.dump());
}

json rational_to_json(const Rational& q) { return to_string(q); }

Valuation valuation_from_json(const json& j, const SetSystem& sys) {
  if (!j.is_object() || !j.contains("values")) throw Error(ErrorCode::InvalidInput, "valuation needs \"values\"");
  const auto& values = j.at("values");
  Valuation v(sys.m());
  auto assign = [&](std::size_t input, const json& value) {
    if (input >= sys.m()) {
      throw Error(ErrorCode::IndexOutOfRange, "valuation refers to member " + std::to_string(input));
    }
    v[sys.index_of_input(input)] = rational_from_json(value);
  };
  if (values.is_array()) {
    if (values.size() != sys.m()) {
      throw Error(ErrorCode::DimensionMismatch, "valuation array has " + std::to_string(values.size()) +
                                                    " entries for " + std::to_string(sys.m()) + " members");
    }
    for (std::size_t i = 0; i < values.size(); ++i) assign(i, values[i]);
  } else if (values.is_object()) {
    for (const auto& [key, value] : values.items()) {
      std::size_t pos = 0;
      std::size_t input = 0;
      try {
        input = std::stoul(key, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != key.size()) throw Error(ErrorCode::InvalidInput, "valuation key '" + key + "' is not an index");
      assign(input, value);
    }
  } else {
    throw Error(ErrorCode::InvalidInput, "\"values\" must be an object or an array");
  }
  return v;
}

json valuation_to_json(const Valuation& v) {
  json values = json::object();
  for (std::size_t i = 0; i < v.size(); ++i) values[std::to_string(i)] = rational_to_json(v[i]);
  return {{"values", values}};
}

Weighting weighting_from_json(const json& j, const GroundSet& ground) {
  if (!j.is_object() || !j.contains("values")) throw Error(ErrorCode::InvalidInput, "weighting needs \"values\"");
  const auto& values = j.at("values");
  Weighting f(ground.size());
  if (values.is_array()) {
    if (values.size() != ground.size()) {
      throw Error(ErrorCode::DimensionMismatch, "weighting array has " + std::to_string(values.size()) +
                                                    " entries for " + std::to_string(ground.size()) + " elements");
    }
    for (std::size_t e = 0; e < values.size(); ++e) f[e] = rational_from_json(values[e]);
  } else if (values.is_object()) {
    for (const auto& [key, value] : values.items()) {
      auto e = ground.index_of(key);
      if (!e) throw Error(ErrorCode::InvalidInput, "weighting refers to unknown element '" + key + "'");
      f[*e] = rational_from_json(value);
    }
  } else {
    throw Error(ErrorCode::InvalidInput, "\"values\" must be an object or an array");
  }
  return f;
}

json weighting_to_json(const Weighting& f, const GroundSet& ground) {
  json values = json::object();
  for (std::size_t e = 0; e < f.size(); ++e) values[ground.label(e)] = rational_to_json(f[e]);
  return {{"values", values}};
}

json set_function_to_json(const SetFunction& vhat, const GroundSet& ground) {
  json out = json::object();
  for (std::size_t bits = 0; bits < vhat.size(); ++bits) {
    ElementSet s(bits);
    out[ground.format(s)] = rational_to_json(vhat[s]);
  }
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace ordchoquet::io
