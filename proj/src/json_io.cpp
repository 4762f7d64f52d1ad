#include "twistlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "twistlab/errors.hpp"

namespace twistlab {

  namespace {

    Matrix matrix(json const& j, char const* key) {
      if (!j.contains(key) || !j.at(key).is_array()) {
        throw MalformedInput(std::string("missing matrix '") + key + "'");
      }
      Matrix m;
      for (auto const& row : j.at(key)) {
        if (!row.is_array()) {
          throw MalformedInput(std::string("matrix '") + key + "' has a non-array row");
        }
        std::vector<Elem> r;
        for (auto const& v : row) {
          if (!v.is_number_unsigned()) {
            throw MalformedInput(std::string("matrix '") + key + "' has a non-index entry");
          }
          r.push_back(v.get<Elem>());
        }
        m.push_back(std::move(r));
      }
      return m;
    }

    Elem index(json const& v, char const* what) {
      if (!v.is_number_unsigned()) {
        throw MalformedInput(std::string(what) + " must be a non-negative integer");
      }
      return v.get<Elem>();
    }

    std::vector<Elem> index_list(json const& j, char const* what) {
      if (!j.is_array()) {
        throw MalformedInput(std::string(what) + " must be an array");
      }
      std::vector<Elem> out;
      for (auto const& v : j) {
        out.push_back(index(v, what));
      }
      return out;
    }

  }  // namespace

  RawAlgebra raw_from_json(json const& j) {
    if (!j.is_object()) {
      throw MalformedInput("algebra must be a JSON object");
    }
    RawAlgebra r;
    r.name = j.value("name", std::string("A"));
    if (!j.contains("size")) {
      throw MalformedInput("missing 'size'");
    }
    r.size = index(j.at("size"), "size");
    r.join = matrix(j, "join");
    r.meet = matrix(j, "meet");
    r.prod = matrix(j, "prod");
    if (j.contains("ldiv")) {
      r.ldiv = matrix(j, "ldiv");
    }
    if (j.contains("rdiv")) {
      r.rdiv = matrix(j, "rdiv");
    }
    if (j.contains("unit") && !j.at("unit").is_null()) {
      r.unit = index(j.at("unit"), "unit");
    }
    if (j.contains("invol") && !j.at("invol").is_null()) {
      r.invol = index_list(j.at("invol"), "invol");
    }
    if (j.contains("bottom") && !j.at("bottom").is_null()) {
      r.bottom = index(j.at("bottom"), "bottom");
    }
    if (j.contains("names")) {
      for (auto const& v : j.at("names")) {
        if (!v.is_string()) {
          throw MalformedInput("names must be strings");
        }
        r.names.push_back(v.get<std::string>());
      }
    }
    return r;
  }

  Algebra algebra_from_json(json const& j) {
    return Algebra::certify(raw_from_json(j));
  }

  json to_json(Algebra const& A) {
    json j;
    j["name"] = A.name();
    j["size"] = A.size();
    j["join"] = A.join_table().to_matrix();
    j["meet"] = A.meet_table().to_matrix();
    j["prod"] = A.prod_table().to_matrix();
    j["ldiv"] = A.ldiv_table().to_matrix();
    j["rdiv"] = A.rdiv_table().to_matrix();
    if (A.has_unit()) {
      j["unit"] = A.unit();
    }
    if (A.involutive()) {
      j["invol"] = A.involution();
    }
    if (A.has_bottom()) {
      j["bottom"] = A.bottom();
    }
    j["names"] = A.names();
    return j;
  }

  UnaryMap map_from_json(json const& j, Algebra const& parent) {
    UnaryMap m{parent.name(), {}};
    if (j.is_array()) {
      m.table = index_list(j, "table");
    } else if (j.is_object() && j.contains("table")) {
      m.table = index_list(j.at("table"), "table");
    } else {
      throw MalformedInput("a map needs a 'table'");
    }
    if (m.table.size() != parent.size()) {
      throw MalformedInput("map table has length " + std::to_string(m.table.size())
                           + ", expected " + std::to_string(parent.size()));
    }
    for (Elem v : m.table) {
      if (v >= parent.size()) {
        throw MalformedInput("map value out of range");
      }
    }
    return m;
  }

  json to_json(UnaryMap const& m) {
    return json{{"parent", m.parent}, {"table", m.table}};
  }

  Subset subset_from_json(json const& j, Algebra const& parent) {
    std::vector<Elem> members;
    if (j.is_array()) {
      members = index_list(j, "members");
    } else if (j.is_object() && j.contains("members")) {
      members = index_list(j.at("members"), "members");
    } else {
      throw MalformedInput("a subset needs 'members'");
    }
    for (Elem v : members) {
      if (v >= parent.size()) {
        throw MalformedInput("subset member out of range");
      }
    }
    return Subset::of(parent.name(), parent.size(), members);
  }

  json to_json(Subset const& s) {
    return json{{"parent", s.parent()}, {"members", s.elements()}};
  }

  json to_json(Morphism const& m) {
    return json{{"source", m.source},
                {"target", m.target},
                {"table", m.table},
                {"signature", m.signature.names()}};
  }

  json to_json(Verdict const& v) {
    json w = json::array();
    for (auto const& x : v.witnesses) {
      w.push_back(json{{"axiom", x.axiom}, {"elements", x.elements}});
    }
    return json{{"name", v.name}, {"holds", v.holds()}, {"witnesses", w}};
  }

  std::string pretty(json const& j) {
    if (!j.is_object()) {
      return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      os << "  " << json(it.key()).dump() << ": ";
      auto const& v = it.value();
      bool const  rows = v.is_array() && !v.empty() && v.front().is_array();
      if (rows) {
        os << "[\n";
        for (std::size_t r = 0; r < v.size(); ++r) {
          os << "    " << v[r].dump() << (r + 1 < v.size() ? ",\n" : "\n");
        }
        os << "  ]";
      } else {
        os << v.dump();
      }
      os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << "}\n";
    return os.str();
  }

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw MalformedInput("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw MalformedInput(path + ": " + e.what());
    }
  }

  void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw MalformedInput("cannot write " + path);
    }
    out << text;
  }

}  // namespace twistlab
