#include "bj/cli/io.hpp"

#include <fstream>
#include <regex>

#include "bj/error.hpp"

namespace bj::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

DivisionAlgebra division_from(const std::string& s) {
  if (s == "R") return DivisionAlgebra::R;
  if (s == "C") return DivisionAlgebra::C;
  if (s == "H") return DivisionAlgebra::H;
  bad("unknown division algebra '" + s + "'");
}

BaseField field_from(const std::string& s) {
  if (s == "R") return BaseField::R;
  if (s == "C") return BaseField::C;
  bad("unknown base field '" + s + "'");
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

json to_json(const KMatrix& a) {
  const int d = real_dim(a.division_algebra());
  json rows = json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.n(); ++j) {
      const KScalar& s = a(i, j);
      const double all[4] = {s.w, s.x, s.y, s.z};
      row.push_back(std::vector<double>(all, all + d));
    }
    rows.push_back(std::move(row));
  }
  return {{"division_algebra", std::string(to_string(a.division_algebra()))},
          {"base_field", std::string(to_string(a.base_field()))},
          {"n", a.n()},
          {"entries", std::move(rows)}};
}

KMatrix matrix_from_json(const json& j) {
  const DivisionAlgebra k = division_from(get<std::string>(j, "division_algebra"));
  const BaseField f = field_from(get<std::string>(j, "base_field"));
  const int n = get<int>(j, "n");
  if (n < 1) bad("n must be positive");
  const json rows = get<json>(j, "entries");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    bad("entries must have n rows");
  const std::size_t d = static_cast<std::size_t>(real_dim(k));
  std::vector<KScalar> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) bad("entries must have n columns");
    for (const auto& e : row) {
      if (!e.is_array() || e.size() != d) bad("entry component count does not match the division algebra");
      double c[4] = {0, 0, 0, 0};
      for (std::size_t t = 0; t < d; ++t) {
        if (!e[t].is_number()) bad("entry components must be numbers");
        c[t] = e[t].get<double>();
      }
      KScalar s;
      s.w = c[0];
      s.x = c[1];
      s.y = c[2];
      s.z = c[3];
      entries.push_back(s);
    }
  }
  return KMatrix(k, f, static_cast<std::size_t>(n), std::move(entries));
}

json to_json(const AlgebraSpec& a) {
  json blocks = json::array();
  for (const auto& b : a.blocks)
    blocks.push_back({{"division_algebra", std::string(to_string(b.division_algebra))}, {"n", b.n}});
  return {{"base_field", std::string(to_string(a.base_field))}, {"blocks", std::move(blocks)}};
}

AlgebraSpec algebra_from_json(const json& j) {
  AlgebraSpec a;
  a.base_field = field_from(get<std::string>(j, "base_field"));
  const json blocks = get<json>(j, "blocks");
  if (!blocks.is_array()) bad("blocks must be an array");
  for (const auto& b : blocks) a.blocks.push_back({division_from(get<std::string>(b, "division_algebra")), get<int>(b, "n")});
  a.validate();
  return a;
}

json to_json(const Chain& c) {
  json el = json::array(), wit = json::array();
  for (const auto& m : c.elements) el.push_back(to_json(m));
  for (const auto& m : c.strictness_witnesses) wit.push_back(to_json(m));
  return {{"elements", std::move(el)}, {"strictness_witnesses", std::move(wit)}};
}

Chain chain_from_json(const json& j) {
  Chain c;
  const json el = get<json>(j, "elements");
  if (!el.is_array() || el.empty()) bad("chain needs a nonempty element list");
  for (const auto& m : el) c.elements.push_back(matrix_from_json(m));
  if (j.contains("strictness_witnesses"))
    for (const auto& m : j.at("strictness_witnesses")) c.strictness_witnesses.push_back(matrix_from_json(m));
  return c;
}

AlgebraSpec parse_algebra(const std::string& text) {
  static const std::regex whole(R"(^\s*(M\d+\([RCH]\)(?:\s*\+\s*M\d+\([RCH]\))*)\s*(?:/\s*([RC]))?\s*$)");
  static const std::regex block(R"(M(\d+)\(([RCH])\))");
  std::smatch m;
  if (!std::regex_match(text, m, whole)) bad("cannot parse algebra '" + text + "'");
  AlgebraSpec a;
  const std::string body = m[1];
  for (auto it = std::sregex_iterator(body.begin(), body.end(), block); it != std::sregex_iterator(); ++it) {
    const int n = std::stoi((*it)[1]);
    a.blocks.push_back({division_from((*it)[2]), n});
  }
  const bool has_complex =
      std::any_of(a.blocks.begin(), a.blocks.end(), [](const AlgebraBlock& b) { return b.division_algebra == DivisionAlgebra::C; });
  if (m[2].matched) {
    a.base_field = field_from(m[2]);
  } else if (has_complex) {
    bad("'" + text + "' is ambiguous: write /R or /C");
  }
  a.validate();
  return a;
}

std::string format_algebra(const AlgebraSpec& a) {
  std::string s;
  for (const auto& b : a.blocks) {
    if (!s.empty()) s += "+";
    s += "M" + std::to_string(b.n) + "(" + std::string(to_string(b.division_algebra)) + ")";
  }
  return s + "/" + std::string(to_string(a.base_field));
}

AlgebraSpec load_algebra(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return algebra_from_json(read_json(arg));
  return parse_algebra(arg);
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) bad("cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(p.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) bad("cannot write " + p.string());
  out << j.dump(2) << "\n";
}

}  // namespace bj::cli
