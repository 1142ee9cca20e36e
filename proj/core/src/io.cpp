#include "superpoisson/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "superpoisson/checks.hpp"

namespace spo {
namespace {

using json = nlohmann::json;

constexpr int kSchema = 1;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

bool is_hex(const std::string& s) {
  std::string t = s.rfind("0x", 0) == 0 ? s.substr(2) : s;
  return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isxdigit(c); });
}

// A single term "name" or "coeff*name".
std::optional<std::pair<Scalar, std::size_t>> parse_term(const Field& f, const SuperSpace& s, const std::string& raw) {
  std::string t = trim(raw);
  if (auto i = s.index_of(t)) return std::make_pair(Scalar{1}, *i);
  auto star = t.find('*');
  if (star == std::string::npos) return std::nullopt;
  std::string coeff = trim(t.substr(0, star)), name = trim(t.substr(star + 1));
  auto i = s.index_of(name);
  if (!i || !is_hex(coeff)) return std::nullopt;
  try {
    return std::make_pair(f.from_hex(coeff), *i);
  } catch (const Error&) {
    return std::nullopt;
  }
}

Field field_from_json(const json& j, const std::string& source) {
  if (!j.contains("field")) return Field();
  const json& fj = j.at("field");
  if (!fj.is_object()) parse_fail(source + ":field", "expected an object");
  int degree = fj.value("degree", 1);
  std::optional<unsigned> modulus;
  if (fj.contains("modulus")) {
    const json& m = fj.at("modulus");
    if (m.is_number_unsigned()) modulus = m.get<unsigned>();
    else if (m.is_string() && is_hex(m.get<std::string>())) modulus = static_cast<unsigned>(std::stoul(m.get<std::string>(), nullptr, 16));
    else parse_fail(source + ":field.modulus", "expected an integer or a hex string");
  }
  return Field(degree, modulus);
}

SuperSpace space_from_json(const json& j, const std::string& source) {
  if (!j.contains("basis") || !j.at("basis").is_array()) parse_fail(source + ":basis", "expected an array");
  std::vector<BasisVector> basis;
  std::size_t k = 0;
  for (const json& b : j.at("basis")) {
    std::string where = source + ":basis[" + std::to_string(k++) + "]";
    if (!b.is_object() || !b.contains("name") || !b.at("name").is_string()) parse_fail(where, "expected {name, parity}");
    int parity = b.value("parity", 0);
    if (parity != 0 && parity != 1) parse_fail(where, "parity must be 0 or 1");
    basis.push_back({b.at("name").get<std::string>(), parity});
  }
  return SuperSpace(std::move(basis));
}

std::pair<std::size_t, std::size_t> parse_key(const SuperSpace& s, const std::string& key, const std::string& where) {
  auto comma = key.find(',');
  if (comma == std::string::npos) parse_fail(where, "key '" + key + "' is not of the form a,b");
  auto a = s.index_of(trim(key.substr(0, comma))), b = s.index_of(trim(key.substr(comma + 1)));
  if (!a || !b) parse_fail(where, "unknown basis name in key '" + key + "'");
  return {*a, *b};
}

BilinearTable table_from_json(const Field& f, const SuperSpace& s, const json& t, bool ordered_pairs,
                              const std::string& where) {
  if (!t.is_object()) parse_fail(where, "expected an object");
  BilinearTable table(s.dim(), ordered_pairs ? Symmetry::None : Symmetry::Symmetric);
  for (const auto& [key, value] : t.items()) {
    std::string at = where + "[\"" + key + "\"]";
    auto [i, j] = parse_key(s, key, at);
    if (!ordered_pairs && i > j) parse_fail(at, "pair out of basis order; write it as \"" + s.name(j) + "," + s.name(i) + "\"");
    if (!value.is_string()) parse_fail(at, "expected a linear combination string");
    Vec v = parse_combination(f, s, value.get<std::string>(), at);
    if (ordered_pairs) table.at(i, j) = v;
    else table.set(i, j, v);
  }
  return table;
}

void check_table_grading(const SuperSpace& s, const BilinearTable& t, const std::string& what) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Vec& v = t.at(i, j);
      if (!is_zero(v) && !s.homogeneous(v, (s.parity(i) + s.parity(j)) & 1))
        throw Error(ErrorKind::ValidationError, what + " of " + s.name(i) + "," + s.name(j) + " has the wrong parity");
    }
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(std::min(e.byte, text.size())), '\n'));
    parse_fail(source + ":" + std::to_string(line), e.what());
  }
}

nlohmann::ordered_json header(const Field& f, const SuperSpace& s, const std::string& name) {
  nlohmann::ordered_json j;
  j["schema"] = kSchema;
  if (!name.empty()) j["name"] = name;
  j["field"] = {{"degree", f.degree()}};
  if (f.degree() > 1) j["field"]["modulus"] = "0x" + [&] {
    std::ostringstream os;
    os << std::hex << f.modulus();
    return os.str();
  }();
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& b : s.basis()) j["basis"].push_back({{"name", b.name}, {"parity", b.parity}});
  return j;
}

nlohmann::ordered_json table_to_json(const Field& f, const SuperSpace& s, const BilinearTable& t, bool ordered_pairs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = ordered_pairs ? 0 : i; j < s.dim(); ++j)
      if (!is_zero(t.at(i, j))) out[s.name(i) + "," + s.name(j)] = format(f, s, t.at(i, j));
  return out;
}

}  // namespace

Vec parse_combination(const Field& f, const SuperSpace& s, const std::string& text, const std::string& where) {
  Vec v(s.dim(), 0);
  if (trim(text) == "0") return v;
  // Names may themselves contain '+', so pieces between '+' signs are
  // regrouped until every group is a valid term.
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == '+') {
      pieces.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  const std::size_t k = pieces.size();
  std::vector<std::optional<std::size_t>> split(k + 1);
  std::vector<bool> reach(k + 1, false);
  reach[0] = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (!reach[i]) continue;
    std::string acc;
    for (std::size_t j = i; j < k; ++j) {
      acc += (j > i ? "+" : "") + pieces[j];
      if (!reach[j + 1] && parse_term(f, s, acc)) {
        reach[j + 1] = true;
        split[j + 1] = i;
      }
    }
  }
  if (!reach[k]) parse_fail(where, "cannot read linear combination '" + text + "'");
  for (std::size_t end = k; end > 0;) {
    std::size_t begin = *split[end];
    std::string acc;
    for (std::size_t j = begin; j < end; ++j) acc += (j > begin ? "+" : "") + pieces[j];
    auto [c, i] = *parse_term(f, s, acc);
    v[i] ^= c;
    end = begin;
  }
  return v;
}

AlgebraBundle algebra_from_json(const json& j, const std::string& source) {
  if (!j.is_object()) parse_fail(source, "expected a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) parse_fail(source + ":schema", "unsupported schema version");
  Field f = field_from_json(j, source);
  AlgebraBundle a = make_bundle(f, space_from_json(j, source).basis(), j.value("name", std::string()));
  const SuperSpace& s = a.space;
  bool noncommutative = j.value("noncommutative_product", false);
  if (j.contains("product")) a.product = table_from_json(f, s, j.at("product"), noncommutative, source + ":product");
  if (j.contains("bracket")) a.bracket = table_from_json(f, s, j.at("bracket"), false, source + ":bracket");
  if (j.contains("squaring")) {
    const json& sq = j.at("squaring");
    if (!sq.is_object()) parse_fail(source + ":squaring", "expected an object");
    a.squaring = std::vector<Vec>(s.dim(), Vec(s.dim(), 0));
    for (const auto& [key, value] : sq.items()) {
      std::string at = source + ":squaring[\"" + key + "\"]";
      auto i = s.index_of(key);
      if (!i) parse_fail(at, "unknown basis name");
      if (s.parity(*i) != 1) throw Error(ErrorKind::ValidationError, at + ": squaring is defined on odd vectors only");
      if (!value.is_string()) parse_fail(at, "expected a linear combination string");
      (*a.squaring)[*i] = parse_combination(f, s, value.get<std::string>(), at);
      if (!is_zero((*a.squaring)[*i]) && !s.homogeneous((*a.squaring)[*i], 0))
        throw Error(ErrorKind::ValidationError, at + ": squaring must be even");
    }
  } else if (a.bracket) {
    a.squaring = std::vector<Vec>(s.dim(), Vec(s.dim(), 0));
  }
  if (a.squaring && !a.bracket) a.bracket = BilinearTable(s.dim());
  if (j.contains("unit")) {
    if (!j.at("unit").is_string()) parse_fail(source + ":unit", "expected a linear combination string");
    a.unit = parse_combination(f, s, j.at("unit").get<std::string>(), source + ":unit");
  }
  if (a.product) check_table_grading(s, *a.product, "product");
  if (a.bracket) check_table_grading(s, *a.bracket, "bracket");
  if (a.unit) {
    if (!a.product) throw Error(ErrorKind::ValidationError, source + ": unit given without a product");
    if (!s.homogeneous(*a.unit, 0)) throw Error(ErrorKind::ValidationError, source + ": unit must be even");
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (eval_product(a, *a.unit, a.basis(i)) != a.basis(i) || eval_product(a, a.basis(i), *a.unit) != a.basis(i))
        throw Error(ErrorKind::ValidationError, source + ": unit does not act as identity on " + s.name(i));
  }
  return a;
}

AlgebraBundle parse_algebra(const std::string& text, const std::string& source) {
  return algebra_from_json(parse_json(text, source), source);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraBundle load_algebra(const std::string& path) { return parse_algebra(read_file(path), path); }

nlohmann::ordered_json algebra_to_json(const AlgebraBundle& a) {
  nlohmann::ordered_json j = header(a.field, a.space, a.name);
  bool noncommutative = a.product && a.product->symmetry() == Symmetry::None;
  if (noncommutative) j["noncommutative_product"] = true;
  if (a.product) j["product"] = table_to_json(a.field, a.space, *a.product, noncommutative);
  if (a.bracket) j["bracket"] = table_to_json(a.field, a.space, *a.bracket, false);
  if (a.squaring) {
    nlohmann::ordered_json sq = nlohmann::ordered_json::object();
    for (std::size_t i : a.space.indices(1))
      if (!is_zero((*a.squaring)[i])) sq[a.space.name(i)] = format(a, (*a.squaring)[i]);
    j["squaring"] = sq;
  }
  if (a.unit) j["unit"] = format(a, *a.unit);
  return j;
}

std::string serialize_algebra(const AlgebraBundle& a) { return algebra_to_json(a).dump(2) + "\n"; }

TwoProductBundle parse_two_product(const std::string& text, const std::string& source) {
  json j = parse_json(text, source);
  if (!j.is_object()) parse_fail(source, "expected a JSON object");
  Field f = field_from_json(j, source);
  SuperSpace s = space_from_json(j, source);
  TwoProductBundle b = make_two_product(f, s, j.value("name", std::string()));
  if (j.contains("star")) b.star = table_from_json(f, s, j.at("star"), true, source + ":star");
  if (j.contains("triangle")) b.triangle = table_from_json(f, s, j.at("triangle"), true, source + ":triangle");
  check_table_grading(s, b.star, "star");
  check_table_grading(s, b.triangle, "triangle");
  return b;
}

TwoProductBundle load_two_product(const std::string& path) { return parse_two_product(read_file(path), path); }

std::string serialize_two_product(const TwoProductBundle& b) {
  nlohmann::ordered_json j = header(b.field, b.space, b.name);
  j["star"] = table_to_json(b.field, b.space, b.star, true);
  j["triangle"] = table_to_json(b.field, b.space, b.triangle, true);
  return j.dump(2) + "\n";
}

std::vector<Vec> parse_layers(const std::string& text, const std::vector<std::string>& names, const Field& f,
                              const std::string& source) {
  json j = parse_json(text, source);
  if (!j.is_object() || !j.contains("layers") || !j.at("layers").is_array())
    parse_fail(source, "expected {\"layers\": [...]}");
  std::vector<Vec> out;
  std::size_t k = 0;
  for (const json& layer : j.at("layers")) {
    std::string where = source + ":layers[" + std::to_string(k++) + "]";
    if (!layer.is_object()) parse_fail(where, "expected an object of coordinates");
    Vec v(names.size(), 0);
    for (const auto& [key, value] : layer.items()) {
      auto it = std::find(names.begin(), names.end(), key);
      if (it == names.end()) parse_fail(where, "unknown coordinate '" + key + "'");
      if (!value.is_string() || !is_hex(value.get<std::string>())) parse_fail(where + "[\"" + key + "\"]", "expected a hex coefficient");
      v[static_cast<std::size_t>(it - names.begin())] = f.from_hex(value.get<std::string>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["status"] = r.ok() ? "pass" : "fail";
  j["violation_count"] = r.count();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations())
    j["violations"].push_back({{"law", v.law}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return j;
}

}  // namespace spo
