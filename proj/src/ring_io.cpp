#include "orelab/ring_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace orelab {

namespace {

using nlohmann::json;

std::string render(const FiniteRing& r, bool with_names) {
  const std::size_t n = r.order();
  std::ostringstream os;
  auto table = [&](const char* key, std::span<const Elem> t) {
    os << "  \"" << key << "\": [\n";
    for (std::size_t i = 0; i < n; ++i) {
      os << "    [";
      for (std::size_t j = 0; j < n; ++j) os << (j ? ", " : "") << t[i * n + j];
      os << "]" << (i + 1 < n ? "," : "") << "\n";
    }
    os << "  ]";
  };
  os << "{\n";
  os << "  \"order\": " << n << ",\n";
  os << "  \"one\": " << r.one() << ",\n";
  os << "  \"zero\": " << r.zero() << ",\n";
  table("add", r.add_table());
  os << ",\n";
  table("mul", r.mul_table());
  if (with_names && !r.names().empty()) {
    os << ",\n  \"names\": [";
    for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << json(r.names()[i]).dump();
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

/// Line on which `"key"` first appears, for semantic errors.
std::size_t line_of_key(std::string_view text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  return pos == std::string_view::npos ? 1 : line_of(text, pos);
}

std::vector<Elem> read_table(const json& doc, std::string_view text, const char* key, std::size_t n) {
  if (!doc.contains(key)) throw ParseError(1, std::string("missing field '") + key + "'");
  const auto& rows = doc.at(key);
  const auto line = line_of_key(text, key);
  if (!rows.is_array() || rows.size() != n)
    throw ParseError(line, std::string("'") + key + "' must have " + std::to_string(n) + " rows");
  std::vector<Elem> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n)
      throw ParseError(line + 1 + i, std::string("row ") + std::to_string(i) + " of '" + key + "' must have " +
                                         std::to_string(n) + " entries");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(line + 1 + i, std::string("non-index entry in '") + key + "'");
      out.push_back(v.get<Elem>());
    }
  }
  return out;
}

}  // namespace

std::string ring_to_text(const FiniteRing& r) { return render(r, true); }

std::string canonical_form(const FiniteRing& r) { return render(r, false); }

FiniteRing ring_from_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_of(text, e.byte), e.what());
  }
  if (!doc.is_object()) throw ParseError(1, "ring document must be an object");
  auto index_field = [&](const char* key) -> Elem {
    if (!doc.contains(key)) throw ParseError(1, std::string("missing field '") + key + "'");
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ParseError(line_of_key(text, key), std::string("'") + key + "' must be a nonnegative integer");
    return v.get<Elem>();
  };
  const std::size_t n = index_field("order");
  const Elem one = index_field("one");
  const Elem zero = index_field("zero");
  auto add = read_table(doc, text, "add", n);
  auto mul = read_table(doc, text, "mul", n);
  std::vector<std::string> names;
  if (doc.contains("names")) {
    const auto& v = doc.at("names");
    if (!v.is_array() || v.size() != n) throw ParseError(line_of_key(text, "names"), "'names' must list one string per element");
    for (const auto& s : v) {
      if (!s.is_string()) throw ParseError(line_of_key(text, "names"), "'names' entries must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), zero, one, std::move(names));
}

FiniteRing load_ring_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ring_from_text(ss.str());
}

void save_ring_file(const FiniteRing& r, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << ring_to_text(r);
}

std::string canonical_hash(const FiniteRing& r) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_form(r)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace orelab
