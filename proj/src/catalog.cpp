#include "orelab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "orelab/ideals.hpp"
#include "orelab/product.hpp"
#include "orelab/ring_io.hpp"

namespace orelab {

namespace {

constexpr std::uint64_t saturated_max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > saturated_max / a) return saturated_max;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  RingSpec parse_all() {
    RingSpec s = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw BadSpec("'" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a ring kind");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_ws();
    std::uint64_t v = 0;
    const auto* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc{} || ptr == first) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  RingSpec parse_spec() {
    const std::string kind = ident();
    expect('(');
    RingSpec s;
    if (kind == "file") {
      // The path runs to the matching close paren.
      int depth = 0;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && !(text_[pos_] == ')' && depth == 0)) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (pos_ == text_.size()) fail("unterminated file(...)");
      std::string path(text_.substr(start, pos_ - start));
      path.erase(0, path.find_first_not_of(" \t"));
      path.erase(path.find_last_not_of(" \t") + 1);
      if (path.empty()) fail("empty path");
      s.kind = RingSpec::Kind::file;
      s.path = std::move(path);
      ++pos_;
      return s;
    }
    if (kind == "zmod" || kind == "gf") {
      s.kind = kind == "zmod" ? RingSpec::Kind::zmod : RingSpec::Kind::gf;
      s.size = number();
    } else if (kind == "matrix" || kind == "upper_triangular") {
      s.kind = kind == "matrix" ? RingSpec::Kind::matrix : RingSpec::Kind::upper_triangular;
      s.args.push_back(parse_spec());
      expect(',');
      s.size = number();
    } else if (kind == "product") {
      s.kind = RingSpec::Kind::product;
      s.args.push_back(parse_spec());
      while (peek(',')) {
        ++pos_;
        s.args.push_back(parse_spec());
      }
    } else if (kind == "quotient") {
      s.kind = RingSpec::Kind::quotient;
      s.args.push_back(parse_spec());
      expect(',');
      expect('[');
      if (!peek(']')) {
        s.generators.push_back(static_cast<Elem>(number()));
        while (peek(',')) {
          ++pos_;
          s.generators.push_back(static_cast<Elem>(number()));
        }
      }
      expect(']');
    } else {
      fail("unknown ring kind '" + kind + "'");
    }
    expect(')');
    return s;
  }
};

bool valid_gf(std::uint64_t q) {
  return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9;
}

std::vector<std::string> element_names(const FiniteRing& r) {
  std::vector<std::string> out;
  for (Elem e = 0; e < r.order(); ++e) out.push_back(r.label(e));
  return out;
}

// Elements are digit vectors in base m, first digit most significant.
std::vector<Elem> digits(std::size_t index, std::size_t m, std::size_t count) {
  std::vector<Elem> d(count);
  for (std::size_t i = count; i-- > 0;) {
    d[i] = static_cast<Elem>(index % m);
    index /= m;
  }
  return d;
}

std::size_t undigits(const std::vector<Elem>& d, std::size_t m) {
  std::size_t v = 0;
  for (Elem x : d) v = v * m + x;
  return v;
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) { return SpecParser(text).parse_all(); }

std::string RingSpec::to_string() const {
  switch (kind) {
    case Kind::zmod:
      return "zmod(" + std::to_string(size) + ")";
    case Kind::gf:
      return "gf(" + std::to_string(size) + ")";
    case Kind::matrix:
      return "matrix(" + args.at(0).to_string() + "," + std::to_string(size) + ")";
    case Kind::upper_triangular:
      return "upper_triangular(" + args.at(0).to_string() + "," + std::to_string(size) + ")";
    case Kind::product: {
      std::string out = "product(";
      for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i].to_string();
      return out + ")";
    }
    case Kind::quotient: {
      std::string out = "quotient(" + args.at(0).to_string() + ",[";
      for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? "," : "") + std::to_string(generators[i]);
      return out + "])";
    }
    case Kind::file:
      return "file(" + path + ")";
  }
  return {};
}

std::uint64_t spec_order(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::zmod:
    case RingSpec::Kind::gf:
      return spec.size;
    case RingSpec::Kind::matrix:
      return sat_pow(spec_order(spec.args.at(0)), sat_mul(spec.size, spec.size));
    case RingSpec::Kind::upper_triangular:
      return sat_pow(spec_order(spec.args.at(0)), sat_mul(spec.size, spec.size + 1) / 2);
    case RingSpec::Kind::product: {
      std::uint64_t n = 1;
      for (const auto& a : spec.args) n = sat_mul(n, spec_order(a));
      return n;
    }
    case RingSpec::Kind::quotient:
      return spec_order(spec.args.at(0));
    case RingSpec::Kind::file:
      return load_ring_file(spec.path).order();
  }
  return 0;
}

FiniteRing zmod(std::uint64_t n) {
  if (n < 2) throw BadSpec("zmod(" + std::to_string(n) + "): modulus must be at least 2");
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), 0, 1);
}

FiniteRing galois_field(std::uint64_t q) {
  if (!valid_gf(q)) throw BadSpec("gf(" + std::to_string(q) + "): supported orders are 2,3,4,5,7,8,9");
  std::uint64_t p = q, k = 1;
  // Monic irreducible modulus, low coefficients first, leading 1 omitted.
  std::vector<std::uint64_t> modulus;
  if (q == 4) p = 2, k = 2, modulus = {1, 1};
  if (q == 8) p = 2, k = 3, modulus = {1, 1, 0};
  if (q == 9) p = 3, k = 2, modulus = {1, 0};
  if (k == 1) return zmod(q);

  const auto coeffs = [&](std::uint64_t e) {
    std::vector<std::uint64_t> c(k);
    for (std::uint64_t i = 0; i < k; ++i, e /= p) c[i] = e % p;
    return c;
  };
  const auto index = [&](const std::vector<std::uint64_t>& c) {
    std::uint64_t e = 0;
    for (std::uint64_t i = k; i-- > 0;) e = e * p + c[i];
    return static_cast<Elem>(e);
  };
  std::vector<Elem> add(q * q), mul(q * q);
  for (std::uint64_t a = 0; a < q; ++a)
    for (std::uint64_t b = 0; b < q; ++b) {
      const auto ca = coeffs(a), cb = coeffs(b);
      std::vector<std::uint64_t> sum(k);
      for (std::uint64_t i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
      add[a * q + b] = index(sum);
      std::vector<std::uint64_t> prod(2 * k - 1, 0);
      for (std::uint64_t i = 0; i < k; ++i)
        for (std::uint64_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      // x^k = -(modulus)
      for (std::uint64_t d = 2 * k - 1; d-- > k;) {
        const std::uint64_t lead = prod[d];
        prod[d] = 0;
        for (std::uint64_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - lead) * modulus[i]) % p;
      }
      prod.resize(k);
      mul[a * q + b] = index(prod);
    }
  std::vector<std::string> names;
  for (std::uint64_t e = 0; e < q; ++e) {
    const auto c = coeffs(e);
    std::string name;
    for (std::uint64_t i = k; i-- > 0;) {
      if (c[i] == 0) continue;
      if (!name.empty()) name += "+";
      const std::string coef = (c[i] == 1 && i > 0) ? "" : std::to_string(c[i]);
      name += coef + (i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i));
    }
    names.push_back(name.empty() ? "0" : name);
  }
  return FiniteRing::from_tables(q, std::move(add), std::move(mul), 0, 1, std::move(names));
}

namespace {

// Shared core of the matrix constructors: `cells` lists the (row, col)
// positions stored, in index order.
FiniteRing matrices(const FiniteRing& base, std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
  const std::size_t m = base.order();
  const std::size_t c = cells.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < c; ++i) n *= m;
  std::vector<std::vector<std::size_t>> slot(k, std::vector<std::size_t>(k, c));
  for (std::size_t i = 0; i < c; ++i) slot[cells[i].first][cells[i].second] = i;

  const auto expand = [&](std::size_t e) {
    const auto d = digits(e, m, c);
    std::vector<Elem> full(k * k, base.zero());
    for (std::size_t i = 0; i < c; ++i) full[cells[i].first * k + cells[i].second] = d[i];
    return full;
  };
  const auto pack = [&](const std::vector<Elem>& full) {
    std::vector<Elem> d(c);
    for (std::size_t i = 0; i < c; ++i) d[i] = full[cells[i].first * k + cells[i].second];
    return static_cast<Elem>(undigits(d, m));
  };

  std::vector<std::vector<Elem>> expanded(n);
  for (std::size_t e = 0; e < n; ++e) expanded[e] = expand(e);

  std::vector<Elem> add(n * n), mul(n * n), full(k * k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& x = expanded[a];
      const auto& y = expanded[b];
      for (std::size_t i = 0; i < k * k; ++i) full[i] = base.add(x[i], y[i]);
      add[a * n + b] = pack(full);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Elem acc = base.zero();
          for (std::size_t l = 0; l < k; ++l) acc = base.add(acc, base.mul(x[i * k + l], y[l * k + j]));
          full[i * k + j] = acc;
        }
      mul[a * n + b] = pack(full);
    }

  std::vector<Elem> identity(k * k, base.zero());
  for (std::size_t i = 0; i < k; ++i) identity[i * k + i] = base.one();
  const auto base_names = element_names(base);
  std::vector<std::string> names;
  for (std::size_t e = 0; e < n; ++e) {
    std::string s = "[";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ";";
      for (std::size_t j = 0; j < k; ++j) s += (j ? " " : "") + base_names[expanded[e][i * k + j]];
    }
    names.push_back(s + "]");
  }
  return FiniteRing::from_tables(n, std::move(add), std::move(mul), pack(std::vector<Elem>(k * k, base.zero())),
                                 pack(identity), std::move(names));
}

}  // namespace

FiniteRing matrix_ring(const FiniteRing& base, std::size_t k) {
  if (k < 1) throw BadSpec("matrix size must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) cells.emplace_back(i, j);
  return matrices(base, k, cells);
}

FiniteRing upper_triangular_ring(const FiniteRing& base, std::size_t k) {
  if (k < 1) throw BadSpec("matrix size must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) cells.emplace_back(i, j);
  return matrices(base, k, cells);
}

FiniteRing construct(const RingSpec& spec, const Limits& limits) {
  if (spec.kind != RingSpec::Kind::file) {
    const std::uint64_t order = spec_order(spec);
    if (order > limits.max_order)
      throw SizeGuardExceeded("construct " + spec.to_string(), order, limits.max_order);
  }
  switch (spec.kind) {
    case RingSpec::Kind::zmod:
      return zmod(spec.size);
    case RingSpec::Kind::gf:
      return galois_field(spec.size);
    case RingSpec::Kind::matrix:
      return matrix_ring(construct(spec.args.at(0), limits), spec.size);
    case RingSpec::Kind::upper_triangular:
      return upper_triangular_ring(construct(spec.args.at(0), limits), spec.size);
    case RingSpec::Kind::product: {
      std::vector<FiniteRing> factors;
      for (const auto& a : spec.args) factors.push_back(construct(a, limits));
      return direct_product(std::move(factors)).ring;
    }
    case RingSpec::Kind::quotient: {
      const FiniteRing base = construct(spec.args.at(0), limits);
      for (Elem g : spec.generators)
        if (g >= base.order()) throw BadSpec(spec.to_string() + ": generator " + std::to_string(g) + " out of range");
      const Subset ideal = ideal_closure(base, std::span<const Elem>(spec.generators), Side::two_sided);
      if (ideal.size() == base.order()) throw BadSpec(spec.to_string() + ": generators span the whole ring");
      return quotient(base, ideal).ring;
    }
    case RingSpec::Kind::file: {
      FiniteRing r = load_ring_file(spec.path);
      if (r.order() > limits.max_order)
        throw SizeGuardExceeded("construct " + spec.to_string(), r.order(), limits.max_order);
      return r;
    }
  }
  throw BadSpec("unhandled ring kind");
}

FiniteRing construct(std::string_view spec, const Limits& limits) { return construct(RingSpec::parse(spec), limits); }

std::vector<std::string> default_catalog() {
  return {
      "zmod(2)", "zmod(3)", "zmod(4)", "zmod(5)", "zmod(6)", "zmod(7)", "zmod(8)", "zmod(9)", "zmod(10)",
      "zmod(11)", "zmod(12)",
      "gf(2)", "gf(3)", "gf(4)", "gf(5)", "gf(7)", "gf(8)", "gf(9)",
      "upper_triangular(gf(2),2)", "upper_triangular(gf(3),2)", "matrix(gf(2),2)",
      "product(gf(2),gf(2))", "product(gf(2),gf(3))", "product(gf(2),gf(2),gf(2))", "product(gf(2),gf(4))",
      "product(zmod(4),gf(2))", "product(gf(3),gf(3))", "product(gf(2),gf(3),gf(5))",
      "product(gf(2),upper_triangular(gf(2),2))", "product(gf(3),upper_triangular(gf(2),2))",
      "product(gf(2),matrix(gf(2),2))", "product(zmod(4),gf(3))",
  };
}

const std::vector<std::string>& known_analyses() {
  static const std::vector<std::string> names{"info", "profile", "sided", "verify"};
  return names;
}

BatchManifest BatchManifest::parse(std::string_view text) {
  BatchManifest m;
  bool analyses_set = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  const auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
  };
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::string key, value = line;
    if (const auto colon = line.find(':'); colon != std::string::npos && line.find('(') > colon) {
      key = trim(line.substr(0, colon));
      value = trim(line.substr(colon + 1));
    }
    if (key.empty() || key == "ring") {
      try {
        m.specs.push_back(RingSpec::parse(value).to_string());
      } catch (const BadSpec& e) {
        throw ParseError(number, e.what());
      }
    } else if (key == "analyses") {
      if (!analyses_set) m.analyses.clear();
      analyses_set = true;
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        if (std::find(known_analyses().begin(), known_analyses().end(), item) == known_analyses().end())
          throw ParseError(number, "unknown analysis '" + item + "'");
        if (std::find(m.analyses.begin(), m.analyses.end(), item) == m.analyses.end()) m.analyses.push_back(item);
      }
    } else if (key == "output") {
      m.output = value;
    } else if (key == "jobs") {
      unsigned j = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), j);
      if (ec != std::errc{} || ptr != value.data() + value.size() || j == 0)
        throw ParseError(number, "jobs must be a positive integer");
      m.jobs = j;
    } else {
      throw ParseError(number, "unknown key '" + key + "'");
    }
  }
  return m;
}

BatchManifest BatchManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace orelab
