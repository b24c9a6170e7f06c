#include "orelab/errors.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "orelab/limits.hpp"

namespace orelab {

namespace {

std::string describe_violation(const std::string& law, const std::vector<Elem>& witness) {
  std::ostringstream os;
  os << "axiom violation: " << law;
  if (!witness.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
  }
  return os.str();
}

std::string describe_chain(const std::vector<Elem>& chain) {
  std::ostringstream os;
  os << "multiplicative closure reaches 0 via product";
  for (Elem e : chain) os << " " << e;
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string law, std::vector<Elem> witness)
    : Error(describe_violation(law, witness)), law_(std::move(law)), witness_(std::move(witness)) {}

SizeGuardExceeded::SizeGuardExceeded(std::string routine, std::size_t actual, std::size_t limit)
    : Error("size guard exceeded in " + routine + ": order " + std::to_string(actual) + " > limit " +
            std::to_string(limit)),
      actual_(actual),
      limit_(limit) {}

ZeroAbsorbed::ZeroAbsorbed(std::vector<Elem> chain) : Error(describe_chain(chain)), chain_(std::move(chain)) {}

NotOre::NotOre(Elem r, Elem s)
    : Error("not a left Ore set: S*" + std::to_string(r) + " and R*" + std::to_string(s) + " are disjoint") {}

NotDenominator::NotDenominator(Elem r, Elem s)
    : Error("not a left denominator set: witness (r,s) = (" + std::to_string(r) + "," + std::to_string(s) + ")") {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}

Limits Limits::from_environment() {
  Limits limits;
  auto read = [](const char* name, std::size_t& out) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && parsed > 0) out = static_cast<std::size_t>(parsed);
    }
  };
  read("ORELAB_GUARD_ORDER", limits.max_order);
  read("ORELAB_GUARD_BRUTEFORCE", limits.max_brute_force_order);
  return limits;
}

void require_order(const char* routine, std::size_t order, std::size_t limit) {
  if (order > limit) throw SizeGuardExceeded(routine, order, limit);
}

}  // namespace orelab
