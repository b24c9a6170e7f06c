#include "orelab/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json_docs.hpp"

namespace orelab {

namespace {

BatchEntry analyze(const std::string& spec, const std::vector<std::string>& analyses, Format format,
                   const Limits& limits) {
  BatchEntry e;
  e.spec = spec;
  const auto wants = [&](const char* a) { return std::find(analyses.begin(), analyses.end(), a) != analyses.end(); };
  try {
    const FiniteRing r = construct(spec, limits);
    e.order = r.order();
    const LocalizationProfile p = profile(r, limits);
    e.max_den = p.max_den.size();
    e.radical = p.radical.size();
    e.localizable = p.verdict.localizable;
    e.decomposable = p.decomposition.success;
    std::vector<TheoremCheck> checks;
    if (wants("verify")) {
      checks = verify_theorems(r, theorem_ids(), limits);
      for (const auto& c : checks) e.failed_checks += c.pass ? 0 : 1;
      if (e.failed_checks) {
        e.status = 1;
        e.error = std::to_string(e.failed_checks) + " theorem checks failed";
      }
    }
    if (format == Format::json) {
      docs::ordered_json doc;
      doc["spec"] = spec;
      if (wants("info")) doc["info"] = docs::info_json(r, limits);
      doc["profile"] = docs::profile_json(p);
      if (wants("sided")) doc["sided"] = docs::sided_json(sided_profiles(r, limits));
      if (wants("verify")) doc["verify"] = docs::checks_json(checks);
      e.report = doc.dump(2) + "\n";
    } else {
      std::string text = "spec: " + spec + "\n";
      if (wants("info")) text += "\n[info]\n" + render_info(r, format, limits);
      text += "\n[profile]\n" + render_profile(p, format);
      if (wants("sided")) text += "\n[sided]\n" + render_sided(sided_profiles(r, limits), format);
      if (wants("verify")) text += "\n[verify]\n" + render_checks(checks, format);
      e.report = std::move(text);
    }
  } catch (const SizeGuardExceeded& ex) {
    e.status = 3;
    e.error = ex.what();
  } catch (const BadSpec& ex) {
    e.status = 2;
    e.error = ex.what();
  } catch (const ParseError& ex) {
    e.status = 2;
    e.error = ex.what();
  } catch (const std::exception& ex) {
    e.status = 1;
    e.error = ex.what();
  }
  return e;
}

std::string summary_table(const std::vector<BatchEntry>& entries) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& e : entries) width = std::max(width, e.spec.size());
  os << std::left << std::setw(4) << "#" << std::setw(static_cast<int>(width) + 2) << "ring" << std::setw(7) << "order"
     << std::setw(11) << "|maxDen_l|" << std::setw(8) << "|ll_R|" << std::setw(13) << "localizable"
     << "decomposable\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    os << std::setw(4) << i + 1 << std::setw(static_cast<int>(width) + 2) << e.spec;
    if (e.order == 0 && e.status != 0) {
      os << "error: " << e.error << '\n';
      continue;
    }
    os << std::setw(7) << e.order << std::setw(11) << e.max_den << std::setw(8) << e.radical << std::setw(13)
       << (e.localizable ? "yes" : "no") << (e.decomposable ? "yes" : "no");
    if (e.status != 0) os << "  error: " << e.error;
    os << '\n';
  }
  return os.str();
}

std::string file_stem(std::size_t index, const std::string& spec) {
  std::string s;
  for (char c : spec) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  while (!s.empty() && s.back() == '_') s.pop_back();
  std::ostringstream os;
  os << std::setw(3) << std::setfill('0') << index + 1 << '-' << s;
  return os.str();
}

}  // namespace

BatchResult run_batch(const BatchManifest& manifest, unsigned jobs, Format format, const Limits& limits) {
  BatchResult result;
  result.entries.resize(manifest.specs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < manifest.specs.size(); i = next++)
      result.entries[i] = analyze(manifest.specs[i], manifest.analyses, format, limits);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(manifest.specs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  result.summary = summary_table(result.entries);
  for (const auto& e : result.entries)
    if (e.status != 0) {
      result.exit_code = e.status;
      break;
    }
  return result;
}

void write_batch(const BatchResult& result, const std::filesystem::path& dir, Format format) {
  std::filesystem::create_directories(dir);
  const char* ext = format == Format::json ? ".json" : ".txt";
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const auto& e = result.entries[i];
    if (e.report.empty()) continue;
    std::ofstream(dir / (file_stem(i, e.spec) + ext)) << e.report;
  }
  std::ofstream(dir / "summary.txt") << result.summary;
}

}  // namespace orelab
