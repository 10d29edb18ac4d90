#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "weylcryst/invariants.hpp"

namespace weylcryst::invariants {

namespace detail {
extern const char* const kCatalogText;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<CaseFamily> parse_catalog(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw BadCatalogData("catalog: empty data");
  std::istringstream hs(header);
  std::string magic, version, ck_kw, ck_hex;
  hs >> magic >> version >> ck_kw >> ck_hex;
  if (magic != "weylcryst-catalog" || version != "v1" || ck_kw != "checksum")
    throw BadCatalogData("catalog: bad header");
  std::string payload = text.substr(header.size() + 1);
  char hex[32];
  snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(payload)));
  if (ck_hex != hex) throw BadCatalogData("catalog: checksum mismatch");

  std::vector<CaseFamily> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw != "family") throw BadCatalogData("catalog: expected 'family', got: " + line);
    CaseFamily row;
    std::string type_s, fam_s, classes_kw, label_kw, label_s;
    ls >> type_s >> row.rank >> fam_s >> classes_kw >> row.class_count >> label_kw >> label_s;
    if (classes_kw != "classes" || label_kw != "label")
      throw BadCatalogData("catalog: malformed family line: " + line);
    row.type = rootsys::type_from_string(type_s);
    auto slash = fam_s.find('/');
    if (slash != std::string::npos) {
      row.lambda_a = Int(fam_s.substr(slash + 1));
      fam_s = fam_s.substr(0, slash);
    }
    row.family = rootsys::family_from_string(fam_s);
    row.label = case_label_from_string(label_s);

    for (int k = 0; k < row.class_count; ++k) {
      if (!std::getline(in, line) || line != "rep")
        throw BadCatalogData("catalog: expected 'rep' in " + row.name());
      std::vector<RatVector> ts;
      for (int j = 0; j < row.rank; ++j) {
        if (!std::getline(in, line))
          throw BadCatalogData("catalog: truncated representative in " + row.name());
        std::istringstream vs(line);
        RatVector t;
        std::string tok;
        while (vs >> tok) t.push_back(exactla::rat_from_string(tok));
        ts.push_back(std::move(t));
      }
      row.representatives.push_back(std::move(ts));
    }
    if (!std::getline(in, line) || line != "end")
      throw BadCatalogData("catalog: expected 'end' in " + row.name());
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw BadCatalogData("catalog: no rows");
  return rows;
}

// Point groups are expensive to generate; share one per (type, rank) across
// catalog() calls.
std::shared_ptr<const weyl::WeylGroup> shared_point_group(rootsys::Type type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const weyl::WeylGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(int(type), rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto r = rootsys::build_root_system(type, rank);
  auto g = std::make_shared<weyl::WeylGroup>(
      weyl::WeylGroup::generate(rootsys::simple_reflections(r)));
  cache.emplace(key, g);
  return g;
}

}  // namespace

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::SplitOnly: return "split-only";
    case CaseLabel::InvolutionPattern: return "involution-pattern";
    case CaseLabel::ForkEqualSquares: return "fork-squares";
    case CaseLabel::TripleOrCommuting: return "triple-or-commuting";
    case CaseLabel::ShortCosetSquares: return "short-coset-squares";
  }
  throw std::invalid_argument("bad case label enum");
}

CaseLabel case_label_from_string(const std::string& s) {
  if (s == "split-only") return CaseLabel::SplitOnly;
  if (s == "involution-pattern") return CaseLabel::InvolutionPattern;
  if (s == "fork-squares") return CaseLabel::ForkEqualSquares;
  if (s == "triple-or-commuting") return CaseLabel::TripleOrCommuting;
  if (s == "short-coset-squares") return CaseLabel::ShortCosetSquares;
  throw BadCatalogData("unknown case label: " + s);
}

std::string CaseFamily::name() const {
  std::string s = rootsys::to_string(type);
  if (!std::isdigit(static_cast<unsigned char>(s.back()))) s += std::to_string(rank);
  s += "-" + rootsys::to_string(family);
  if (lambda_a) s += "/" + lambda_a->get_str();
  return s;
}

const std::string& catalog_text() {
  static const std::string text(detail::kCatalogText);
  return text;
}

const std::vector<CaseFamily>& catalog_families() {
  static const std::vector<CaseFamily> rows = parse_catalog(catalog_text());
  return rows;
}

const CaseFamily& catalog_entry(rootsys::Type type, int rank, rootsys::Family family,
                                std::optional<Int> lambda_a) {
  for (const CaseFamily& row : catalog_families())
    if (row.type == type && row.rank == rank && row.family == family && row.lambda_a == lambda_a)
      return row;
  CaseFamily probe;
  probe.type = type;
  probe.rank = rank;
  probe.family = family;
  probe.lambda_a = lambda_a;
  throw UnknownCatalogEntry("no catalog entry " + probe.name());
}

const CaseFamily& catalog_entry(const std::string& name) {
  for (const CaseFamily& row : catalog_families())
    if (row.name() == name) return row;
  throw UnknownCatalogEntry("no catalog entry " + name);
}

std::vector<CrystGroup> catalog(rootsys::Type type, int rank, rootsys::Family family,
                                std::optional<Int> lambda_a) {
  const CaseFamily& row = catalog_entry(type, rank, family, lambda_a);
  auto group = shared_point_group(type, rank);
  rootsys::LatticeSpec spec = rootsys::family_spec(family, rank, lambda_a);
  std::vector<CrystGroup> out;
  for (const auto& ts : row.representatives)
    out.push_back(CrystGroup::build_from_generators(group, spec, ts));
  return out;
}

}  // namespace weylcryst::invariants
