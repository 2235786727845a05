#include "pathdepth/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <vector>

#include "pathdepth/families.hpp"

namespace pathdepth {

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  if (ideal.is_unit()) {
    gens.push_back(std::vector<Exponent>(ideal.ambient(), 0));
  } else {
    for (const auto& g : ideal.generators()) {
      auto e = g.exponents();
      gens.push_back(std::vector<Exponent>(e.begin(), e.end()));
    }
  }
  return Json{{"n", ideal.ambient()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
    throw std::invalid_argument("ideal JSON needs \"n\" and \"gens\"");
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) {
    if (g.is_string()) {
      gens.push_back(parse_monomial(g.get<std::string>(), n));
    } else {
      auto e = g.get<std::vector<Exponent>>();
      if (e.size() != n) throw std::invalid_argument("generator length differs from n");
      gens.emplace_back(std::move(e));
    }
  }
  return minimalize(n, std::move(gens));
}

Json to_json(const DepthReport& report) {
  Json j{{"n", report.ambient},
         {"characteristic", report.characteristic},
         {"method", to_string(report.method)},
         {"lattice_size", report.lattice_size}};
  j["depth"] = report.depth ? Json(*report.depth) : Json(nullptr);
  j["projective_dimension"] = report.projective_dimension ? Json(*report.projective_dimension) : Json(nullptr);
  Json betti = Json::array();
  for (const auto& b : report.betti)
    betti.push_back({{"i", b.homological_degree}, {"a", b.multidegree}, {"value", b.value}});
  j["betti"] = betti;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Json to_json(const IntervalPartition& partition) {
  Json out = Json::array();
  for (const auto& iv : partition) out.push_back(Json::array({iv.bottom, iv.top}));
  return out;
}

IntervalPartition partition_from_json(const Json& j) {
  IntervalPartition out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("interval must be [a, b]");
    out.push_back({pair[0].get<std::vector<Exponent>>(), pair[1].get<std::vector<Exponent>>()});
  }
  return out;
}

Json to_json(const SdepthReport& report, bool with_certificate) {
  Json j{{"n", report.ambient}, {"poset_size", report.poset_size}, {"exact", report.exact()}};
  if (report.exact()) {
    j["sdepth"] = report.lower;
  } else {
    j["sdepth"] = nullptr;
  }
  j["bracket"] = {report.lower, report.upper};
  Json attempts = Json::array();
  for (const auto& a : report.attempts) {
    Json e{{"k", a.k}, {"status", to_string(a.status)}, {"nodes", a.nodes}, {"rows", a.rows}};
    if (!a.note.empty()) e["note"] = a.note;
    attempts.push_back(e);
  }
  j["attempts"] = attempts;
  if (with_certificate) j["certificate"] = to_json(report.certificate);
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

namespace {

std::vector<int> split_ints(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    auto cut = text.find(':');
    auto part = text.substr(0, cut);
    int v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || p != part.data() + part.size())
      throw std::invalid_argument("bad integer in family spec: " + std::string(part));
    out.push_back(v);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

}  // namespace

MonomialIdeal resolve_ideal(std::string_view spec) {
  auto colon_at = spec.find(':');
  if (colon_at != std::string_view::npos) {
    auto family = spec.substr(0, colon_at);
    auto args = split_ints(spec.substr(colon_at + 1));
    auto power = [&](MonomialIdeal base, std::size_t at) {
      return args.size() > at ? ideal_power(base, args[at]) : base;
    };
    if (family == "cycle" && (args.size() == 2 || args.size() == 3))
      return power(cycle_ideal(args[0], args[1]), 2);
    if (family == "path" && (args.size() == 2 || args.size() == 3))
      return power(path_ideal(args[0], args[1]), 2);
    if (family == "u" && args.size() == 2) return residue_class_ideal(args[0], args[1]);
    if (family == "max" && args.size() == 1) return maximal_ideal(static_cast<std::size_t>(args[0]));
    throw std::invalid_argument("unknown family spec: " + std::string(spec));
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw std::invalid_argument("cannot open ideal file: " + std::string(spec));
  return ideal_from_json(Json::parse(in));
}

}  // namespace pathdepth
