#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <regex>
#include <string>

#include "CLI11.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/homology.hpp"
#include "pathdepth/io.hpp"
#include "pathdepth/sdepth.hpp"
#include "pathdepth/verifier.hpp"

using namespace pathdepth;

namespace {

struct GenArgs {
  std::string family;
  int n = 0, m = 0, t = 1, d = 0;
};

int run_gen(const GenArgs& a) {
  MonomialIdeal ideal = MonomialIdeal::zero(1);
  if (a.family == "path") {
    ideal = ideal_power(path_ideal(a.n, a.m), a.t);
  } else if (a.family == "cycle") {
    ideal = ideal_power(cycle_ideal(a.n, a.m), a.t);
  } else {
    ideal = residue_class_ideal(a.n, a.d);
  }
  std::cout << to_json(ideal).dump() << '\n';
  return 0;
}

int run_depth(const std::string& spec, std::uint32_t p, std::size_t budget) {
  DepthOptions opts;
  opts.characteristic = p;
  if (budget) opts.lattice_budget = budget;
  DepthReport rep = depth_quotient(resolve_ideal(spec), opts);
  std::cout << to_json(rep).dump(2) << '\n';
  return rep.complete() ? 0 : 3;
}

int run_sdepth(const std::string& spec, std::size_t budget, std::int64_t time_ms, bool certify) {
  MonomialIdeal ideal = resolve_ideal(spec);
  SdepthOptions opts;
  if (budget) opts.search.node_budget = budget;
  opts.search.time_budget = std::chrono::milliseconds{time_ms};
  SdepthReport rep = sdepth_quotient(ideal, opts);
  Json j = to_json(rep, certify);
  if (certify && !ideal.is_zero()) {
    PartitionCheck check = check_partition(ideal, rep.certificate);
    j["certificate_valid"] = check.valid && check.sdepth == rep.lower;
    if (!check.valid) j["certificate_error"] = check.error;
  }
  std::cout << j.dump(2) << '\n';
  return rep.exact() ? 0 : 3;
}

// Parses "n=3..6,t=1..4"; either part may be omitted.
Grid parse_grid(const std::string& text, Grid g) {
  static const std::regex part(R"(\s*([nt])\s*=\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    auto comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::smatch mt;
    if (!std::regex_match(piece, mt, part)) throw CLI::ValidationError("--grid", "expected n=a..b,t=1..c");
    int lo = std::stoi(mt[2]), hi = std::stoi(mt[3]);
    if (mt[1] == "n") {
      g.n_min = lo;
      g.n_max = hi;
    } else {
      if (lo != 1) throw CLI::ValidationError("--grid", "t ranges start at 1");
      g.t_max = hi;
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return g;
}

std::string csv_path_for(const std::string& out) {
  auto dot = out.rfind('.');
  auto slash = out.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return out + ".csv";
  return out.substr(0, dot) + ".csv";
}

struct Tally {
  int pass = 0, fail = 0, unknown = 0;
};

Tally write_records(const std::vector<VerificationRecord>& records, const std::string& out) {
  Tally tally;
  std::ofstream jsonl, csv;
  if (!out.empty()) {
    jsonl.open(out);
    csv.open(csv_path_for(out));
    if (!jsonl || !csv) throw std::runtime_error("cannot write " + out);
    csv << csv_header() << '\n';
  }
  for (const auto& r : records) {
    (out.empty() ? std::cout : jsonl) << to_json(r).dump() << '\n';
    if (csv.is_open()) csv << to_csv_row(r) << '\n';
    switch (r.verdict) {
      case Verdict::kPass:
        ++tally.pass;
        break;
      case Verdict::kFail:
        ++tally.fail;
        break;
      case Verdict::kUnknown:
        ++tally.unknown;
        break;
    }
  }
  return tally;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth and Stanley depth of cycle and path ideal powers"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Print a family ideal as canonical JSON");
  cmd_gen->add_option("--family", gen.family)->required()->check(CLI::IsMember({"path", "cycle", "u"}));
  cmd_gen->add_option("--n", gen.n)->required()->check(CLI::PositiveNumber);
  cmd_gen->add_option("--m", gen.m)->check(CLI::PositiveNumber);
  cmd_gen->add_option("--t", gen.t, "Power")->check(CLI::PositiveNumber);
  cmd_gen->add_option("--d", gen.d, "Residue classes for the u family")->check(CLI::PositiveNumber);

  std::string ideal_spec;
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::size_t budget = 0;
  auto* cmd_depth = app.add_subcommand("depth", "depth(S/I) from multigraded Betti numbers");
  cmd_depth->add_option("--ideal", ideal_spec, "JSON file or family spec like cycle:6:4:2")->required();
  cmd_depth->add_option("--char", characteristic, "Prime characteristic");
  cmd_depth->add_option("--budget", budget, "Lattice size cap");

  bool certify = false;
  auto* cmd_sdepth = app.add_subcommand("sdepth", "sdepth(S/I) by interval partitions");
  cmd_sdepth->add_option("--ideal", ideal_spec, "JSON file or family spec like cycle:6:4:2")->required();
  cmd_sdepth->add_option("--budget", budget, "Search nodes per decision");
  std::int64_t time_ms = 0;
  cmd_sdepth->add_option("--time-ms", time_ms, "Wall-clock cap per decision, 0 for none")->check(CLI::NonNegativeNumber);
  cmd_sdepth->add_flag("--certify", certify, "Emit and re-check the partition");

  std::string statement = "all";
  std::string out;
  std::string grid_text;
  Grid grid;
  bool cross_check = false;
  auto* cmd_verify = app.add_subcommand("verify", "Check the stated identities over a parameter grid");
  std::vector<std::string> ids = statement_ids();
  ids.insert(ids.begin(), "all");
  cmd_verify->add_option("--statement", statement)->check(CLI::IsMember(ids));
  cmd_verify->add_option("--n-max", grid.n_max)->check(CLI::Range(3, 12));
  cmd_verify->add_option("--t-max", grid.t_max)->check(CLI::Range(1, 8));
  cmd_verify->add_option("--char", characteristic, "Prime characteristic");
  cmd_verify->add_flag("--cross-check", cross_check, "Recompute depths over GF(2)");
  cmd_verify->add_option("--out", out, "JSON-lines report; a CSV is written alongside");

  std::string conjecture = "d-minus-1";
  auto* cmd_scan = app.add_subcommand("scan", "Collect evidence for an open inequality");
  cmd_scan->add_option("--conjecture", conjecture)->check(CLI::IsMember({"d-minus-1", "stanley"}));
  cmd_scan->add_option("--grid", grid_text, "Ranges like n=3..6,t=1..4");
  cmd_scan->add_option("--char", characteristic, "Prime characteristic");
  cmd_scan->add_option("--out", out, "JSON-lines report; a CSV is written alongside");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_gen) {
      if (gen.family == "u" ? gen.d == 0 : gen.m == 0)
        throw CLI::ValidationError(gen.family == "u" ? "--d" : "--m", "required for this family");
      return run_gen(gen);
    }
    if (*cmd_depth) return run_depth(ideal_spec, characteristic, budget);
    if (*cmd_sdepth) return run_sdepth(ideal_spec, budget, time_ms, certify);

    VerifierSettings settings;
    settings.characteristic = characteristic;
    settings.cross_check = cross_check;
    Verifier verifier(with_environment(settings));
    if (*cmd_verify) {
      Tally t = write_records(run_statement(verifier, statement, grid), out);
      std::cerr << "pass " << t.pass << ", fail " << t.fail << ", unknown " << t.unknown << '\n';
      return t.fail ? 1 : 0;
    }
    grid = parse_grid(grid_text, Grid{3, 6, 4});
    auto records = run_scan(verifier, conjecture, grid);
    Tally t = write_records(records, out);
    for (const auto& r : records)
      if (r.verdict == Verdict::kFail)
        std::cerr << "COUNTEREXAMPLE " << r.statement << " n=" << r.n << " m=" << r.m << " t=" << r.t
                  << " depth=" << (r.depth ? std::to_string(*r.depth) : "?") << '\n';
    std::cerr << "holds " << t.pass << ", counterexamples " << t.fail << ", unknown " << t.unknown << '\n';
    return 0;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
