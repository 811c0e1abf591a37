// Command-line front end.
//
// Exit codes: 0 success or "satisfies", 1 computational or verification
// failure, 2 usage or input error, 3 hypothesis fails (check only).

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sqfree/sqfree.hpp"

using namespace sqfree;
using nlohmann::json;

namespace {

enum class Format { Table, Structured };

struct Config {
  Format format = Format::Table;
  std::uint64_t bound = kDefaultOrderBound;
  std::string spec;
  std::optional<std::uint64_t> q;
  std::string q_range;
  bool delta_only = false;
  std::vector<unsigned> n;
  std::string data;
  std::string only;
  std::size_t samples = 3;
};

CharacterTable table_for(const Config& cfg) {
  CharacterTableOptions opts;
  opts.order_bound = cfg.bound;
  opts.spec_text = cfg.spec;
  return character_table(construct(cfg.spec), opts);
}

int cmd_table(const Config& cfg) {
  auto t = table_for(cfg);
  std::cout << (cfg.format == Format::Structured ? serialize(t) : format_table(t));
  return 0;
}

int cmd_classes(const Config& cfg) {
  auto g = construct(cfg.spec);
  auto cc = conjugacy_classes(g, cfg.bound);
  auto names = class_names(cc);
  if (cfg.format == Format::Structured) {
    json rows = json::array();
    for (std::size_t c = 0; c < cc.count(); ++c)
      rows.push_back({{"name", names[c]},
                      {"size", cc.sizes[c]},
                      {"order", cc.element_orders[c]},
                      {"representative", to_cycle_string(cc.representatives[c])}});
    json doc = {{"classes-format", 1}, {"group", cfg.spec}, {"order", to_string(g.order())}, {"classes", rows}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << cfg.spec << "  order " << g.order() << "  " << cc.count() << " classes\n";
  for (std::size_t c = 0; c < cc.count(); ++c)
    std::printf("%-6s size %-8llu order %-4llu %s\n", names[c].c_str(), static_cast<unsigned long long>(cc.sizes[c]),
                static_cast<unsigned long long>(cc.element_orders[c]), to_cycle_string(cc.representatives[c]).c_str());
  return 0;
}

int cmd_check(const Config& cfg) {
  auto v = square_free_hypothesis(table_for(cfg));
  if (cfg.format == Format::Structured)
    std::cout << verdict_json(v).dump(2) << "\n";
  else
    std::cout << format_verdict(v);
  return v.satisfies ? 0 : 3;
}

int cmd_codegrees(const Config& cfg) {
  auto r = gcd_report(table_for(cfg));
  if (cfg.format == Format::Structured)
    std::cout << report_json(r).dump(2) << "\n";
  else
    std::cout << format_report(r);
  return 0;
}

std::vector<std::uint64_t> q_values(const Config& cfg) {
  std::uint64_t lo = 0, hi = 0;
  if (cfg.q) {
    lo = hi = *cfg.q;
  } else if (!cfg.q_range.empty()) {
    auto colon = cfg.q_range.find(':');
    if (colon == std::string::npos) throw InputError("--q-range expects LO:HI");
    try {
      lo = std::stoull(cfg.q_range.substr(0, colon));
      hi = std::stoull(cfg.q_range.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("--q-range expects LO:HI");
    }
  } else {
    throw InputError("psl2-scan needs --q or --q-range");
  }
  if (lo > hi || hi > (1ull << 40)) throw InputError("bad q range");
  std::vector<std::uint64_t> out;
  for (auto q = lo; q <= hi; ++q) {
    if (q > 3 && prime_power_decompose(q)) out.push_back(q);
    else if (cfg.q) throw InputError("q must be a prime power greater than 3");
  }
  return out;
}

int cmd_psl2_scan(const Config& cfg) {
  json rows = json::array();
  for (auto q : q_values(cfg)) {
    for (const auto& c : psl2_enumerate_subgroups(q)) {
      if (cfg.delta_only && !c.contains_delta) continue;
      const auto v = psl2_squarefree_conditions(c);
      const bool white = white_set_square_free(c);
      if (cfg.format == Format::Structured) {
        rows.push_back({{"q", c.q},
                        {"p", c.p},
                        {"f", c.f},
                        {"group", describe(c)},
                        {"order", to_string(c.group_order())},
                        {"d", c.d},
                        {"containsDelta", c.contains_delta},
                        {"cosetType", to_string(c.coset)},
                        {"failedCondition", v.failed_condition},
                        {"exceptional", v.exceptional},
                        {"satisfies", v.satisfies},
                        {"degreeSetVerdict", white}});
        continue;
      }
      std::printf("%-26s d=%-3llu delta=%s coset=%-16s %s", describe(c).c_str(), static_cast<unsigned long long>(c.d),
                  c.contains_delta ? "yes" : "no ", to_string(c.coset).c_str(), v.satisfies ? "satisfies" : "fails");
      if (v.failed_condition) std::printf(" (condition %d fails%s)", v.failed_condition, v.exceptional ? ", exceptional" : "");
      if (white != v.satisfies) std::printf(" [degree set says %s]", white ? "satisfies" : "fails");
      std::printf("\n");
    }
  }
  if (cfg.format == Format::Structured) std::cout << json{{"scan-format", 1}, {"rows", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_an_witness(const Config& cfg) {
  if (cfg.n.empty()) throw InputError("an-witness needs --n");
  json out = json::array();
  for (auto n : cfg.n) {
    auto w = an_witness(n);
    for (const auto& x : w) {
      if (cfg.format == Format::Structured) {
        json j = {{"n", n},
                  {"partition", to_string(x.partition)},
                  {"degree", to_string(x.degree)},
                  {"codegree", to_string(x.codegree)},
                  {"gcd", to_string(big_gcd(x.degree, x.codegree))}};
        out.push_back(j);
        continue;
      }
      std::cout << "n=" << n << "  " << to_string(x.partition) << "  degree " << x.degree << "  codegree "
                << x.codegree << "  gcd " << big_gcd(x.degree, x.codegree) << "\n";
    }
  }
  if (cfg.format == Format::Structured) std::cout << json{{"an-witness-format", 1}, {"rows", out}}.dump(2) << "\n";
  return 0;
}

int cmd_verify_data(const Config& cfg) {
  std::vector<std::string> files;
  if (!cfg.data.empty())
    files.push_back(cfg.data);
  else
    files = {std::string(SQFREE_DATA_DIR) + "/witness/sporadic.tsv", std::string(SQFREE_DATA_DIR) + "/witness/lie.tsv"};
  std::vector<VerificationOutcome> all;
  for (const auto& f : files) {
    auto rows = load_witnesses(f);
    for (auto& o : verify_all(rows, cfg.samples)) all.push_back(std::move(o));
  }
  if (cfg.format == Format::Structured)
    std::cout << outcomes_json(all).dump(2) << "\n";
  else
    std::cout << format_outcomes(all);
  for (const auto& o : all)
    if (o.status != WitnessStatus::Confirmed) return 1;
  return 0;
}

int cmd_verify_paper(const Config& cfg) {
  std::set<std::string> only;
  if (!cfg.only.empty()) {
    std::stringstream s(cfg.only);
    std::string id;
    while (std::getline(s, id, ',')) only.insert(id);
    for (const auto& id : only) {
      bool known = false;
      for (const auto& c : all_claims()) known = known || c.id == id;
      if (!known) throw InputError("unknown claim '" + id + "'");
    }
  }
  ClaimContext ctx;
  if (!cfg.data.empty()) ctx.data_dir = cfg.data;
  ctx.samples = cfg.samples;
  bool ok = true;
  json rows = json::array();
  for (const auto& c : all_claims()) {
    if (!only.empty() && !only.count(c.id)) continue;
    std::cerr << "running " << c.id << "\n";
    auto r = run_claim(c, ctx);
    ok = ok && r.pass;
    if (cfg.format == Format::Structured) {
      rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds}, {"details", r.details}});
      continue;
    }
    std::printf("%s  %-18s %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str());
    for (const auto& d : r.details) std::printf("      %s\n", d.c_str());
  }
  if (cfg.format == Format::Structured)
    std::cout << json{{"verify-format", 1}, {"pass", ok}, {"claims", rows}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-free character hypothesis: character tables, codegrees and witness checks"};
  app.require_subcommand(1, 1);
  Config cfg;
  std::string format = "table";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table or structured")->check(CLI::IsMember({"table", "structured"}));
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", cfg.spec, "group spec, e.g. Alt(5), PSL2(7), named:M10, perm:deg=3;gens=(1 2 3)")->required();
    sub->add_option("--bound", cfg.bound, "largest group order to compute with")->check(CLI::PositiveNumber);
    add_format(sub);
  };

  auto* table = app.add_subcommand("table", "character table");
  add_spec(table);
  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  add_spec(classes);
  auto* check = app.add_subcommand("check", "square-free hypothesis verdict (exit 3 if it fails)");
  add_spec(check);
  auto* codegrees = app.add_subcommand("codegrees", "degree, codegree and gcd per character");
  add_spec(codegrees);

  auto* scan = app.add_subcommand("psl2-scan", "conditions for every H between PSL2(q) and its automorphism group");
  auto* q_opt = scan->add_option("--q", cfg.q, "a single prime power q > 3");
  scan->add_option("--q-range", cfg.q_range, "LO:HI")->excludes(q_opt);
  scan->add_flag("--delta-only", cfg.delta_only, "only configurations containing the diagonal automorphism");
  add_format(scan);

  auto* anw = app.add_subcommand("an-witness", "Alt(n) characters with non-square-free gcd");
  anw->add_option("--n", cfg.n, "n >= 8 (repeatable)")->required();
  add_format(anw);

  auto* vdata = app.add_subcommand("verify-data", "verify witness rows (exit 1 on any unconfirmed row)");
  vdata->add_option("--data", cfg.data, "witness file; defaults to the bundled tables");
  vdata->add_option("--samples", cfg.samples, "parameter points per family row")->check(CLI::PositiveNumber);
  add_format(vdata);

  auto* vpaper = app.add_subcommand("verify-paper", "run every claim check (exit 1 on any failure)");
  vpaper->add_option("--only", cfg.only, "comma-separated claim ids");
  vpaper->add_option("--data", cfg.data, "data directory; defaults to the bundled data");
  vpaper->add_option("--samples", cfg.samples, "parameter points per family row")->check(CLI::PositiveNumber);
  add_format(vpaper);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  cfg.format = format == "structured" ? Format::Structured : Format::Table;

  try {
    if (*table) return cmd_table(cfg);
    if (*classes) return cmd_classes(cfg);
    if (*check) return cmd_check(cfg);
    if (*codegrees) return cmd_codegrees(cfg);
    if (*scan) return cmd_psl2_scan(cfg);
    if (*anw) return cmd_an_witness(cfg);
    if (*vdata) return cmd_verify_data(cfg);
    if (*vpaper) return cmd_verify_paper(cfg);
  } catch (const DefectError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --bound)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
