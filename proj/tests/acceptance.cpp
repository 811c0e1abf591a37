// One line per acceptance criterion. Exits nonzero only when a criterion
// fails that is not listed below as out of reach with the data as given.

#include <cstdio>
#include <map>
#include <string>

#include "sqfree/sqfree.hpp"

using namespace sqfree;

int main() {
  const std::map<std::string, std::string> known_gaps = {
      {"lie-tables",
       "printed rows for G2(3), G2(4), B_n, C_n, 2D4, 2D_n and 2G2 do not give integral dividing degrees "
       "with the stated factor"},
      {"fourth-power-free", "|2B2(8)| = 2^6·5·7·13 is not fourth-power-free"},
  };
  ClaimContext ctx;
  int unexpected = 0, index = 0;
  for (const auto& c : all_claims()) {
    ++index;
    auto r = run_claim(c, ctx);
    auto gap = known_gaps.find(r.id);
    std::printf("%s %2d %-18s %7.2fs  %s", r.pass ? "PASS" : "FAIL", index, r.id.c_str(), r.seconds, r.title.c_str());
    if (!r.pass && gap != known_gaps.end()) std::printf("  [known: %s]", gap->second.c_str());
    if (r.pass && gap != known_gaps.end()) std::printf("  [listed as a known gap but passed]");
    std::printf("\n");
    for (const auto& d : r.details) std::printf("       %s\n", d.c_str());
    if (!r.pass && gap == known_gaps.end()) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
