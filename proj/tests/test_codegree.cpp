#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sqfree/codegree.hpp"
#include "sqfree/group_spec.hpp"

using namespace sqfree;

namespace {

CharacterTable table_of(const std::string& spec) {
  CharacterTableOptions opts;
  opts.spec_text = spec;
  return character_table(construct(spec), opts);
}

// |G : ker chi| / chi(1) with the kernel read off numerically.
std::uint64_t numeric_codegree(const CharacterTable& t, std::size_t row) {
  std::uint64_t k = 0;
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    auto z = oracle::evaluate(t.rows[row].values[c].coeffs, t.rows[row].values[c].e);
    if (std::abs(z - std::complex<double>(static_cast<double>(t.rows[row].degree), 0)) < 1e-6) k += t.classes->sizes[c];
  }
  return t.order / k / t.rows[row].degree;
}

}  // namespace

TEST(Codegree, Sym3) {
  auto t = table_of("Sym(3)");
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < t.rows.size(); ++i) c.push_back(codegree(t, i));
  EXPECT_EQ(c, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(kernel(t, 1).order, 3u);
}

TEST(Codegree, AgreesWithNumericKernel) {
  for (const char* spec : {"Sym(4)", "Sym(5)", "PGL2(7)", "named:M10", "prod(Sym(3),Alt(4))"}) {
    auto t = table_of(spec);
    for (std::size_t i = 0; i < t.rows.size(); ++i) EXPECT_EQ(codegree(t, i), numeric_codegree(t, i)) << spec << " row " << i;
  }
}

TEST(Codegree, SmallestSquarePrime) {
  EXPECT_EQ(smallest_square_prime(1), std::nullopt);
  EXPECT_EQ(smallest_square_prime(30), std::nullopt);
  EXPECT_EQ(smallest_square_prime(4), 2u);
  EXPECT_EQ(smallest_square_prime(2 * 9 * 25), 3u);
  EXPECT_EQ(smallest_square_prime(49 * 11), 7u);
}

TEST(Hypothesis, Alt8Witness) {
  auto v = square_free_hypothesis(table_of("Alt(8)"));
  EXPECT_FALSE(v.satisfies);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->degree, 20u);
  EXPECT_EQ(v.witness->codegree, 1008u);
  EXPECT_EQ(v.witness->gcd, 4u);
  EXPECT_EQ(v.witness->prime, 2u);
}

TEST(Hypothesis, SmallVerdicts) {
  for (const char* spec : {"Alt(5)", "Alt(6)", "Sym(5)", "Sym(6)", "named:M10", "named:PGL2_9", "PSL2(7)", "PSL2(8)",
                           "named:PGammaL2_8", "named:AutSz8"})
    EXPECT_TRUE(square_free_hypothesis(table_of(spec)).satisfies) << spec;
  for (const char* spec : {"Sym(7)", "named:AutA6"}) EXPECT_FALSE(square_free_hypothesis(table_of(spec)).satisfies) << spec;
}

TEST(Hypothesis, DirectProductOfSimpleGroupsFails) {
  // degree 3*4 = 12 and codegree 20*15 = 300 share 4 in Alt(5) x Alt(5)
  auto t = table_of("prod(Alt(5),Alt(5))");
  EXPECT_EQ(t.rows.size(), 25u);
  EXPECT_FALSE(square_free_hypothesis(t).satisfies);
  // degrees and codegrees multiply over the factors
  auto a = table_of("Alt(5)");
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> got, want;
  for (std::size_t i = 0; i < t.rows.size(); ++i) got.insert({t.rows[i].degree, codegree(t, i)});
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.rows.size(); ++j)
      want.insert({a.rows[i].degree * a.rows[j].degree, codegree(a, i) * codegree(a, j)});
  EXPECT_EQ(got, want);
}

TEST(Report, RowsAndJson) {
  auto r = gcd_report(table_of("Alt(5)"));
  ASSERT_EQ(r.rows.size(), 5u);
  EXPECT_EQ(r.rows[0].codegree, 1u);
  EXPECT_EQ(r.rows[4].degree, 5u);
  EXPECT_EQ(r.rows[4].codegree, 12u);
  EXPECT_EQ(r.rows[4].gcd, 1u);
  auto j = report_json(r);
  EXPECT_EQ(j["report-format"], 1);
  EXPECT_EQ(j["rows"].size(), 5u);
  auto reparsed = nlohmann::json::parse(j.dump());
  EXPECT_EQ(reparsed, j);
  EXPECT_NE(format_report(r).find("offendingPrime"), std::string::npos);
}

TEST(Clifford, DivisibilityOverNormalSubgroups) {
  struct Pair {
    const char* g;
    const char* n;
  };
  for (auto [gs, ns] : {Pair{"Sym(5)", "Alt(5)"}, Pair{"Sym(6)", "Alt(6)"}, Pair{"named:M10", "named:PSL2_9"}}) {
    auto g = construct(gs);
    auto tG = table_of(gs);
    PermutationGroup n = derived_subgroup(g);
    auto tN = character_table(n);
    ASSERT_EQ(tN.order, tG.order / 2) << gs;
    auto check = clifford_divisibility_check(g, n, tG, tN);
    EXPECT_TRUE(check.ok) << gs << " over " << ns << ": " << check.message;
  }
}

TEST(Clifford, RejectsNonNormal) {
  auto g = construct("Sym(4)");
  PermutationGroup h(4, {parse_cycles("(1 2)", 4)});
  auto tG = character_table(g);
  auto tH = character_table(h);
  EXPECT_THROW(clifford_divisibility_check(g, h, tG, tH), NotNormalError);
}

TEST(Quotient, CodegreeInvariantUnderInflation) {
  struct Case {
    const char* g;
    std::vector<const char*> n_gens;
    std::uint64_t quotient_order;
  };
  const std::vector<Case> cases = {
      {"Sym(4)", {"(1 2)(3 4)", "(1 3)(2 4)"}, 6},
      {"Sym(4)", {"(1 2 3)", "(1 2)(3 4)"}, 2},
      {"Sym(5)", {"(1 2 3)", "(1 2 3 4 5)"}, 2},
      {"prod(Alt(5),Sym(3))", {"(1 2 3)", "(1 2 3 4 5)"}, 6},
  };
  for (const auto& c : cases) {
    auto g = construct(c.g);
    std::vector<Permutation> gens;
    for (auto s : c.n_gens) gens.push_back(parse_cycles(s, g.degree()));
    PermutationGroup n(g.degree(), gens);
    QuotientGroup q(g, n);
    EXPECT_EQ(q.group()->order(), c.quotient_order) << c.g;
    auto tG = character_table(g);
    auto tQ = character_table(q.group());
    auto check = quotient_codegree_check(n, tG, q, tQ);
    EXPECT_TRUE(check.ok) << c.g << ": " << check.message;
    EXPECT_EQ(check.inflated, tQ.rows.size());
  }
}
