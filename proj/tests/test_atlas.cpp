#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "sqfree/expr.hpp"
#include "sqfree/lie.hpp"
#include "sqfree/simple_groups.hpp"
#include "sqfree/witness.hpp"

using namespace sqfree;

namespace {

const std::string kData = SQFREE_DATA_DIR;

BigInt eval(const std::string& text, std::optional<long> q = std::nullopt, std::optional<long> n = std::nullopt) {
  Substitution s;
  if (q) s.q = BigInt(*q);
  if (n) s.n = BigInt(*n);
  return evaluate_integer(*parse_degree_expr(text), s);
}

BigInt from_factors(const std::map<unsigned, unsigned>& f) {
  BigInt r = 1;
  for (auto [p, e] : f) r *= big_pow(BigInt(p), e);
  return r;
}

}  // namespace

TEST(Cyclotomic, Values) {
  EXPECT_EQ(cyclotomic_poly_eval(1, 9), 8);
  EXPECT_EQ(cyclotomic_poly_eval(12, 2), 13);
  EXPECT_EQ(cyclotomic_poly_eval(2, 2), 3);
  EXPECT_EQ(cyclotomic_poly_eval(4, 2), 5);
  EXPECT_EQ(cyclotomic_poly_eval(6, 2), 3);
  EXPECT_EQ(cyclotomic_poly_eval(8, 2), 17);
  EXPECT_EQ(cyclotomic_poly_eval(30, 3), 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 + 3 * 3 * 3 * 3 * 3 * 3 * 3 - 3 * 3 * 3 * 3 * 3 -
                                             3 * 3 * 3 * 3 - 3 * 3 * 3 + 3 + 1);
  EXPECT_THROW(cyclotomic_poly_eval(0, 2), InputError);
  EXPECT_THROW(cyclotomic_poly_eval(3, 1), InputError);
}

TEST(Cyclotomic, ProductOverDivisors) {
  for (std::uint64_t n = 1; n <= 36; ++n)
    for (long q : {2, 3, 4, 5, 7, 9, 16}) {
      BigInt prod = 1;
      for (auto d : divisors_u64(n)) prod *= cyclotomic_poly_eval(d, q);
      EXPECT_EQ(prod, big_pow(BigInt(q), static_cast<unsigned>(n)) - 1) << n << " " << q;
    }
}

TEST(Expr, Constants) {
  EXPECT_EQ(eval("2^4"), 16);
  EXPECT_EQ(eval("2^2·11"), 44);
  EXPECT_EQ(eval("2^3*5*7"), 280);
  EXPECT_EQ(eval("2^12·3^3·5^2·7·13"), 4096 * 27 * 25 * 7 * 13);
  EXPECT_EQ(eval("2^3^2"), 512);
  EXPECT_EQ(eval("-2^2"), -4);
  EXPECT_EQ(eval("(-2)^3"), -8);
  EXPECT_EQ(eval("7 - 2 - 1"), 4);
  EXPECT_EQ(eval("12/3/2"), 2);
}

TEST(Expr, Substitution) {
  EXPECT_EQ(eval("q^3(q^2+q+1)", 4), 1344);
  EXPECT_EQ(eval("q^4 phi2^3 phi4^2 phi6^2 phi8 phi12", 2), 16 * 27 * 25 * 9 * 17 * 13);
  EXPECT_EQ(eval("1/2 q^3(q+1)^4(q^2-q+1)", 5), BigInt(125) * 1296 * 21 / 2);
  EXPECT_EQ(eval("(q-1)(q/2)^(1/2)", 32), 31 * 4);
  EXPECT_EQ(eval("(q/3)^(1/2) phi1 phi2 phi4", 243), BigInt(9) * 242 * 244 * (243 * 243 + 1));
  EXPECT_EQ(eval("q^(n-1)-(-1)^(n-1)", 3, 4), 27 + 1);
  EXPECT_EQ(eval("q^-1*q^2", 7), 7);
}

TEST(Expr, Errors) {
  EXPECT_THROW(parse_degree_expr("2^"), ParseError);
  EXPECT_THROW(parse_degree_expr("(q+1"), ParseError);
  EXPECT_THROW(parse_degree_expr("q $ 2"), ParseError);
  EXPECT_THROW(parse_degree_expr("x+1"), ParseError);
  EXPECT_THROW(parse_degree_expr("qq"), ParseError);
  try {
    parse_degree_expr("q^2 + ]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(eval("q/2", 3), NonIntegralError);
  EXPECT_THROW(eval("q^(1/2)", 8), NonIntegralError);
  EXPECT_THROW(eval("1/(q-2)", 2), NonIntegralError);
  EXPECT_THROW(eval("q+1"), InputError);
}

TEST(Expr, PrintParseRoundTrip) {
  for (const char* text :
       {"2^4", "q^3(q^2+q+1)", "1/2 q^3(q+1)^4(q^2-q+1)", "(q-1)(q/2)^(1/2)", "q^3(q^(n-1)-(-1)^(n-1))(q^n-(-1)^n)/((q+1)(q^2-1))",
        "-(q-1)", "--q", "2-(3-4)", "(2^3)^2", "2^-1", "12/(3/2)", "q^4 phi2^3 phi4^2 phi6^2 phi8 phi12",
        "q^6(q^(n-4)+1)(q^(2(n-3))-1)(q^(2(n-1))-1)(q^n-1)/((q^2-1)^2(q^4-1))"}) {
    auto e = parse_degree_expr(text);
    auto printed = to_string(*e);
    auto again = parse_degree_expr(printed);
    EXPECT_TRUE(*e == *again) << text << " printed as " << printed;
    EXPECT_EQ(to_string(*again), printed);
  }
}

TEST(LieOrders, KnownValues) {
  EXPECT_EQ(lie_group_order("A", 1, 5), 60);
  EXPECT_EQ(lie_group_order("A", 2, 3), 5616);
  EXPECT_EQ(lie_group_order("A", 2, 4), 20160);
  EXPECT_EQ(lie_group_order("2B2", 0, 8), 29120);
  EXPECT_EQ(lie_group_order("B", 2, 3), 25920);
  EXPECT_EQ(lie_group_order("C", 3, 2), 1451520);
  EXPECT_EQ(lie_group_order("D", 4, 2), 174182400);
  EXPECT_EQ(lie_group_order("2A", 2, 3), 6048);
  EXPECT_EQ(lie_group_order("2A", 3, 2), 25920);
  EXPECT_EQ(lie_group_order("G2", 0, 3), 4245696);
  EXPECT_EQ(lie_group_order("3D4", 0, 2), 211341312);
  EXPECT_EQ(lie_group_order("2F4'", 0, 2), 17971200);
  EXPECT_EQ(lie_group_order("2G2", 0, 27), 10073444472);
  EXPECT_EQ(lie_group_order("2D", 4, 2), 197406720);
  EXPECT_EQ(lie_group_order("F4", 0, 2), BigInt("3311126603366400"));
  EXPECT_EQ(lie_group_order("E6", 0, 2), BigInt("214841575522005575270400"));
  EXPECT_EQ(lie_group_order("2E6", 0, 2), BigInt("76532479683774853939200"));
  EXPECT_THROW(lie_group_order("A", 0, 5), InputError);
  EXPECT_THROW(lie_group_order("A", 2, 6), InputError);
  EXPECT_THROW(lie_group_order("2B2", 0, 4), InputError);
  EXPECT_THROW(lie_group_order("H4", 0, 2), InputError);
}

TEST(SimpleGroups, FourthPowerFreeOrders) {
  EXPECT_EQ(simple_group_order("J1").order, 175560);
  EXPECT_TRUE(fourth_power_free(simple_group_order("J1").order));
  for (const char* s : {"Alt(5)", "Alt(6)", "Alt(7)"}) EXPECT_TRUE(fourth_power_free(simple_group_order(s).order)) << s;
  EXPECT_FALSE(fourth_power_free(simple_group_order("Alt(8)").order));
  // 29120 = 2^6 * 5 * 7 * 13; Sz(8) needs its character table, not this shortcut
  EXPECT_FALSE(fourth_power_free(simple_group_order("Sz(8)").order));
  EXPECT_EQ(simple_group_order("2B2(8)").order, 29120);
  EXPECT_EQ(simple_group_order("Sz(8)").order, 29120);
  EXPECT_EQ(simple_group_order("A_2(3)").order, 5616);
  EXPECT_EQ(simple_group_order("2F4(2)'").order, 17971200);
  EXPECT_THROW(simple_group_order("Q(5)"), InputError);
  EXPECT_THROW(simple_group_order("Alt(4)"), InputError);
}

TEST(Witness, LoaderBasics) {
  std::istringstream empty("");
  EXPECT_TRUE(parse_witnesses(empty).empty());
  std::istringstream comments("# nothing here\n\n");
  EXPECT_TRUE(parse_witnesses(comments).empty());

  std::istringstream no_header("M11\tsporadic\t7920\t-\t2^2*11\t4\n");
  EXPECT_THROW(parse_witnesses(no_header), ParseError);

  std::istringstream bad_expr("witness-format: 1\n# c\nM11\tsporadic\t7920\t-\t2^2*11\t4\nM12\tsporadic\t95040\t-\t2^(4\t4\n");
  try {
    parse_witnesses(bad_expr);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.unit(), ParseError::Unit::Line);
    EXPECT_EQ(e.position(), 4u);
  }

  std::istringstream bad_fields("witness-format: 1\nM11\tsporadic\t7920\n");
  EXPECT_THROW(parse_witnesses(bad_fields), ParseError);
  std::istringstream bad_constraint("witness-format: 1\nX\tlieFamily\tlie:A,2\tq<4\tq\t4\n");
  EXPECT_THROW(parse_witnesses(bad_constraint), ParseError);
  std::istringstream bad_family("witness-format: 1\nX\tlieFamily\tlie:Z,2\t-\tq\t4\n");
  EXPECT_THROW(parse_witnesses(bad_family), ParseError);
}

TEST(Witness, SporadicTable) {
  auto rows = load_witnesses(kData + "/witness/sporadic.tsv");
  ASSERT_EQ(rows.size(), 25u);
  // orders from their prime factorizations
  const std::map<std::string, std::map<unsigned, unsigned>> factors = {
      {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
      {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
      {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
      {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
      {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
      {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
      {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
      {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
      {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
      {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {"ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
      {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
      {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
      {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
      {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
      {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
      {"J4", {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
      {"Fi24'", {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
      {"B", {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}},
      {"M",
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1},
        {59, 1}, {71, 1}}},
  };
  for (const auto& r : rows) {
    ASSERT_TRUE(factors.count(r.name)) << r.name;
    EXPECT_EQ(*r.order, from_factors(factors.at(r.name))) << r.name;
    auto o = verify_witness(r, {});
    EXPECT_EQ(o.status, WitnessStatus::Confirmed) << r.name << " " << o.note;
    EXPECT_TRUE(o.divides && o.factor_holds);
  }
  auto m11 = verify_witness(rows.front(), {});
  EXPECT_EQ(m11.degree, 44);
  EXPECT_EQ(m11.codegree, 180);
  EXPECT_EQ(m11.gcd, 4);
}

TEST(Witness, LieFixedRowsAgreeWithOrderFormulas) {
  auto rows = load_witnesses(kData + "/witness/lie.tsv");
  const std::map<std::string, std::pair<std::string, std::pair<unsigned, std::uint64_t>>> formula = {
      {"A2(3)", {"A", {2, 3}}},   {"A2(4)", {"A", {2, 4}}},   {"D4(2)", {"D", {4, 2}}},
      {"D4(3)", {"D", {4, 3}}},   {"D5(2)", {"D", {5, 2}}},   {"G2(3)", {"G2", {0, 3}}},
      {"G2(4)", {"G2", {0, 4}}},  {"2F4(2)'", {"2F4'", {0, 2}}}, {"2G2(27)", {"2G2", {0, 27}}},
  };
  std::size_t fixed = 0;
  for (const auto& r : rows) {
    if (r.kind != WitnessKind::LieFixed) continue;
    ++fixed;
    const auto& [tag, nq] = formula.at(r.name);
    EXPECT_EQ(*r.order, lie_group_order(tag, nq.first, nq.second)) << r.name;
  }
  EXPECT_EQ(fixed, 9u);
}

TEST(Witness, FixedExamples) {
  auto rows = load_witnesses(kData + "/witness/lie.tsv");
  auto find = [&](const std::string& name) {
    for (const auto& r : rows)
      if (r.name == name) return r;
    throw std::runtime_error("missing " + name);
  };
  auto a24 = verify_witness(find("A2(4)"), {});
  EXPECT_EQ(a24.degree, 20);
  EXPECT_EQ(a24.order, 20160);
  EXPECT_EQ(a24.codegree, 1008);
  EXPECT_EQ(a24.status, WitnessStatus::Confirmed);
  // the printed G2(3) degree is the whole group order, so the codegree is 1
  auto g23 = verify_witness(find("G2(3)"), {});
  EXPECT_TRUE(g23.divides);
  EXPECT_EQ(g23.codegree, 1);
  EXPECT_EQ(g23.status, WitnessStatus::Discrepancy);
}

TEST(Witness, SamplingRespectsConstraints) {
  auto rows = load_witnesses(kData + "/witness/lie.tsv");
  for (const auto& r : rows) {
    auto pts = sample_points(r, 3);
    if (r.kind != WitnessKind::LieFamily) {
      EXPECT_EQ(pts.size(), 1u);
      continue;
    }
    ASSERT_EQ(pts.size(), 3u) << r.name;
    for (const auto& p : pts) EXPECT_TRUE(constraint_violations(r, p).empty()) << r.name;
  }
  for (const auto& r : rows) {
    if (r.name != "2B2(q)") continue;
    auto pts = sample_points(r, 3);
    EXPECT_EQ(pts[0].q, 32u);
    EXPECT_EQ(pts[1].q, 128u);
    EXPECT_EQ(pts[2].q, 512u);
  }
}

TEST(Witness, ConstraintViolationThrows) {
  auto rows = load_witnesses(kData + "/witness/lie.tsv");
  for (const auto& r : rows) {
    if (r.name != "A2(q) q%4==1") continue;
    EXPECT_THROW(verify_witness(r, {7, std::nullopt}), ConstraintError);
    EXPECT_THROW(verify_witness(r, {6, std::nullopt}), ConstraintError);
    EXPECT_NO_THROW(verify_witness(r, {9, std::nullopt}));
  }
}

TEST(Witness, StatusInvariant) {
  auto rows = load_witnesses(kData + "/witness/lie.tsv");
  auto outcomes = verify_all(rows, 3);
  std::size_t confirmed = 0;
  for (const auto& o : outcomes) {
    if (o.status == WitnessStatus::Confirmed) {
      ++confirmed;
      EXPECT_TRUE(o.divides && o.factor_holds) << o.name;
    }
    if (o.status == WitnessStatus::SkippedNonintegral) EXPECT_FALSE(o.degree);
  }
  EXPECT_GT(confirmed, 80u);
  auto j = outcomes_json(outcomes);
  EXPECT_EQ(j["verification-format"], 1);
  EXPECT_EQ(j["rows"].size(), outcomes.size());
}
