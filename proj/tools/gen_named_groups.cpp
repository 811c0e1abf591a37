// Writes the bundled generator files in data/groups/.
//
//   gen_named_groups <output-dir>
//
// Every group is built from the library's own field and projective-line
// code, so point labels agree with PSL2(q)/PGL2(q) from the spec grammar.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sqfree/group_spec.hpp"

using namespace sqfree;

namespace {

std::string modulus_text(const FiniteField& F) {
  std::string s = "x^" + std::to_string(F.degree());
  const auto& m = F.modulus();
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    s += "+";
    if (m[i] != 1 || i == 0) s += std::to_string(m[i]);
    if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

struct Entry {
  std::string id;
  std::string name;
  std::vector<std::string> provenance;
  std::vector<Permutation> gens;
};

void write(const std::filesystem::path& dir, const Entry& e) {
  PermutationGroup g(e.gens.front().degree(), e.gens);
  std::ofstream out(dir / (e.id + ".gens"));
  out << "# " << e.name << "\n";
  for (const auto& line : e.provenance) out << "# " << line << "\n";
  out << "# Generated by tools/gen_named_groups.cpp; order checked by stabilizer chain.\n";
  out << "group-format: 1\n";
  out << "name: " << e.name << "\n";
  out << "degree: " << g.degree() << "\n";
  out << "order: " << to_string(g.order()) << "\n";
  for (const auto& x : e.gens) out << "gen: " << to_cycle_string(x) << "\n";
  std::cerr << e.id << ": order " << to_string(g.order()) << "\n";
}

std::vector<Entry> line_groups() {
  ProjectiveLine l9(9);
  const std::vector<std::string> line9 = {
      "Natural action on the projective line over GF(9) = GF(3)[x]/(" + modulus_text(l9.field) + "), points 1..9 are",
      "field elements by base-3 code plus one, point 10 is infinity. S = PSL2(9) = <x+1, w^2 x, -1/x>,",
      "delta: x -> w x, phi: x -> x^3, w = x the primitive element."};
  auto s9 = l9.psl_generators();
  auto with = [](std::vector<Permutation> g, std::vector<Permutation> extra) {
    g.insert(g.end(), extra.begin(), extra.end());
    return g;
  };
  ProjectiveLine l8(8);
  std::vector<std::string> line8 = {
      "Natural action on the projective line over GF(8) = GF(2)[x]/(" + modulus_text(l8.field) + "), points 1..8 are",
      "field elements by base-2 code plus one, point 9 is infinity. S = PSL2(8), phi: x -> x^2."};
  return {
      {"PSL2_9", "PSL2(9) = Alt(6)", line9, s9},
      {"S6", "PSL2(9).<phi> = Sym(6)", line9, with(s9, {l9.frobenius})},
      {"M10", "PSL2(9).<delta phi> = M10", line9, with(s9, {l9.diagonal * l9.frobenius})},
      {"PGL2_9", "PSL2(9).<delta> = PGL2(9)", line9, with(s9, {l9.diagonal})},
      {"AutA6", "PSL2(9).<delta, phi> = Aut(Alt(6)) = PGammaL2(9)", line9, with(s9, {l9.diagonal, l9.frobenius})},
      {"PGammaL2_8", "PSL2(8).<phi> = PGammaL2(8) = Aut(PSL2(8))", line8, with(l8.psl_generators(), {l8.frobenius})},
  };
}

// Sz(8) on the 65 points of its ovoid in PG(3, 8).
std::vector<Entry> suzuki_groups() {
  const FiniteField F(2, 3);
  auto sigma = [&](std::uint32_t x) { return F.pow(x, 4); };
  auto z = [&](std::uint32_t x, std::uint32_t y) {
    return F.add(F.add(F.mul(x, y), F.mul(F.mul(x, x), sigma(x))), sigma(y));
  };
  using Pt = std::optional<std::pair<std::uint32_t, std::uint32_t>>;  // nullopt = infinity
  auto label = [](const Pt& p) -> Point { return p ? 1 + p->first * 8 + p->second : 0; };
  auto build = [&](const std::function<Pt(const Pt&)>& f) {
    std::vector<Point> im(65);
    im[0] = label(f(std::nullopt));
    for (std::uint32_t x = 0; x < 8; ++x)
      for (std::uint32_t y = 0; y < 8; ++y) im[1 + x * 8 + y] = label(f(Pt{{x, y}}));
    return Permutation::from_images(std::move(im));
  };
  auto w = build([&](const Pt& p) -> Pt {
    if (!p) return Pt{{0, 0}};
    auto [x, y] = *p;
    if (x == 0 && y == 0) return std::nullopt;
    auto iz = F.inv(z(x, y));
    return Pt{{F.mul(y, iz), F.mul(x, iz)}};
  });
  // (x, y) -> (x + 1, y + x), then (x, y) -> (t x, t^5 y)
  const std::uint32_t t = 2;
  auto td = build([&](const Pt& p) -> Pt {
    if (!p) return p;
    auto [x, y] = *p;
    std::uint32_t x1 = F.add(x, 1), y1 = F.add(y, F.mul(sigma(1), x));
    return Pt{{F.mul(t, x1), F.mul(F.mul(t, sigma(t)), y1)}};
  });
  auto frob = build([&](const Pt& p) -> Pt {
    if (!p) return p;
    return Pt{{F.mul(p->first, p->first), F.mul(p->second, p->second)}};
  });
  std::vector<std::string> prov = {
      "Suzuki ovoid in PG(3,8) over GF(8) = GF(2)[t]/(t^3+t+1), sigma(x) = x^4.",
      "Point 1 is infinity, point 2 + 8x + y is the affine point (x, y) (field codes base 2),",
      "with z = xy + x^(sigma+2) + y^sigma. Generators: the involution swapping infinity and (0,0),",
      "(x, y) -> (y/z, x/z); and the translation (x, y) -> (x+1, y+x) followed by the torus",
      "element (x, y) -> (t x, t^(sigma+1) y)."};
  auto prov_aut = prov;
  prov_aut.push_back("Aut(Sz(8)) adds the field automorphism (x, y) -> (x^2, y^2).");
  return {{"Sz8", "Sz(8) = 2B2(8)", prov, {w, td}}, {"AutSz8", "Sz(8).3 = Aut(Sz(8))", prov_aut, {w, td, frob}}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_named_groups <output-dir>\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& e : line_groups()) write(dir, e);
  for (const auto& e : suzuki_groups()) write(dir, e);
}
