#include "hypersurf/corpus.hpp"

#include <vector>

namespace hypersurf {

namespace {

using Mode = VarConvention::Mode;

CorpusEntry entry(std::string name, std::string text, std::size_t dim, std::string description,
                  ExpectedFacts facts, Mode vars = Mode::Named) {
  return {std::move(name), std::move(text), dim, vars, std::move(description), std::move(facts)};
}

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back(entry("unit_sphere_3", "1 - x^2 - y^2 - z^2", 3, "unit 2-sphere, normal into the ball",
                    {"Sphere", CmcVerdict::CmcCertified, q(1), "Regular", "NegativeSemidefinite"}));
  c.push_back(entry("unit_sphere_4", "1 - x^2 - y^2 - z^2 - w^2", 4, "unit 3-sphere in R^4",
                    {"Sphere", CmcVerdict::CmcCertified, q(1), "Regular", "NegativeSemidefinite"}));
  c.push_back(entry("sphere_radius_2", "4 - x^2 - y^2 - z^2", 3, "2-sphere of radius 2",
                    {"Sphere", CmcVerdict::CmcCertified, q(1, 2), "Regular", "NegativeSemidefinite"}));
  c.push_back(entry("cylinder_s1xr", "1 - x^2 - y^2", 3, "round cylinder S^1 x R in R^3",
                    {"RoundCylinder", CmcVerdict::CmcCertified, q(1, 2), "Regular", "NegativeSemidefinite"}));
  c.push_back(entry("cylinder_s1xr2", "1 - x^2 - y^2", 4, "round cylinder S^1 x R^2 in R^4",
                    {"RoundCylinder", CmcVerdict::CmcCertified, q(1, 3), "Regular", "NegativeSemidefinite"}));
  c.push_back(entry("cylinder_s2xr", "1 - x^2 - y^2 - z^2", 4, "round cylinder S^2 x R in R^4",
                    {"RoundCylinder", CmcVerdict::CmcCertified, q(2, 3), "Regular", "NegativeSemidefinite"}));
  c.push_back(entry("hyperplane", "z", 3, "coordinate plane z = 0",
                    {"Hyperplane", CmcVerdict::Minimal, q(0), "Regular", "Indefinite"}));
  c.push_back(entry("paraboloid", "z - x^2 - y^2", 3, "paraboloid of revolution",
                    {"Other", CmcVerdict::NotCmc, std::nullopt, "Regular", "NegativeSemidefinite"}));
  c.push_back(entry("cone", "x^2 + y^2 - z^2", 3, "quadratic cone, singular at the origin",
                    {"Other", CmcVerdict::NotCmc, std::nullopt, "Singular", "Indefinite"}));
  c.push_back(entry("saddle", "x^2 - y^2 - 1", 3, "hyperbolic cylinder",
                    {"Other", CmcVerdict::NotCmc, std::nullopt, "Regular", "Indefinite"}));
  c.push_back(entry("two_spheres", "(x^2 + y^2 + z^2 - 1)*((x - 3)^2 + y^2 + z^2 - 1)", 3,
                    "union of two disjoint unit spheres; reducible with definite leading form",
                    {std::nullopt, CmcVerdict::CmcCertified, q(-1), std::nullopt, "PositiveSemidefinite"}));
  c.push_back(entry("empty_variety", "x^2 + 1", 3, "no real points",
                    {"EmptyVariety", CmcVerdict::Inconclusive, std::nullopt, "EmptyVariety", "PositiveSemidefinite"}));
  return c;
}

}  // namespace

std::span<const CorpusEntry> builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
  for (const auto& e : builtin_corpus()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace hypersurf
