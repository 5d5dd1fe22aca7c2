#include "hypcox/search.hpp"

#include <gtest/gtest.h>

using namespace hypcox;

namespace {

CoxeterSymbol fixture(const std::string& name) { return load_symbol(std::string(HYPCOX_FIXTURES) + "/" + name); }

// Regular actions of B3 through involution triples with product orders 4, 6, 2:
// a torsion-free degree-48 action of the (2,4,6) triangle group built without search.
std::vector<PermutationAction> quotient_witnesses(const CoxeterSymbol& tri) {
  ClassOracle b3 = ClassOracle::build(type_generators(IsoType::parse("B3")));
  std::vector<GroupElement> involutions;
  for (std::size_t i = 1; i < b3.group_size(); ++i)
    if (element_order(b3.element(i)) == 2) involutions.push_back(b3.element(i));
  std::vector<PermutationAction> out;
  for (const auto& a : involutions)
    for (const auto& b : involutions) {
      if (element_order(a * b) != 4) continue;
      for (const auto& c : involutions) {
        if (element_order(b * c) != 6 || element_order(a * c) != 2) continue;
        auto act = regular_action(tri, {a, b, c});
        if (act.degree() == 48) out.push_back(std::move(act));
      }
    }
  return out;
}

}  // namespace

TEST(Search, QuotientWitness) {
  CoxeterSymbol tri = fixture("triangle_2_4_6.cox");
  auto witnesses = quotient_witnesses(tri);
  ASSERT_FALSE(witnesses.empty());
  EXPECT_EQ(witnesses.size(), 96u);
  auto cert = certify(tri, witnesses[0], 2);
  EXPECT_TRUE(cert.valid) << cert.str();
  EXPECT_EQ(*cert.chi, -2);
  EXPECT_EQ(cert.volume->str(), "4*pi");
}

TEST(Search, FiniteGroupGivesRegular) {
  CoxeterSymbol b3 = fixture("b3.cox");
  SearchConfig cfg;
  cfg.degree = 48;
  auto r = search_torsion_free(b3, cfg);
  ASSERT_EQ(r.solutions.size(), 1u);
  const auto& a = r.solutions[0];
  EXPECT_TRUE(verify_action(a).ok);
  EXPECT_TRUE(is_transitive(a));
  EXPECT_TRUE(is_torsion_free(a, inventory(b3)).torsion_free);
  // regular: only the identity word fixes a point
  ClassOracle g = ClassOracle::build(type_generators(IsoType::parse("B3")));
  EXPECT_EQ(g.group_size(), 48u);

  cfg.degree = 24;
  auto none = search_torsion_free(b3, cfg);
  EXPECT_TRUE(none.solutions.empty());
  EXPECT_TRUE(none.exhausted);
  EXPECT_TRUE(none.degree_gate);
}

TEST(Search, DegreeGate) {
  CoxeterSymbol t237 = fixture("triangle_2_3_7.cox");
  SearchConfig cfg;
  cfg.degree = 83;
  auto r = search_torsion_free(t237, cfg);
  EXPECT_TRUE(r.exhausted);
  EXPECT_TRUE(r.degree_gate);
  EXPECT_EQ(r.nodes, 0);
}

TEST(Search, Triangle246) {
  CoxeterSymbol tri = fixture("triangle_2_4_6.cox");
  SearchConfig cfg;
  cfg.degree = 48;
  cfg.max_seconds = 600;
  auto r = search_torsion_free(tri, cfg);
  ASSERT_EQ(r.solutions.size(), 1u) << "nodes " << r.nodes;
  auto cert = certify(tri, r.solutions[0], 2);
  EXPECT_TRUE(cert.valid) << cert.str();
  EXPECT_EQ(*cert.chi, -2);
  EXPECT_EQ(cert.volume->str(), "4*pi");

  auto again = search_torsion_free(tri, cfg);
  EXPECT_EQ(again.solutions[0].gens, r.solutions[0].gens);
  EXPECT_EQ(again.nodes, r.nodes);
}

TEST(Search, OrientableAndBudget) {
  CoxeterSymbol tri = fixture("triangle_2_4_6.cox");
  SearchConfig cfg;
  cfg.degree = 48;
  cfg.require_orientable = true;
  auto r = search_torsion_free(tri, cfg);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_TRUE(is_orientable(r.solutions[0]).orientable);
  EXPECT_TRUE(certify(tri, r.solutions[0], 2).valid);

  cfg.require_orientable = false;
  cfg.max_nodes = 3;
  auto cut = search_torsion_free(tri, cfg);
  EXPECT_TRUE(cut.budget_hit);
  EXPECT_FALSE(cut.exhausted);
}
