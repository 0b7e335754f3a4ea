#include "adjoint/contact.hpp"

#include <gtest/gtest.h>

using namespace adjoint;

namespace {
ContactGrading grading(const char* t) { return ContactGrading(CartanType::parse(t)); }
}  // namespace

TEST(ContactGrading, HalfDimensionsAndLevi) {
  struct Row {
    const char* type;
    int n;
    const char* levi;
    int torus;
  };
  for (auto r : {Row{"A3", 2, "A1", 2}, Row{"A4", 3, "A2", 2}, Row{"B3", 3, "A1+A1", 1}, Row{"C4", 3, "C3", 1},
                 Row{"D4", 4, "A1+A1+A1", 1}, Row{"D5", 6, "A1+A3", 1}, Row{"E6", 10, "A5", 1},
                 Row{"E7", 16, "D6", 1}, Row{"E8", 28, "E7", 1}, Row{"F4", 7, "C3", 1}, Row{"G2", 2, "A1", 1}}) {
    auto g = grading(r.type);
    EXPECT_EQ(g.n(), r.n) << r.type;
    EXPECT_EQ(g.levi_name(), r.levi) << r.type;
    EXPECT_EQ(g.torus_rank(), r.torus) << r.type;
    EXPECT_EQ(g.roots_of_degree(-1).size(), static_cast<size_t>(2 * r.n));
    EXPECT_EQ(g.roots_of_degree(2).size(), 1u);
    EXPECT_EQ(g.root_degree(g.gamma_root()), 2);
  }
}

TEST(ContactGrading, Rejections) {
  EXPECT_THROW(grading("A1"), PreconditionError);
  EXPECT_THROW(database_entry(grading("A3")), PreconditionError);
  EXPECT_THROW(database_entry(grading("C4")), PreconditionError);
}

TEST(ContactGrading, MinusOneHighestWeights) {
  EXPECT_EQ(grading("G2").g_minus1_highest_weights(), (std::vector<Weight>{{3}}));
  EXPECT_EQ(grading("E7").g_minus1_highest_weights().size(), 1u);
  EXPECT_EQ(grading("A3").g_minus1_highest_weights().size(), 2u);
  // g_-1 restricted weights come in +/- pairs.
  for (auto t : {"B3", "D5", "F4", "E6"}) {
    auto w = grading(t).g_minus1_weights();
    auto neg = w;
    for (auto& v : neg)
      for (auto& x : v) x = -x;
    std::sort(neg.begin(), neg.end());
    EXPECT_EQ(w, neg) << t;
  }
}

TEST(ContactGrading, DatabaseEntriesMatchPublishedFixtures) {
  auto e6 = database_entry(grading("E6"));
  EXPECT_EQ(e6.a_node, 1);
  EXPECT_EQ(e6.h_circ, (Vec{5, 0, 8, 9, 8, 5}));
  EXPECT_EQ(e6.minus_w_circ, (std::vector<int>{5, 1, 4, 3, 2, 0}));
  auto e7 = database_entry(grading("E7"));
  EXPECT_EQ(e7.a_node, 0);
  EXPECT_EQ(e7.h_circ, (Vec{0, 15, 15, 28, 24, 18, 10}));
  EXPECT_EQ(e7.minus_w_circ, (std::vector<int>{0, 1, 2, 3, 4, 5, 6}));
  auto e8 = database_entry(grading("E8"));
  EXPECT_EQ(e8.a_node, 7);
  EXPECT_EQ(e8.h_circ, (Vec{34, 49, 66, 96, 75, 52, 27, 0}));
  EXPECT_EQ(e8.minus_w_circ, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(e8.n, 28);
  EXPECT_EQ(e8.cartan_matrix_g0ss, bourbaki_cartan(CartanType::parse("E7")));
}

TEST(ContactGrading, TypeATorusCharacters) {
  auto [a, b] = type_A_torus_characters(2);
  EXPECT_EQ(a, (std::array<int, 2>{1, -1}));
  EXPECT_EQ(b, (std::array<int, 2>{-1, 3}));
  EXPECT_THROW(type_A_torus_characters(0), PreconditionError);
}
