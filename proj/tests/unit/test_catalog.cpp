#include <gtest/gtest.h>

#include "cpa/catalog.hpp"
#include "cpa/error.hpp"
#include "cpa/lie_structure.hpp"
#include "test_util.hpp"

using namespace cpa;

TEST(Catalog, KeysRoundTrip) {
  for (const auto& key : catalog_examples()) {
    EXPECT_EQ(parse_catalog_key(to_string(key)), key);
    auto lie = make(key);
    EXPECT_EQ(lie.name(), to_string(key));
    EXPECT_TRUE(validate(lie).empty()) << lie.name();
  }
  EXPECT_EQ(to_string(parse_catalog_key("parabolic_sl(4, 3, 1)")), "parabolic_sl(4,1,3)");
}

TEST(Catalog, Dimensions) {
  EXPECT_EQ(sl(3).dim(), 8u);
  EXPECT_EQ(borel_sl(4).dim(), 9u);
  EXPECT_EQ(parabolic_sl(3, {1}).dim(), 6u);
  EXPECT_EQ(parabolic_sl(4, {1, 2}).dim(), 15u - 3u - 3u + 3u);  // 6 + 3 + 3
  EXPECT_EQ(sl2_semidirect_V(3).dim(), 6u);
  EXPECT_EQ(sl(2).labels(), (std::vector<std::string>{"E12", "E21", "H1"}));
}

TEST(Catalog, RejectsBadParameters) {
  for (const char* bad : {"sl(0)", "borel_sl(-1)", "parabolic_sl(3)", "parabolic_sl(3,1,2)", "parabolic_sl(3,3)",
                          "parabolic_sl(3,1,1)", "heisenberg(2)", "foo", "sl(x)", "abelian(2"}) {
    try {
      parse_catalog_key(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadParameters) << bad;
    }
  }
}

TEST(Catalog, ParabolicMatchesSixDimensionalExample) {
  // parabolic_sl(3,1) basis: E12, E13, E23, E21, H1, H2
  // example_3_6 basis:       E12, E13, E21, E23, H1, H2
  auto p = parabolic_sl(3, {1});
  auto g = example_3_6();
  const std::vector<std::size_t> perm{0, 1, 3, 2, 4, 5};  // p index -> g index
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(p.c(i, j, k), g.c(perm[i], perm[j], perm[k]));
}

TEST(Catalog, BorelCenterElement) {
  auto bc = borel_center_element(2);
  EXPECT_EQ(bc.algebra.name(), "borel_sl(3)");
  EXPECT_EQ(bc.z, cpa::testing::vec({0, 1, 0, 0, 0}));
  EXPECT_EQ(bc.h_indices, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(center_of(bc.algebra, derived_algebra(bc.algebra)), Subspace::span(5, {bc.z}));
  EXPECT_THROW(borel_center_element(1), Error);
}
