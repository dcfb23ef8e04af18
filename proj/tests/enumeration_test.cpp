#include <gtest/gtest.h>

#include "ipd/enumeration.hpp"
#include "ipd/error.hpp"

namespace {

using namespace ipd;

TEST(Exact, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(60, 30).str(), "118264581564861424");
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Exact, IntervalPosetFormula) {
  EXPECT_EQ(count_interval_posets(2), 1);
  EXPECT_EQ(count_interval_posets(3), 3);
  // Hand evaluation at n = 4: i=1 gives 4 + 4, i=2 gives 20, i=3 gives 20; 48/4.
  EXPECT_EQ(count_interval_posets(4), 12);
  EXPECT_THROW(count_interval_posets(1), Error);
  // Large sizes stay integral.
  for (int n = 2; n <= 60; ++n)
    EXPECT_GT(count_interval_posets(n), 0);
}

TEST(Exact, BlockwiseFormula) {
  EXPECT_EQ(count_blockwise_posets(4), 1);
  EXPECT_EQ(count_blockwise_posets(5), 1);
  EXPECT_EQ(count_blockwise_posets(6), 1);
  // i=1: C(7,1) C(3,0) = 7; i=2: C(8,2) C(1,1) = 28; 35/7.
  EXPECT_EQ(count_blockwise_posets(7), 5);
  EXPECT_THROW(count_blockwise_posets(3), Error);
}

TEST(Exact, ClassicalSequences) {
  const std::vector<int> cat{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  const std::vector<int> large{1, 2, 6, 22, 90, 394, 1806, 8558};
  const std::vector<int> small{1, 1, 3, 11, 45, 197, 903, 4279};
  for (std::size_t k = 0; k < cat.size(); ++k)
    EXPECT_EQ(catalan(static_cast<int>(k)), cat[k]);
  for (std::size_t k = 0; k < large.size(); ++k) {
    EXPECT_EQ(large_schroeder(static_cast<int>(k)), large[k]);
    EXPECT_EQ(small_schroeder(static_cast<int>(k)), small[k]);
  }
  // Closed form for Catalan as an independent check.
  for (int k = 0; k <= 40; ++k)
    EXPECT_EQ(catalan(k), binomial(2 * k, k) / (k + 1));
}

TEST(Brute, CountsAgreeWithFormulasUpToSeven) {
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(brute_count(Family::All, n), count_interval_posets(n));
    EXPECT_EQ(brute_count(Family::All, n, true), BigInt(factorial(n)));
    EXPECT_EQ(brute_count(Family::Binary, n), small_schroeder(n - 1));
    EXPECT_EQ(brute_count(Family::Binary, n, true), large_schroeder(n - 1));
    EXPECT_EQ(brute_count(Family::BinaryTree, n), catalan(n - 1));
    EXPECT_EQ(brute_count(Family::BinaryTree, n, true), 2 * catalan(n - 1));
    if (n >= 4)
      EXPECT_EQ(brute_count(Family::Blockwise, n), count_blockwise_posets(n));
  }
  EXPECT_EQ(brute_count(Family::Tree, 3), 2);
  EXPECT_EQ(brute_count(Family::Binary, 4), 11);
  EXPECT_EQ(brute_count(Family::Binary, 3, true), 6);
  EXPECT_THROW(brute_count(Family::All, 10), Error);
}

TEST(Brute, DissectionSideCountsUpToSeven) {
  for (int n = 2; n <= 7; ++n) {
    const int m = n + 1;
    EXPECT_EQ(dissection_count(m, Family::All), brute_count(Family::All, n));
    EXPECT_EQ(dissection_count(m, Family::Tree), brute_count(Family::Tree, n));
    EXPECT_EQ(dissection_count(m, Family::Binary), brute_count(Family::Binary, n));
    EXPECT_EQ(dissection_count(m, Family::BinaryTree), catalan(n - 1));
    for (auto f : {Family::Tree, Family::Binary, Family::Blockwise, Family::BinaryTree})
      EXPECT_EQ(dissection_count(m, f), dissection_count_by_subsets(m, f)) << to_string(f);
  }
  EXPECT_THROW(dissection_count(9, Family::All), Error);
  EXPECT_THROW(dissection_count(16, Family::Tree), Error);
}

TEST(Brute, IndependentOfWorkerCount) {
  const auto one = tally_posets(7, 1);
  EXPECT_EQ(tally_posets(7, 3), one);
  EXPECT_EQ(tally_posets(7, 8), one);
  std::uint64_t total = 0;
  for (const auto &[key, perms] : one)
    total += perms;
  EXPECT_EQ(total, 5040u);
  EXPECT_EQ(dissection_count_by_subsets(7, Family::All, 4), dissection_count_by_subsets(7, Family::All, 1));
}

TEST(Formula, PerFamily) {
  EXPECT_EQ(formula_count(Family::All, 5), 52);
  EXPECT_EQ(formula_count(Family::All, 5, true), 120);
  EXPECT_EQ(formula_count(Family::Binary, 5), 45);
  EXPECT_EQ(formula_count(Family::Binary, 5, true), 90);
  EXPECT_EQ(formula_count(Family::BinaryTree, 5), 14);
  EXPECT_EQ(formula_count(Family::BinaryTree, 5, true), 28);
  EXPECT_EQ(formula_count(Family::Blockwise, 7), 5);
  EXPECT_FALSE(formula_count(Family::Tree, 5).has_value());
  EXPECT_FALSE(formula_count(Family::Blockwise, 3).has_value());
}

TEST(Names, RoundTrip) {
  for (auto f : {Family::All, Family::Tree, Family::Blockwise, Family::Binary, Family::BinaryTree})
    EXPECT_EQ(parse_family(to_string(f)), f);
  for (auto m : {Method::Formula, Method::BrutePerm, Method::BruteDissection,
                 Method::StructuredDissection})
    EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_FALSE(parse_family("trees").has_value());
  EXPECT_FALSE(parse_method("").has_value());
}

TEST(Table, FormatsAndMismatch) {
  CountTable t;
  t.rows.push_back({Family::Tree, 3, 2, Method::BrutePerm});
  t.rows.push_back({Family::All, 3, 3, Method::Formula});
  t.rows.push_back({Family::All, 3, 3, Method::BrutePerm});
  t.sort();
  EXPECT_EQ(t.to_csv(), "family,n,count,method\n"
                        "all,3,3,formula\n"
                        "all,3,3,brute_perm\n"
                        "tree,3,2,brute_perm\n");
  EXPECT_FALSE(t.mismatch().has_value());
  EXPECT_EQ(t.to_json(), "[\n"
                         "  {\n    \"family\": \"all\",\n    \"n\": 3,\n    \"count\": 3,\n"
                         "    \"method\": \"formula\"\n  },\n"
                         "  {\n    \"family\": \"all\",\n    \"n\": 3,\n    \"count\": 3,\n"
                         "    \"method\": \"brute_perm\"\n  },\n"
                         "  {\n    \"family\": \"tree\",\n    \"n\": 3,\n    \"count\": 2,\n"
                         "    \"method\": \"brute_perm\"\n  }\n]\n");
  t.rows.push_back({Family::Tree, 3, 4, Method::StructuredDissection});
  const auto bad = t.mismatch();
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->first, Family::Tree);
  EXPECT_EQ(bad->second, 3);

  CountTable big;
  big.rows.push_back({Family::All, 60, count_interval_posets(60), Method::Formula});
  EXPECT_NE(big.to_json().find("\"count\": \"" + count_interval_posets(60).str() + "\""),
            std::string::npos);
}

} // namespace
