#include <vector>

#include "centra/centralizers.hpp"
#include "centra/corpus.hpp"
#include "centra/error.hpp"
#include "centra/expr.hpp"
#include "centra/families.hpp"
#include "centra/structure.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace centra;

TEST_CASE("cent_count on abelian groups is 1") {
  for (const char* s : {"C1", "C12", "C2xC2", "C7xC7", "C2xC4xC3"}) {
    INFO(s);
    const FiniteGroup g = eval(s);
    CHECK(cent_count(g) == 1);
    CHECK(cent_set(g).size() == 1);
    CHECK(cent_set(g).back().size() == g.order());
  }
}

TEST_CASE("cent_count matches the all-pairs oracle on named groups") {
  struct Case {
    const char* spec;
    std::size_t expected;
  };
  // D14, D18 and the two semidirects are the values quoted for the
  // nine- and eleven-centralizer groups; the rest come from the oracle.
  const Case cases[] = {{"D14", 9},        {"D18", 11},       {"C7:C3(k=2)", 9}, {"C7:C6(k=3)", 9},
                        {"Q8", 4},         {"D8", 4},         {"S3", 5},         {"A4", 6},
                        {"S4", 14},        {"D14xC5", 9},     {"Q12", 5},        {"D10", 7}};
  for (const auto& c : cases) {
    INFO(c.spec);
    const FiniteGroup g = eval(c.spec);
    CHECK(oracle::cent_count_all_pairs(oracle::table_of(g)) == c.expected);
    CHECK(cent_count(g) == c.expected);
  }
}

TEST_CASE("heisenberg(7) has nine centralizers") {
  const FiniteGroup h = eval("Heis7");
  CHECK(cent_count(h) == 9);
  // each non-central centralizer is Z(G) times a cyclic of order 7: order 49
  for (const Subgroup& c : cent_set(h)) CHECK((c.size() == 49 || c.size() == 343));
  CHECK(oracle::cent_count_all_pairs(oracle::heisenberg(7)) == 9);
}

TEST_CASE("is_ca") {
  CHECK(is_ca(eval("C12")));
  CHECK(is_ca(eval("D14")));
  CHECK(is_ca(eval("Heis7")));
  CHECK_FALSE(is_ca(eval("S4")));
  CHECK_FALSE(is_ca(eval("D8xS3")));
}

TEST_CASE("max_noncommuting against subset enumeration") {
  CHECK(max_noncommuting(eval("C12")) == 1);
  for (const char* s : {"S3", "D8", "Q8", "D10", "D14", "Q12", "C3:C4(k=2)"}) {
    INFO(s);
    const FiniteGroup g = eval(s);
    CHECK(max_noncommuting(g) == oracle::max_noncommuting_subsets(oracle::table_of(g)));
  }
  CHECK(max_noncommuting(eval("S3")) == 4);
  const std::size_t r = max_noncommuting(eval("D14"));
  CHECK(r == 8);
  CHECK((r >= 5 && r <= 8));

  Limits tight;
  tight.clique = 10;
  CHECK_THROWS_AS(max_noncommuting(eval("D14"), tight), Error);
}

TEST_CASE("max_noncommuting against Bron-Kerbosch on elements") {
  for (const char* s : {"S4", "A4", "S3xS3", "D8xS3", "Q8xC3", "Heis3", "C7:C6(k=3)"}) {
    INFO(s);
    const FiniteGroup g = eval(s);
    CHECK(max_noncommuting(g) == oracle::max_noncommuting_bron_kerbosch(oracle::table_of(g)));
  }
  // the corpus graph is reduced to one vertex per centralizer; recheck small corpus groups
  CorpusSpec spec;
  spec.max_order = 32;
  for (const auto& e : generate_corpus(spec)) {
    const FiniteGroup g = e.build();
    if (g.is_abelian()) continue;
    INFO(e.spec);
    CHECK(max_noncommuting(g) == oracle::max_noncommuting_bron_kerbosch(oracle::table_of(g)));
  }
  // the element-level oracle takes minutes on A5; its value is 21
  CHECK(max_noncommuting(eval("A5")) == 21);
}

TEST_CASE("commuting depends only on central cosets") {
  for (const char* s : {"Q8", "Heis3", "D14xC5", "S4xC2"}) {
    INFO(s);
    CHECK(commuting_is_central_coset_invariant(eval(s)));
  }
}

TEST_CASE("cover_profile of D14") {
  const CentProfile p = cover_profile(eval("D14"));
  CHECK(p.cent_count == 9);
  CHECK(p.center_order == 1);
  CHECK(p.index_multiset == std::vector<std::size_t>{2, 7, 7, 7, 7, 7, 7, 7});
  CHECK(p.proper_centralizers.size() == 8);
  CHECK(p.covers_group);
  CHECK(p.pairwise_intersections_central);
  CHECK(p.is_ca);
  CHECK(p.r == 8);
  CHECK(p.product_is_group);
}

TEST_CASE("cover_profile of heisenberg(7) and Q8") {
  const CentProfile h = cover_profile(eval("Heis7"));
  CHECK(h.index_multiset == std::vector<std::size_t>(8, 7));
  CHECK(h.covers_group);
  CHECK(h.pairwise_intersections_central);

  const CentProfile q = cover_profile(eval("Q8"));
  CHECK(q.cent_count == 4);
  CHECK(q.index_multiset == std::vector<std::size_t>{2, 2, 2});
  CHECK(q.r == 3);

  try {
    cover_profile(eval("C6"));
    FAIL("abelian input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AbelianInput);
  }
}

TEST_CASE("profile_json keys") {
  const std::string j = profile_json(cover_profile(eval("S3")));
  CHECK(j.find("\"cent_count\":5") != std::string::npos);
  CHECK(j.find("\"indices\":[2,3,3,3]") != std::string::npos);
}

TEST_CASE("product_is_whole") {
  const FiniteGroup s3 = eval("S3");
  const auto cs = cent_set(s3);
  // a transposition centralizer (order 2) times the 3-cycle centralizer (order 3)
  CHECK(product_is_whole(s3, cs.front(), cs[cs.size() - 2]));
  CHECK_FALSE(product_is_whole(s3, cs[0], cs[1]));
}

TEST_CASE("three_cover_index") {
  // C2 x C2 is the union of its three order-2 subgroups; their intersection has index 4
  CHECK(three_cover_index(eval("C2xC2")).empty());
  CHECK(three_cover_index(eval("C7")).empty());
  CHECK(three_cover_index(eval("Q8")).empty());
  CHECK(three_cover_index(eval("D8xC3")).empty());
}

TEST_CASE("is_frobenius") {
  const auto f42 = is_frobenius(eval("C7:C6(k=3)"));
  REQUIRE(f42.has_value());
  CHECK(f42->complement.size() == 6);
  CHECK(f42->kernel.size() == 7);

  const auto d14 = is_frobenius(eval("D14"));
  REQUIRE(d14.has_value());
  CHECK(d14->complement.size() == 2);
  CHECK(d14->kernel.size() == 7);

  CHECK(is_frobenius(eval("C7:C3(k=2)")).has_value());
  CHECK(is_frobenius(eval("A4")).has_value());
  CHECK_FALSE(is_frobenius(eval("Q8")).has_value());
  CHECK_FALSE(is_frobenius(eval("C7xC7")).has_value());
  CHECK_FALSE(is_frobenius(eval("S4")).has_value());
}
