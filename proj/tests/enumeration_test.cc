#include "mutanta/enumeration.h"

#include <set>

#include <gtest/gtest.h>

#include "mutanta/combinatorics.h"
#include "mutanta/reference.h"
#include "test_oracles.h"

namespace mutanta {
namespace {

TEST(EnumerateTriangulationsTest, Counts) {
  EXPECT_EQ(enumerate_triangulations(4).members.size(), 2u);
  EXPECT_EQ(enumerate_triangulations(5).members.size(), 5u);
  const TriangulationCatalog nonagon = enumerate_triangulations(9);
  EXPECT_EQ(nonagon.members.size(), 429u);
  EXPECT_EQ(nonagon.rotation_classes.size(), 49u);
  for (int m = 4; m <= 13; ++m) {
    EXPECT_EQ(BigInt(enumerate_triangulations(m).members.size()), catalan(m - 2)) << m;
  }
}

TEST(EnumerateTriangulationsTest, MatchesSubsetScan) {
  for (int m = 4; m <= 8; ++m) {
    std::set<std::vector<Diagonal>> found;
    for (const Triangulation& t : enumerate_triangulations(m).members) {
      EXPECT_TRUE(found.insert(t.diagonals()).second) << "duplicate";
    }
    EXPECT_EQ(found, oracle::triangulations_by_subsets(m)) << m;
  }
}

TEST(EnumerateTriangulationsTest, CatalogInvariants) {
  for (int m = 4; m <= 11; ++m) {
    const TriangulationCatalog c = enumerate_triangulations(m);
    std::size_t covered = 0;
    for (const RotationClass& rc : c.rotation_classes) covered += rc.orbit_size;
    EXPECT_EQ(covered, c.members.size());
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      EXPECT_EQ(rotation_canonical(c.members[i]).representative,
                c.rotation_classes[c.class_of[i]].representative);
    }
  }
}

TEST(EnumerateTriangulationsTest, Limits) {
  EXPECT_THROW(enumerate_triangulations(3), std::invalid_argument);
  EXPECT_THROW(enumerate_triangulations(15), LimitError);
  Limits small;
  small.max_polygon_size = 6;
  EXPECT_THROW(enumerate_triangulations(7, small), LimitError);
}

TEST(EnumerateTriangulationsTest, ParallelMatchesReference) {
  for (int m = 4; m <= 11; ++m) {
    const TriangulationCatalog serial = reference::enumerate_triangulations(m);
    for (int jobs : {1, 4}) {
      const TriangulationCatalog parallel = enumerate_triangulations(m, {}, jobs);
      EXPECT_EQ(parallel.members, serial.members);
      EXPECT_EQ(parallel.class_of, serial.class_of);
      ASSERT_EQ(parallel.rotation_classes.size(), serial.rotation_classes.size());
      for (std::size_t i = 0; i < serial.rotation_classes.size(); ++i) {
        EXPECT_EQ(parallel.rotation_classes[i].representative,
                  serial.rotation_classes[i].representative);
        EXPECT_EQ(parallel.rotation_classes[i].orbit_size,
                  serial.rotation_classes[i].orbit_size);
      }
    }
  }
}

TEST(EnumerateMutationClassTest, Counts) {
  EXPECT_EQ(enumerate_mutation_class(2).members.size(), 1u);
  EXPECT_EQ(enumerate_mutation_class(3).members.size(), 4u);
  EXPECT_EQ(enumerate_mutation_class(8).members.size(), 442u);
  EXPECT_THROW(enumerate_mutation_class(1), std::invalid_argument);
  EXPECT_THROW(enumerate_mutation_class(14), LimitError);
}

TEST(EnumerateMutationClassTest, MembersArePairwiseNonIsomorphicAndClosed) {
  for (int n = 2; n <= 8; ++n) {
    const MutationClassCatalog c = enumerate_mutation_class(n);
    std::set<CanonicalQuiver> unique(c.members.begin(), c.members.end());
    EXPECT_EQ(unique.size(), c.members.size());
    EXPECT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
    for (const CanonicalQuiver& member : c.members) {
      const Quiver q = member.to_quiver();
      EXPECT_TRUE(validate_type_a(q));
      for (int k = 0; k < n; ++k) EXPECT_TRUE(c.contains(canonical_form(mutate(q, k))));
    }
    EXPECT_EQ(c.stats.mutations, c.members.size() * n);
    std::size_t visited = 0;
    for (std::size_t s : c.stats.level_sizes) visited += s;
    EXPECT_EQ(visited, c.members.size());
  }
}

TEST(EnumerateMutationClassTest, IndependentOfWorkerCountAndMatchesReference) {
  for (int n = 2; n <= 9; ++n) {
    const MutationClassCatalog serial = reference::enumerate_mutation_class(n);
    for (int jobs : {1, 2, 4}) {
      const MutationClassCatalog parallel = enumerate_mutation_class(n, {}, jobs);
      EXPECT_EQ(parallel.members, serial.members) << n << " jobs=" << jobs;
      EXPECT_EQ(parallel.stats.level_sizes, serial.stats.level_sizes);
      EXPECT_EQ(parallel.stats.depth, serial.stats.depth);
    }
  }
}

TEST(OrbitStatisticsTest, Examples) {
  EXPECT_EQ(orbit_statistics(7), (std::map<int, std::size_t>{{7, 6}}));
  EXPECT_EQ(orbit_statistics(11), (std::map<int, std::size_t>{{11, 442}}));
  // Hexagon: 6 fans, 2 + 3 + 3 from the central triangle and the two
  // zig-zags, 14 = C(4) in total.
  const auto hexagon = orbit_statistics(6);
  EXPECT_EQ(hexagon, (std::map<int, std::size_t>{{2, 1}, {3, 2}, {6, 1}}));
}

TEST(OrbitStatisticsTest, KeysDividePolygonSize) {
  for (int m = 4; m <= 12; ++m) {
    std::size_t total = 0;
    for (const auto& [size, count] : orbit_statistics(m)) {
      EXPECT_EQ(m % size, 0);
      EXPECT_GE(size, 2);
      total += size * count;
    }
    EXPECT_EQ(BigInt(total), catalan(m - 2));
  }
}

TEST(CanonicalQuiversTest, RotationsShareQuivers) {
  const TriangulationCatalog c = enumerate_triangulations(9);
  const auto images = canonical_quivers(c, 2);
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    EXPECT_EQ(images[i], canonical_form(quiver_of(rotate(c.members[i], 1))));
  }
}

}  // namespace
}  // namespace mutanta
