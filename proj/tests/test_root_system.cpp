#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "twist/root_system.hpp"

using namespace twist;

namespace {

Root mk(std::vector<int> c) { return Root{std::move(c)}; }

}  // namespace

TEST_CASE("A2 positive roots and ordering") {
  RootSystem rs = RootSystem::build("A2");
  CHECK(rs.count() == 3);
  CHECK(rs.root(1) == mk({1, 0}));
  CHECK(rs.root(2) == mk({0, 1}));
  CHECK(rs.root(3) == mk({1, 1}));
  CHECK(rs.height(rs.root(3)) == 2);
}

TEST_CASE("A1 degenerate system") {
  RootSystem rs = RootSystem::build("A1");
  CHECK(rs.count() == 1);
  CHECK(rs.diagram_symmetries().size() == 1);
  CHECK(rs.extremal_simple_indices().empty());
}

TEST_CASE("D4 has 12 positive roots with the documented highest root") {
  RootSystem rs = RootSystem::build("D4");
  CHECK(rs.count() == 12);
  CHECK(rs.root(12) == mk({1, 2, 1, 1}));
  CHECK(rs.height(rs.root(12)) == 5);
  // heights run 1..5 with block sizes 4,3,3,1,1
  CHECK(rs.heights() == std::vector<int>{1, 2, 3, 4, 5});
  std::vector<std::size_t> sizes;
  for (const auto& b : rs.height_blocks()) sizes.push_back(b.size());
  CHECK(sizes == std::vector<std::size_t>{4, 3, 3, 1, 1});
}

TEST_CASE("classical positive root counts up to rank 8") {
  auto n = [](const char* t) { return RootSystem::build(t).count(); };
  CHECK(n("A1") == 1);
  CHECK(n("A3") == 6);
  CHECK(n("A8") == 36);
  CHECK(n("B2") == 4);
  CHECK(n("B3") == 9);
  CHECK(n("B8") == 64);
  CHECK(n("C3") == 9);
  CHECK(n("C8") == 64);
  CHECK(n("D4") == 12);
  CHECK(n("D8") == 56);
  CHECK(n("E6") == 36);
  CHECK(n("E7") == 63);
  CHECK(n("E8") == 120);
  CHECK(n("F4") == 24);
  CHECK(n("G2") == 6);
  CHECK_THROWS_AS(RootSystem::build("D3"), Error);
  CHECK_THROWS_AS(RootSystem::build("E9"), Error);
  CHECK_THROWS_AS(RootSystem::build("G3"), Error);
}

TEST_CASE("ordering is height monotone with pinned endpoints") {
  for (const char* t : {"A2", "A3", "A5", "B2", "B3", "C2", "C3", "C4", "D4", "D5", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(t);
    const int N = rs.count();
    for (int i = 1; i < N; ++i) CHECK(rs.height_of(i) <= rs.height_of(i + 1));
    // simple roots come first, in diagram order
    for (int i = 1; i <= rs.rank(); ++i) {
      Root simple;
      simple.coeffs.assign(rs.rank(), 0);
      simple.coeffs[i - 1] = 1;
      CHECK(rs.root(i) == simple);
    }
    const Root& top = rs.root(N);
    if (rs.type().family == 'A' && rs.rank() >= 2) {
      Root a = top, b = top;
      a.coeffs[rs.rank() - 1] -= 1;  // alpha_N - alpha_l
      b.coeffs[0] -= 1;              // alpha_N - alpha_1
      CHECK(rs.root(N - 2) == a);
      CHECK(rs.root(N - 1) == b);
    } else if (N >= 3) {
      int i = rs.extremal_simple_indices().at(0);
      Root a = top;
      a.coeffs[i - 1] -= 1;
      CHECK(rs.root(N - 1) == a);
      Root c = top;
      c.coeffs[i - 1] -= 2;
      if (rs.type().family == 'C' && rs.is_positive_root(c)) CHECK(rs.root(N - 2) == c);
    }
  }
}

TEST_CASE("G2 heights and pairings") {
  RootSystem rs = RootSystem::build("G2");
  CHECK(rs.root(6) == mk({3, 2}));
  CHECK(rs.height(rs.root(6)) == 5);
  CHECK(rs.pairing(rs.root(1), rs.root(1)) == 2);
  CHECK(rs.pairing(rs.root(1), rs.root(2)) * rs.pairing(rs.root(2), rs.root(1)) == 3);
}

TEST_CASE("cartan pairing values") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(a2.pairing(a2.root(1), a2.root(2)) == -1);
  CHECK(a2.cartan(1, 2) == -1);
  CHECK(a2.pairing(a2.root(3), a2.root(3)) == 2);
  // pairing accepts negative roots
  Root neg = mk({-1, -1});
  CHECK(a2.pairing(neg, a2.root(3)) == -2);
  CHECK_THROWS_AS(a2.pairing(mk({2, 0}), a2.root(1)), Error);
}

TEST_CASE("root sums") {
  RootSystem a2 = RootSystem::build("A2");
  CHECK(a2.root_sum(a2.root(1), a2.root(2)) == a2.root(3));
  CHECK_FALSE(a2.root_sum(a2.root(3), a2.root(1)).has_value());

  RootSystem c2 = RootSystem::build("C2");
  auto s = c2.root_sum(c2.root(1), *c2.root_sum(c2.root(1), c2.root(2)));
  REQUIRE(s.has_value());
  CHECK(*s == mk({2, 1}));
}

TEST_CASE("diagram symmetry groups") {
  CHECK(RootSystem::build("A1").diagram_symmetries().size() == 1);
  CHECK(RootSystem::build("A2").diagram_symmetries().size() == 2);
  CHECK(RootSystem::build("A5").diagram_symmetries().size() == 2);
  CHECK(RootSystem::build("B3").diagram_symmetries().size() == 1);
  CHECK(RootSystem::build("C4").diagram_symmetries().size() == 1);
  CHECK(RootSystem::build("D4").diagram_symmetries().size() == 6);
  CHECK(RootSystem::build("D5").diagram_symmetries().size() == 2);
  CHECK(RootSystem::build("E6").diagram_symmetries().size() == 2);
  CHECK(RootSystem::build("E7").diagram_symmetries().size() == 1);
  CHECK(RootSystem::build("F4").diagram_symmetries().size() == 1);
  CHECK(RootSystem::build("G2").diagram_symmetries().size() == 1);
}

TEST_CASE("D4 triality cycle exists and fixes the center node") {
  RootSystem rs = RootSystem::build("D4");
  // alpha_1 -> alpha_3 -> alpha_4 -> alpha_1, alpha_2 fixed (0-based perm)
  const DiagramSymmetry& rho = rs.symmetry_from_perm({2, 1, 3, 0});
  CHECK(rs.apply_symmetry(rho, rs.root(1)) == rs.root(3));
  CHECK(rs.apply_symmetry(rho, rs.root(3)) == rs.root(4));
  CHECK(rs.apply_symmetry(rho, rs.root(4)) == rs.root(1));
  CHECK(rs.apply_symmetry(rho, rs.root(2)) == rs.root(2));
  // every symmetry preserves height and fixes the highest root
  for (const auto& s : rs.diagram_symmetries()) {
    CHECK(s.induced_perm[rs.count() - 1] == rs.count() - 1);
    for (int i = 1; i <= rs.count(); ++i)
      CHECK(rs.height_of(s.induced_perm[i - 1] + 1) == rs.height_of(i));
  }
}

TEST_CASE("rebuilding from a permuted simple system yields the same root set") {
  // reflect-closure idempotence across diagram relabelling: permuting the
  // simple roots by a symmetry maps the positive root set onto itself
  for (const char* t : {"A3", "D4", "E6"}) {
    RootSystem rs = RootSystem::build(t);
    for (const auto& s : rs.diagram_symmetries()) {
      std::set<std::vector<int>> orig, image;
      for (int i = 1; i <= rs.count(); ++i) {
        orig.insert(rs.root(i).coeffs);
        image.insert(rs.apply_symmetry(s, rs.root(i)).coeffs);
      }
      CHECK(orig == image);
    }
  }
}

TEST_CASE("extremal case split") {
  CHECK(RootSystem::build("A3").extremal_branch() == ExtremalBranch::TypeA);
  CHECK(RootSystem::build("C3").extremal_branch() == ExtremalBranch::TypeC);
  CHECK(RootSystem::build("C2").extremal_branch() == ExtremalBranch::TypeC);
  CHECK(RootSystem::build("C2").extremal_branch(false) == ExtremalBranch::Other);
  CHECK(RootSystem::build("B2").extremal_branch() == ExtremalBranch::TypeC);
  CHECK(RootSystem::build("B3").extremal_branch() == ExtremalBranch::Other);
  CHECK(RootSystem::build("G2").extremal_branch() == ExtremalBranch::Other);

  CHECK(RootSystem::build("A4").extremal_simple_indices() == std::vector<int>{1, 4});
  CHECK(RootSystem::build("C3").extremal_simple_indices() == std::vector<int>{1});
  CHECK(RootSystem::build("B3").extremal_simple_indices() == std::vector<int>{2});
  CHECK(RootSystem::build("G2").extremal_simple_indices() == std::vector<int>{2});
}

TEST_CASE("root rendering") {
  RootSystem rs = RootSystem::build("D4");
  CHECK(rs.format_root(rs.root(12)) == "a1+2a2+a3+a4");
  CHECK(rs.format_root(rs.root(1)) == "a1");
  CHECK(RootSystemType::parse("D4").str() == "D4");
}
