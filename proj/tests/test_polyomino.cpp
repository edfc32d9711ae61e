#include "polyomino.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kpoly;

namespace {

KPolyomino build4(std::initializer_list<std::pair<int, int>> steps) {
  std::vector<std::pair<int, int>> v(steps);
  return KPolyomino::build(4, v);
}

}  // namespace

TEST_CASE("build computes the full adjacency matrix") {
  KPolyomino domino = build4({{0, 0}});
  CHECK(domino.size() == 2);
  CHECK(domino.adjacent_pairs() == 1);
  CHECK(domino.adjacency(0, 1) == 1);  // slot 0 stored as 0+1
  CHECK(domino.adjacency(1, 0) == 4 + 1);

  // three hexagons around a vertex close into a triangle of adjacencies
  std::vector<std::pair<int, int>> steps{{0, 0}, {1, 4}};
  KPolyomino tri = KPolyomino::build(6, steps);
  CHECK(tri.size() == 3);
  CHECK(tri.adjacent_pairs() == 3);

  // a heptagon chain with the sharpest turn overlaps
  std::vector<std::pair<int, int>> bad{{0, 0}, {1, 9}};
  CHECK_THROWS_AS(KPolyomino::build(7, bad), OverlapError);

  std::vector<std::pair<int, int>> badslot{{0, 1}};
  CHECK_THROWS_AS(KPolyomino::build(4, badslot), BadSlotError);
}

TEST_CASE("graph classes of the tetrominoes") {
  KPolyomino t = build4({{0, 0}, {0, 2}, {0, 4}});
  CHECK(t.graph_class4() == GraphClass4::Star);

  KPolyomino block = build4({{0, 0}, {0, 2}, {1, 2}});
  CHECK(block.graph_class4() == GraphClass4::Cycle);

  KPolyomino line = build4({{0, 0}, {1, 0}, {2, 0}});
  CHECK(line.graph_class4() == GraphClass4::Path);

  KPolyomino s = build4({{0, 0}, {1, 2}, {2, 0}});
  CHECK(s.graph_class4() == GraphClass4::Path);

  KPolyomino domino = build4({{0, 0}});
  CHECK_THROWS_AS(domino.graph_class4(), WrongSizeError);
}

TEST_CASE("hexagon hubs pick up the extra edges") {
  // hub with three neighbors at consecutive turn angles (1,1,4): two touching
  // pairs become adjacent, giving the two-extra-edge graph
  std::vector<std::pair<int, int>> s114{{0, 0}, {0, 2}, {0, 4}};
  KPolyomino p114 = KPolyomino::build(6, s114);
  CHECK(p114.graph_class4() == GraphClass4::StarPlusTwoEdges);

  std::vector<std::pair<int, int>> s123{{0, 0}, {0, 2}, {0, 6}};
  KPolyomino p123 = KPolyomino::build(6, s123);
  CHECK(p123.graph_class4() == GraphClass4::StarPlusEdge);

  std::vector<std::pair<int, int>> s222{{0, 0}, {0, 4}, {0, 8}};
  KPolyomino p222 = KPolyomino::build(6, s222);
  CHECK(p222.graph_class4() == GraphClass4::Star);
}

TEST_CASE("edge counts") {
  CHECK(KPolyomino::build(4, {}).edge_count() == 4);
  CHECK(build4({{0, 0}}).edge_count() == 7);
  std::vector<std::pair<int, int>> steps{{0, 0}, {1, 4}};
  CHECK(KPolyomino::build(6, steps).edge_count() == 15);
}

TEST_CASE("canonical codes separate and unify") {
  // single cell: same code regardless of k-rotation of nothing
  KPolyomino one = KPolyomino::build(5, {});
  CHECK(one.canonical_code() == Code{1, 0});

  KPolyomino l1 = build4({{0, 0}, {1, 2}});  // right then up
  KPolyomino l2 = build4({{0, 2}, {1, 0}});  // up then right
  CHECK(l1.canonical_code() == l2.canonical_code());

  KPolyomino i3 = build4({{0, 0}, {1, 0}});
  CHECK(l1.canonical_code() != i3.canonical_code());
}

TEST_CASE("canonical code invariance under random isometries") {
  std::mt19937 rng(2024);
  int built = 0;
  while (built < 400) {
    int k = 3 + static_cast<int>(rng() % 10);
    int n = 2 + static_cast<int>(rng() % 6);
    // random growth, retrying on overlap
    std::vector<std::pair<int, int>> steps;
    KPolyomino p = KPolyomino::build(k, {});
    bool ok = true;
    for (int i = 1; i < n && ok; ++i) {
      bool placed = false;
      for (int attempt = 0; attempt < 12 && !placed; ++attempt) {
        int parent = static_cast<int>(rng() % static_cast<unsigned>(i));
        int par = p.cells()[static_cast<size_t>(parent)].parity;
        int d = (par + 2 * static_cast<int>(rng() % k)) % (2 * k);
        auto trial = steps;
        trial.emplace_back(parent, d);
        try {
          p = KPolyomino::build(k, trial);
          steps = trial;
          placed = true;
        } catch (const OverlapError&) {
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    ++built;

    Code base = p.canonical_code();
    int rot = static_cast<int>(rng() % (2 * k));
    bool refl = rng() % 2;
    std::vector<CellPlacement> cells;
    for (const auto& c : p.cells()) {
      CycNum z = refl ? c.center.conj() : c.center;
      cells.push_back({z.shifted(rot), (c.parity + rot) & 1});
    }
    // random relabeling, keeping some cell as the new root
    std::shuffle(cells.begin(), cells.end(), rng);
    KPolyomino q = KPolyomino::from_placements(k, std::move(cells));
    CHECK(q.canonical_code() == base);
  }
}

TEST_CASE("representatives rebuilt from codes reproduce their codes") {
  std::vector<std::pair<int, int>> shapes[] = {
      {{0, 0}, {1, 2}, {2, 0}},          // S tetromino
      {{0, 0}, {0, 2}, {1, 2}},          // block
      {{0, 0}, {1, 0}, {2, 0}, {3, 2}},  // L pentomino
  };
  for (auto& steps : shapes) {
    KPolyomino p = KPolyomino::build(4, steps);
    Code code = p.canonical_code();
    KPolyomino r = KPolyomino::from_code(4, code);
    CHECK(r.canonical_code() == code);
    r.validate();
  }
  // odd k, where parities alternate
  std::vector<std::pair<int, int>> tsteps{{0, 0}, {1, 1}, {2, 0}};
  KPolyomino t = KPolyomino::build(3, tsteps);
  Code code = t.canonical_code();
  KPolyomino r = KPolyomino::from_code(3, code);
  CHECK(r.canonical_code() == code);
  r.validate();
}

TEST_CASE("removable cells keep the graph connected") {
  KPolyomino line = build4({{0, 0}, {1, 0}});
  CHECK(line.removal_keeps_connected(0));
  CHECK_FALSE(line.removal_keeps_connected(1));
  CHECK(line.removal_keeps_connected(2));
}

TEST_CASE("isometry apply and inverse are mutually inverse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 3 + static_cast<int>(rng() % 10);
    Isometry iso;
    iso.rot = static_cast<int>(rng() % (2 * k));
    iso.refl = rng() % 2;
    CycNum pre(k);
    for (int j = 0; j < k; ++j) pre.coeff(j) = static_cast<int>(rng() % 7) - 3;
    iso.pre = pre;

    CellPlacement c{CycNum(k), static_cast<int>(rng() % 2)};
    for (int j = 0; j < k; ++j) c.center.coeff(j) = static_cast<int>(rng() % 9) - 4;

    Isometry inv = iso.inverse(k);
    CellPlacement round = inv.apply(k, iso.apply(k, c));
    CHECK(round.center.equals(c.center));
    CHECK(round.parity == c.parity);

    int d = static_cast<int>(rng() % (2 * k));
    CHECK(inv.map_slot(k, iso.map_slot(k, d)) == d);
  }
}

TEST_CASE("validate flags broken polyominoes") {
  KPolyomino good = build4({{0, 0}, {1, 2}});
  good.validate();

  // tampered adjacency
  std::vector<uint8_t> adj = good.adj();
  adj[1] = 0;
  adj[3] = 0;
  KPolyomino bad = KPolyomino::assemble(4, good.cells(), adj);
  CHECK_THROWS_AS(bad.validate(), std::logic_error);
}
