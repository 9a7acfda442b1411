#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "fgb/presentations.hpp"

using namespace fgb;

namespace {

long long count_schema(const std::vector<RelationInstance>& rels, Schema s) {
  return std::count_if(rels.begin(), rels.end(),
                       [&](const RelationInstance& r) { return r.schema == s; });
}

}  // namespace

TEST_CASE("generator enumeration counts") {
  // P: n(n-1)/2, I: n, XMove: 2n(n+k-1), YMove: k(n+k-1), YSelf: k
  CHECK(enumerate_generators(3, 1, Group::conj).size() == 3 + 3 + 18 + 3);
  CHECK(enumerate_generators(3, 1, Group::bdy).size() == 3 + 3 + 18 + 3 + 1);
  CHECK(enumerate_generators(0, 2, Group::conj).size() == 2);
  CHECK(enumerate_generators(0, 2, Group::bdy).size() == 4);
  CHECK(enumerate_generators(2, 0, Group::conj).size() == 1 + 2 + 4);

  SUBCASE("duplicate-free and well-formed") {
    for (Group g : {Group::conj, Group::bdy}) {
      auto gens = enumerate_generators(2, 2, g);
      std::set<GenSymbol> dedup(gens.begin(), gens.end());
      CHECK(dedup.size() == gens.size());
      for (const GenSymbol& s : gens) CHECK(symbol_wellformed(s, 2, 2, g));
    }
  }
}

TEST_CASE("relation enumeration") {
  SUBCASE("basis-conjugating presentation at n=0") {
    CHECK(enumerate_relations(0, 2, Group::conj).empty());
    auto rels = enumerate_relations(0, 3, Group::conj);
    CHECK(count_schema(rels, Schema::Z1) == 3);
    CHECK(count_schema(rels, Schema::Z2) == 0);
    CHECK(count_schema(rels, Schema::Z3) == 6);
    CHECK(rels.size() == 9);
    auto rels4 = enumerate_relations(0, 4, Group::conj);
    CHECK(count_schema(rels4, Schema::Z2) == 12);  // unordered disjoint pairs
  }
  SUBCASE("Q5 instance count at (1,1)") {
    auto rels = enumerate_relations(1, 1, Group::conj);
    CHECK(count_schema(rels, Schema::Q5) == 2);
  }
  SUBCASE("the central correction schema replaces Q5 in the tuple group") {
    auto rels = enumerate_relations(1, 1, Group::bdy);
    CHECK(count_schema(rels, Schema::Q5) == 0);
    CHECK(count_schema(rels, Schema::Q5p) == 2);
    CHECK(count_schema(rels, Schema::Q2p) > 0);
  }
  SUBCASE("no central correction instances without x generators") {
    auto rels = enumerate_relations(0, 2, Group::bdy);
    CHECK(count_schema(rels, Schema::Q5p) == 0);
    CHECK(count_schema(rels, Schema::Q2p) == 6);
  }
  SUBCASE("deterministic and duplicate-free") {
    auto a = enumerate_relations(2, 1, Group::bdy);
    auto b = enumerate_relations(2, 1, Group::bdy);
    REQUIRE(a.size() == b.size());
    std::set<std::pair<int, std::string>> keys;
    for (std::size_t t = 0; t < a.size(); ++t) {
      CHECK(a[t].params == b[t].params);
      keys.insert({static_cast<int>(a[t].schema), a[t].params});
    }
    CHECK(keys.size() == a.size());
  }
  SUBCASE("well-formed symbols throughout") {
    for (Group g : {Group::conj, Group::bdy}) {
      for (const RelationInstance& r : enumerate_relations(2, 2, g)) {
        for (const SignedSymbol& s : r.lhs) CHECK(symbol_wellformed(s.sym, 2, 2, g));
        for (const SignedSymbol& s : r.rhs) CHECK(symbol_wellformed(s.sym, 2, 2, g));
      }
    }
  }
}

TEST_CASE("symbol realization") {
  SUBCASE("conjugation of y by itself is the central tuple") {
    BoundaryElement e = realize_bdy(sym_yself(1), 1, 1, 2);
    CHECK(e == central_inclusion(1, 2, {1, 0}));
    CHECK(is_identity(realize_conj(sym_yself(1), 1, 1, 2)));
  }
  SUBCASE("named conjugator") {
    BoundaryElement e = realize_bdy(sym_ymove(1, gen_x(1)), 1, 2, 1);
    Rank r{2, 1, false};
    CHECK(e.w[0] == word_gen(r, gen_x(1)));
  }
  SUBCASE("swap has trivial conjugators") {
    BoundaryElement e = realize_bdy(sym_p(1, 2), 1, 2, 1);
    Rank r{2, 1, false};
    CHECK(e.nu[0] == word_gen(r, gen_x(2)));
    CHECK(e.nu[1] == word_gen(r, gen_x(1)));
    CHECK(e.w[0].empty());
  }
  SUBCASE("tuple realization projects onto the automorphism realization") {
    for (Group g : {Group::conj}) {
      (void)g;
      for (const GenSymbol& s : enumerate_generators(2, 2, Group::conj)) {
        for (int pow : {1, -1}) {
          CHECK(induced_automorphism(realize_bdy(s, pow, 2, 2)) ==
                realize_conj(s, pow, 2, 2));
        }
      }
    }
  }
  SUBCASE("every generator is an automorphism with its symbol inverse") {
    for (const GenSymbol& s : enumerate_generators(2, 2, Group::conj)) {
      Endomorphism e = realize_conj(s, 1, 2, 2);
      Endomorphism ei = realize_conj(s, -1, 2, 2);
      CHECK(is_identity(compose(e, ei)));
      CHECK(is_y_conjugating(e));
    }
  }
}

TEST_CASE("single relation verification and diagnostics") {
  // a deliberately corrupted commutation: these two moves do not commute
  RelationInstance bogus;
  bogus.schema = Schema::Q2;
  bogus.params = "corrupted";
  SignedSymbol a{sym_xmove(1, 1, gen_y(1)), 1};   // x1 -> x1 y1
  SignedSymbol b{sym_ymove(1, gen_x(2)), 1};      // y1 -> x2^-1 y1 x2
  bogus.lhs = {a, b};
  bogus.rhs = {b, a};
  std::string witness;
  CHECK(!verify_relation(bogus, 2, 1, Group::conj, &witness));
  CHECK(witness.find("x1") == 0);  // first differing generator is reported
  CHECK(!verify_relation(bogus, 2, 1, Group::bdy, &witness));
}

TEST_CASE("soundness grid") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 1}, {2, 1}, {2, 2}}) {
    for (Group g : {Group::conj, Group::bdy}) {
      VerifyReport rep = verify_relations(n, k, g);
      INFO("n=", n, " k=", k, " group=", group_name(g));
      if (!rep.failures.empty()) {
        INFO("first failure: ", rep.failures[0].params, " : ", rep.failures[0].witness);
      }
      CHECK(rep.ok());
      bool has_instances = rep.total_instances() > 0;
      bool empty_presentation_ok = n == 0 && k == 2 && g == Group::conj;
      CHECK((has_instances || empty_presentation_ok));
    }
  }
}

TEST_CASE("serial and parallel drivers agree") {
  VerifyReport a = verify_relations_serial(2, 1, Group::bdy);
  VerifyReport b = verify_relations_parallel(2, 1, Group::bdy);
  REQUIRE(a.schemas.size() == b.schemas.size());
  for (std::size_t t = 0; t < a.schemas.size(); ++t) {
    CHECK(a.schemas[t].schema == b.schemas[t].schema);
    CHECK(a.schemas[t].instances == b.schemas[t].instances);
    CHECK(a.schemas[t].failed == b.schemas[t].failed);
  }
  CHECK(a.failures.size() == b.failures.size());
}

TEST_CASE("schema filter") {
  VerifyReport rep = verify_relations(1, 1, Group::conj, {Schema::Q5});
  REQUIRE(rep.schemas.size() == 1);
  CHECK(rep.schemas[0].schema == Schema::Q5);
  CHECK(rep.schemas[0].instances == 2);
  CHECK(rep.ok());
}

TEST_CASE("central correction evaluates to the inverse central generator") {
  for (const RelationInstance& r : enumerate_relations(1, 1, Group::bdy)) {
    if (r.schema != Schema::Q5p) continue;
    BoundaryElement lhs = evaluate_bdy(r.lhs, 1, 1);
    CHECK(lhs == central_inclusion(1, 1, {-1}));
  }
}

TEST_CASE("whitehead relation suite") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {2, 1}}) {
    McCoolReport rep = verify_mccool_R(n, k);
    INFO("n=", n, " k=", k);
    if (!rep.failures.empty()) {
      INFO("first failure: ", rep.failures[0].first, " : ", rep.failures[0].second);
    }
    CHECK(rep.ok());
    CHECK(rep.total_instances() > 0);
    // every schema family appears at these sizes
    std::set<std::string> tags;
    for (const auto& [tag, count] : rep.counts) {
      if (count > 0) tags.insert(tag);
    }
    if (n == 2) {
      for (const char* want : {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10"}) {
        INFO("missing schema ", want);
        CHECK(tags.count(want) == 1);
      }
    }
  }
}

TEST_CASE("abelianized relation matrix") {
  SUBCASE("commutator rows vanish") {
    auto gens = enumerate_generators(2, 1, Group::conj);
    auto rels = enumerate_relations(2, 1, Group::conj);
    auto m = abelianized_relation_matrix(2, 1, Group::conj);
    REQUIRE(m.size() == rels.size());
    for (std::size_t t = 0; t < rels.size(); ++t) {
      if (rels[t].schema != Schema::Q2) continue;
      for (long long v : m[t]) CHECK(v == 0);
    }
  }
  SUBCASE("a Q4.1 row leaves exactly the (w;z) column") {
    auto gens = enumerate_generators(2, 1, Group::conj);
    auto rels = enumerate_relations(2, 1, Group::conj);
    auto m = abelianized_relation_matrix(2, 1, Group::conj);
    bool seen = false;
    for (std::size_t t = 0; t < rels.size(); ++t) {
      if (rels[t].schema != Schema::Q4_1) continue;
      int nonzero = 0;
      long long value = 0;
      for (long long v : m[t]) {
        if (v != 0) {
          ++nonzero;
          value = v;
        }
      }
      CHECK(nonzero == 1);
      CHECK((value == 1 || value == -1));
      seen = true;
    }
    CHECK(seen);
  }
  SUBCASE("the central correction row ties the central column to the moves") {
    auto gens = enumerate_generators(1, 1, Group::bdy);
    auto rels = enumerate_relations(1, 1, Group::bdy);
    auto m = abelianized_relation_matrix(1, 1, Group::bdy);
    int yself_col = -1;
    for (std::size_t c = 0; c < gens.size(); ++c) {
      if (gens[c] == sym_yself(1)) yself_col = static_cast<int>(c);
    }
    REQUIRE(yself_col >= 0);
    for (std::size_t t = 0; t < rels.size(); ++t) {
      if (rels[t].schema != Schema::Q5p) continue;
      CHECK(m[t][yself_col] == 1);
    }
  }
}

TEST_CASE("first homology") {
  SUBCASE("free of rank k(k-1) at n=0") {
    AbelianGroupShape s2 = h1(0, 2, Group::conj);
    CHECK(s2.free_rank == 2);
    CHECK(s2.torsion.empty());
    AbelianGroupShape s3 = h1(0, 3, Group::conj);
    CHECK(s3.free_rank == 6);
    CHECK(s3.torsion.empty());
  }
  SUBCASE("order two for the plain automorphism group") {
    AbelianGroupShape s = h1(3, 0, Group::conj);
    CHECK(s.free_rank == 0);
    CHECK(s.torsion == std::vector<BigInt>{2});
  }
  SUBCASE("the classical rank-two value, outside the stable range") {
    AbelianGroupShape s = h1(2, 0, Group::conj);
    CHECK(s.free_rank == 0);
    CHECK(s.torsion == std::vector<BigInt>{2, 2});
  }
  SUBCASE("order two with boundaries") {
    for (Group g : {Group::conj, Group::bdy}) {
      AbelianGroupShape s = h1(3, 1, g);
      INFO("group=", group_name(g));
      CHECK(s.free_rank == 0);
      CHECK(s.torsion == std::vector<BigInt>{2});
    }
  }
  SUBCASE("reported shape for the tuple group at n=0") {
    AbelianGroupShape s = h1(0, 2, Group::bdy);
    CHECK(s.free_rank == 4);  // the central columns survive without Q5'
    CHECK(s.torsion.empty());
  }
}

TEST_CASE("h1 is invariant under shuffling the relation matrix") {
  auto m = abelianized_relation_matrix(2, 1, Group::bdy);
  const int cols = static_cast<int>(enumerate_generators(2, 1, Group::bdy).size());
  AbelianGroupShape base = cokernel_shape(int_matrix(m), cols);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    auto shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<int> perm(cols);
    for (int c = 0; c < cols; ++c) perm[c] = c;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& row : shuffled) {
      auto old = row;
      for (int c = 0; c < cols; ++c) row[c] = old[perm[c]];
    }
    CHECK(cokernel_shape(int_matrix(shuffled), cols) == base);
  }
}

TEST_CASE("budget guard") {
  CHECK_NOTHROW(check_presentation_budget(3, 2));
  CHECK_THROWS_AS(check_presentation_budget(4, 2), BudgetExceeded);
  CHECK_NOTHROW(check_presentation_budget(4, 2, 7));
}

TEST_CASE("tuple evaluation projects onto the automorphism evaluation") {
  for (const RelationInstance& r : enumerate_relations(2, 1, Group::bdy)) {
    if (r.schema == Schema::Q2p || r.schema == Schema::Q5p) continue;  // central symbols
    CHECK(induced_automorphism(evaluate_bdy(r.lhs, 2, 1)) == evaluate_conj(r.lhs, 2, 1));
    CHECK(induced_automorphism(evaluate_bdy(r.rhs, 2, 1)) == evaluate_conj(r.rhs, 2, 1));
  }
}
