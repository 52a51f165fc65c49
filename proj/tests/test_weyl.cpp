#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "xwb/weyl.hpp"

using namespace xwb;

TEST_CASE("construction, lengths and canonical words") {
  auto A2 = CoxeterSys::type_A(2);
  CHECK(A2->size() == 6);
  auto A3 = CoxeterSys::type_A(3);
  CHECK(A3->size() == 24);
  // canonical words are ShortLex: the longest element of A2 reads s1 s2 s1
  std::set<int> S{0, 1};
  CHECK(A2->word_str(A2->longest(S)) == "s1 s2 s1");
  // length equals the inversion count of the one-line permutation
  for (int w = 0; w < A3->size(); ++w) {
    Perm p = A3->perm_of(w);
    CHECK(A3->length(w) == perm_length(p));
    CHECK(A3->from_perm(p) == w);
  }
  // B2 via explicit matrix
  auto B2 = CoxeterSys::from_matrix({{1, 4}, {4, 1}});
  CHECK(B2->size() == 8);
  auto G2 = CoxeterSys::from_matrix({{1, 6}, {6, 1}});
  CHECK(G2->size() == 12);
  CHECK_THROWS_AS(CoxeterSys::from_matrix({{1, 5}, {5, 1}}), XwbError);  // non-crystallographic
  CHECK_THROWS_AS(CoxeterSys::from_matrix({{1, 1}, {1, 1}}), XwbError);
}

TEST_CASE("suppbar examples") {
  auto A3 = CoxeterSys::type_A(3);
  CHECK(A3->suppbar(0).empty());
  auto flip = CoxeterSys::type_A(3);
  flip->set_sigma({2, 1, 0});
  int s1 = flip->parse_word("s1");
  CHECK(flip->suppbar(s1) == std::set<int>{0, 2});
  auto A2 = CoxeterSys::type_A(2);
  CHECK(A2->suppbar(A2->parse_word("s1 s2 s1")) == std::set<int>{0, 1});
}

TEST_CASE("sigma classes of A2 (sigma = id)") {
  auto A2 = CoxeterSys::type_A(2);
  auto cls = A2->sigma_classes();
  REQUIRE(cls.size() == 3);
  std::map<int, int> cmin_sizes;  // min length -> |C_min|
  int cuspidal_count = 0;
  for (auto& C : cls) {
    cmin_sizes[C.min_len] = static_cast<int>(C.cmin.size());
    if (C.cuspidal) {
      ++cuspidal_count;
      CHECK(C.min_len == 2);  // the Coxeter class
    }
    // all C_min elements share the minimal length, nothing shorter exists
    for (int v : C.members) CHECK(A2->length(v) >= C.min_len);
    for (int v : C.cmin) CHECK(A2->length(v) == C.min_len);
  }
  CHECK(cuspidal_count == 1);
  CHECK(cmin_sizes[0] == 1);
  CHECK(cmin_sizes[1] == 2);
  CHECK(cmin_sizes[2] == 2);
}

TEST_CASE("sigma classes of A1") {
  auto A1 = CoxeterSys::type_A(1);
  auto cls = A1->sigma_classes();
  REQUIRE(cls.size() == 2);
  CHECK(cls[0].members == std::vector<int>{0});
  CHECK(cls[1].members.size() == 1);
}

TEST_CASE("classes against the brute-force permutation oracle") {
  // sigma = id and the diagram flip on A3; the flip acts on S_4 by
  // conjugation with the longest element
  oracle::PermGroup G(4);
  int w0 = -1;
  for (size_t i = 0; i < G.elems.size(); ++i)
    if (G.elems[i] == std::vector<int>{3, 2, 1, 0}) w0 = static_cast<int>(i);
  REQUIRE(w0 >= 0);

  for (bool flip : {false, true}) {
    auto W = CoxeterSys::type_A(3);
    if (flip) W->set_sigma({2, 1, 0});
    std::vector<int> sigma_images(G.elems.size());
    for (size_t x = 0; x < G.elems.size(); ++x)
      sigma_images[x] = flip ? G.mul(G.mul(w0, static_cast<int>(x)), w0) : static_cast<int>(x);
    auto brute = oracle::sigma_classes_brute(G, sigma_images);

    auto cls = W->sigma_classes();
    CHECK(cls.size() == brute.size());
    // translate library classes to permutation-index sets
    std::set<std::set<int>> lib_sets, brute_sets;
    for (auto& C : cls) {
      std::set<int> s;
      for (int v : C.members) s.insert(G.index.at(W->perm_of(v)));
      lib_sets.insert(s);
    }
    for (auto& C : brute) brute_sets.insert(C);
    CHECK(lib_sets == brute_sets);
    // C_min agrees: recompute from the brute class via inversion counts
    for (auto& C : cls) {
      int brute_min = 1 << 20;
      std::set<int> bs;
      for (int v : C.members) bs.insert(G.index.at(W->perm_of(v)));
      for (int g : bs) brute_min = std::min(brute_min, G.inv_count(g));
      CHECK(brute_min == C.min_len);
    }
    // partition check
    size_t total = 0;
    for (auto& C : cls) total += C.members.size();
    CHECK(total == static_cast<size_t>(W->size()));
  }
}

TEST_CASE("cyclic shift path examples") {
  auto A2 = CoxeterSys::type_A(2);
  int w12 = A2->parse_word("s1 s2"), w21 = A2->parse_word("s2 s1");
  auto p = A2->cyclic_shift_path(w12, w21);
  REQUIRE(p.has_value());
  REQUIRE(p->size() == 1);
  CHECK((*p)[0].x == A2->parse_word("s1"));
  CHECK((*p)[0].y == A2->parse_word("s2"));
  auto self = A2->cyclic_shift_path(w12, w12);
  REQUIRE(self.has_value());
  CHECK(self->empty());
  CHECK_THROWS_AS(A2->cyclic_shift_path(w12, A2->parse_word("s1")), XwbError);
}

TEST_CASE("cyclic shifts connect C_min of cuspidal classes with full support") {
  for (int rank = 1; rank <= 3; ++rank) {
    auto W = CoxeterSys::type_A(rank);
    for (auto& C : W->sigma_classes()) {
      if (!C.cuspidal) continue;
      bool full = true;
      std::set<int> S;
      for (int s = 0; s < rank; ++s) S.insert(s);
      for (int v : C.cmin) full = full && (W->suppbar(v) == S);
      if (!full) continue;
      for (int a : C.cmin)
        for (int b : C.cmin) {
          auto p = W->cyclic_shift_path(a, b);
          CHECK(p.has_value());
          // and the reverse path exists as well
          CHECK(W->cyclic_shift_path(b, a).has_value());
        }
    }
  }
}

TEST_CASE("path steps have additive lengths") {
  auto A3 = CoxeterSys::type_A(3);
  auto cls = A3->sigma_classes();
  for (auto& C : cls) {
    for (size_t i = 0; i + 1 < C.cmin.size(); ++i) {
      auto p = A3->cyclic_shift_path(C.cmin[i], C.cmin[i + 1]);
      if (!p) continue;
      for (auto& st : *p) {
        CHECK(A3->mult(st.x, st.y) == st.from);
        CHECK(A3->length(st.x) + A3->length(st.y) == A3->length(st.from));
        CHECK(A3->mult(st.y, A3->sigma_elt(st.x)) == st.to);
        CHECK(A3->length(st.to) == A3->length(st.from));
      }
    }
  }
}

TEST_CASE("descent_to_min examples") {
  auto A2 = CoxeterSys::type_A(2);
  // already minimal: empty chain
  CHECK(A2->descent_to_min(A2->parse_word("s1 s2")).empty());
  // the longest element (a reflection) descends to length 1
  int w0 = A2->parse_word("s1 s2 s1");
  auto chain = A2->descent_to_min(w0);
  REQUIRE(!chain.empty());
  CHECK(A2->length(chain.back().to) == 1);
  long prev = A2->length(w0);
  for (auto& st : chain) {
    CHECK(A2->length(st.to) <= prev);
    prev = A2->length(st.to);
    CHECK(A2->left_mult(st.s, A2->right_mult(st.from, A2->sigma_gens()[st.s])) == st.to);
  }
}

TEST_CASE("descent_to_min reaches C_min everywhere (A3/A4, both sigmas)") {
  // A4 and the A3 flip contain elements where no single conjugation strictly
  // descends, so the equal-length search layer is exercised here
  for (int rank : {3, 4}) {
    for (bool flip : {false, true}) {
      auto W = CoxeterSys::type_A(rank);
      if (flip) {
        std::vector<int> s(rank);
        for (int i = 0; i < rank; ++i) s[i] = rank - 1 - i;
        W->set_sigma(s);
      }
      for (int w = 0; w < W->size(); ++w) {
        auto chain = W->descent_to_min(w);
        int last = chain.empty() ? w : chain.back().to;
        CHECK(W->length(last) == W->class_min_length(w));
        long prev = W->length(w);
        for (auto& st : chain) {
          CHECK(W->length(st.to) <= prev);
          prev = W->length(st.to);
        }
      }
    }
  }
}

TEST_CASE("cyclic_shift_path returns nothing across distinct classes") {
  auto A3 = CoxeterSys::type_A(3);
  int a = A3->parse_word("s1 s2");   // a 3-cycle
  int b = A3->parse_word("s1 s3");   // a (2,2)-involution, same length
  CHECK(A3->length(a) == A3->length(b));
  CHECK_FALSE(A3->cyclic_shift_path(a, b).has_value());
}

TEST_CASE("suppbar of C_min elements forms one conjugation orbit (rank <= 3)") {
  // weak orbit statement: the supports of minimal elements of a class are
  // conjugate subsets, checked via sorted block-size multisets in type A
  for (int rank = 2; rank <= 3; ++rank) {
    auto W = CoxeterSys::type_A(rank);
    for (auto& C : W->sigma_classes()) {
      std::set<std::multiset<int>> shapes;
      for (int v : C.cmin) {
        auto I = W->suppbar(v);
        // block sizes of consecutive runs
        std::multiset<int> shape;
        int run = 0;
        for (int s = 0; s <= rank; ++s) {
          if (s < rank && I.count(s)) ++run;
          else {
            if (run > 0) shape.insert(run);
            run = 0;
          }
        }
        shapes.insert(shape);
      }
      CHECK(shapes.size() <= 1);
    }
  }
}
