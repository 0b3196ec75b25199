#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "nodal/enumerate.hpp"
#include "nodal/errors.hpp"
#include "oracle.hpp"

using namespace nodal;

namespace {

const Field F2 = Field::prime(2);

std::shared_ptr<const Presentation> a3() {
  return helpers::hereditary(Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}));
}

// Number of indecomposable classes per dimension vector.
std::map<std::vector<std::size_t>, std::size_t> per_dims(const EnumerationResult& r) {
  std::map<std::vector<std::size_t>, std::size_t> out;
  for (const auto& c : r.classes) ++out[c.representative.dims()];
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("small oracle counts") {
    const auto loop = helpers::built(helpers::load("glued_a2.datum"));
    CHECK(enumerate_indecomposables(loop, F2, 2).classes.size() == 2);
    const auto a2 = helpers::hereditary(Quiver({"1", "2"}, {{"a", "1", "2"}}));
    CHECK(enumerate_indecomposables(a2, F2, 2).classes.size() == 3);
    CHECK(enumerate_indecomposables(a3(), F2, 3).classes.size() == 6);
  }

  TEST_CASE("counts agree with the orbit oracle") {
    struct Case {
      const char* name;
      std::shared_ptr<const Presentation> pres;
      std::size_t bound;
    };
    const std::vector<Case> cases{
        {"loop", helpers::built(helpers::load("glued_a2.datum")), 4},
        {"A3", a3(), 4},
        {"blown chain", helpers::built(helpers::load("blown_chain.datum")), 3},
        {"exceptional (1,0,0)", helpers::built(helpers::load("except_100.datum")), 4},
    };
    for (const auto& c : cases) {
      CAPTURE(c.name);
      const auto engine = enumerate_indecomposables(c.pres, F2, c.bound, 64);
      CHECK(engine.classes.size() == oracle::indecomposable_count(*c.pres, 2, c.bound));
      for (const auto& [dims, count] : per_dims(engine)) {
        CAPTURE(dims.size());
        CHECK(count == oracle::orbit_count(*c.pres, 2, dims).indecomposable);
      }
    }
  }

  TEST_CASE("dimension-five classes of the (1,0,0) exceptional algebra agree with the orbit oracle") {
    const auto p = helpers::built(helpers::load("except_100.datum"));
    const auto engine = per_dims(enumerate_indecomposables(p, F2, 5, 64));
    for (const auto& dims : dimension_vectors(3, 5)) {
      // The oracle walks whole general linear groups; GL_4 is already too big.
      if (dims[0] + dims[1] + dims[2] != 5 || *std::max_element(dims.begin(), dims.end()) > 3) continue;
      CAPTURE(dims[0]);
      CAPTURE(dims[1]);
      CAPTURE(dims[2]);
      const auto it = engine.find(dims);
      CHECK((it == engine.end() ? 0 : it->second) == oracle::orbit_count(*p, 2, dims).indecomposable);
    }
  }

  TEST_CASE("the (1,0,0) exceptional algebra gains no classes from total dimension 7 to 8") {
    const auto p = helpers::built(helpers::load("except_100.datum"));
    const auto r = enumerate_indecomposables(p, F2, 8);
    std::size_t up_to_7 = 0;
    for (const auto& c : r.classes) {
      const auto& d = c.representative.dims();
      if (d[0] + d[1] + d[2] <= 7) ++up_to_7;
    }
    CHECK(up_to_7 == 17);
    CHECK(r.classes.size() == 17);
  }

  TEST_CASE("representatives are indecomposable, pairwise non-isomorphic and satisfy relations") {
    const auto p = helpers::built(helpers::load("except_100.datum"));
    const auto r = enumerate_indecomposables(p, F2, 4);
    for (std::size_t a = 0; a < r.classes.size(); ++a) {
      const auto& m = r.classes[a].representative;
      CHECK(check_relations(m).ok);
      CHECK(is_indecomposable(m));
      for (std::size_t b = a + 1; b < r.classes.size(); ++b) CHECK_FALSE(is_isomorphic(m, r.classes[b].representative));
    }
  }

  TEST_CASE("similarity class counts over small fields") {
    // q, q^2 + q, q^3 + q^2 + q, q^4 + q^3 + 2q^2 + q classes of n x n matrices.
    const std::vector<std::size_t> f2{2, 6, 14, 34}, f3{3, 12, 39, 129};
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(conjugacy_representatives(F2, n).size() == f2[n - 1]);
      CHECK(conjugacy_representatives(Field::prime(3), n).size() == f3[n - 1]);
    }
    CHECK(rank_normal_forms(F2, 2, 3).size() == 3);
  }

  TEST_CASE("full enumeration counts every tuple") {
    // A2 up to total 2: dims (1,0),(0,1),(2,0),(1,1),(0,2) with 1,1,1,2,1 tuples.
    const auto a2 = helpers::hereditary(Quiver({"1", "2"}, {{"a", "1", "2"}}));
    CHECK(enumerate_representations(a2, F2, 2).size() == 6);
    for (const auto& m : enumerate_representations(helpers::built(helpers::load("glued_a2.datum")), F2, 2)) {
      CHECK(check_relations(m).ok);
    }
  }

  TEST_CASE("budget and field guards") {
    CHECK_THROWS_AS(enumerate_indecomposables(a3(), F2, 6, 3), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_representations(a3(), F2, 4, 3), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_indecomposables(a3(), Field::rationals(), 2), InputError);
  }

  TEST_CASE("dimension vectors are ordered by total") {
    const auto v = dimension_vectors(2, 2);
    CHECK(v == std::vector<std::vector<std::size_t>>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  }
}
