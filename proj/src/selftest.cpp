#include "nodal/selftest.hpp"

#include <algorithm>

#include "nodal/construct.hpp"
#include "nodal/functors.hpp"

namespace nodal {

Representation without_simple_summands(const Representation& m, const std::vector<std::size_t>& vertices) {
  auto out = Representation::zero(m.presentation_ptr(), m.field());
  for (const auto& part : decompose(m)) {
    const bool simple_here = part.total_dim() == 1 && std::any_of(vertices.begin(), vertices.end(), [&](auto v) {
                               return part.dim(v) == 1;
                             });
    if (!simple_here) out = direct_sum(out, part);
  }
  return out;
}

Representation random_representation(std::shared_ptr<const Presentation> pres, const Field& field,
                                     std::vector<std::size_t> dims, std::mt19937_64& rng, std::size_t attempts) {
  const auto& q = pres->quiver();
  std::uniform_int_distribution<std::int64_t> pick(0, static_cast<std::int64_t>(field.size()) - 1);
  for (std::size_t t = 0; t < attempts; ++t) {
    std::vector<Matrix> mats;
    for (const auto& a : q.arrows()) {
      Matrix m(dims[a.target], dims[a.source]);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = field.element(static_cast<std::size_t>(pick(rng)));
      mats.push_back(std::move(m));
    }
    Representation rep(pres, field, dims, std::move(mats));
    if (check_relations(rep).ok) return rep;
  }
  std::vector<Matrix> zeros;
  for (const auto& a : q.arrows()) zeros.emplace_back(dims[a.target], dims[a.source]);
  return Representation(pres, field, std::move(dims), std::move(zeros));
}

namespace {

struct Fixture {
  std::string name;
  std::shared_ptr<const Presentation> base;
  std::shared_ptr<const Presentation> target;
  enum class Op { Inessential, Essential, Blow } op;
  GluePair pair;
  std::string vertex;
};

std::shared_ptr<const Presentation> hereditary(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows) {
  return std::make_shared<const Presentation>(Quiver(std::move(vertices), arrows), std::vector<Relation>{});
}

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  auto chain = hereditary({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  out.push_back({"inessential gluing {1 3} of 1->2->3", chain,
                 std::make_shared<const Presentation>(glue_vertices(*chain, "1", "3")), Fixture::Op::Inessential,
                 {"1", "3"}, ""});
  auto two = hereditary({"1", "2", "3", "4", "5"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "4", "5"}});
  out.push_back({"essential gluing {2 4} of 1->2->3, 4->5", two,
                 std::make_shared<const Presentation>(glue_vertices(*two, "2", "4")), Fixture::Op::Essential,
                 {"2", "4"}, ""});
  out.push_back({"blow-up of 2 in 1->2->3", chain,
                 std::make_shared<const Presentation>(blow_up_vertex(*chain, "2")), Fixture::Op::Blow, {}, "2"});
  return out;
}

Representation apply_F(const Fixture& fx, const Representation& m) {
  switch (fx.op) {
    case Fixture::Op::Inessential: return functor_F_inessential(m, fx.pair, fx.target);
    case Fixture::Op::Essential: return functor_F_glue(m, fx.pair, fx.target);
    case Fixture::Op::Blow: return functor_F_blow(m, fx.vertex, fx.target);
  }
  return m;
}

}  // namespace

SelftestReport functor_selftest(std::size_t trials, std::uint64_t seed) {
  SelftestReport report;
  std::mt19937_64 rng(seed);
  const auto field = Field::prime(2);
  const auto fxs = fixtures();
  std::uniform_int_distribution<std::size_t> which(0, fxs.size() - 1);
  std::uniform_int_distribution<std::size_t> dim(0, 2);

  for (std::size_t t = 0; t < trials; ++t) {
    ++report.trials;
    const auto& fx = fxs[which(rng)];
    const auto& bq = fx.base->quiver();
    std::vector<std::size_t> dims(bq.vertex_count());
    for (auto& d : dims) d = dim(rng);
    if (std::all_of(dims.begin(), dims.end(), [](auto d) { return d == 0; })) dims[0] = 1;
    const auto m = random_representation(fx.base, field, dims, rng);
    const auto m2 = random_representation(fx.base, field, dims, rng);
    const auto fm = apply_F(fx, m);
    auto fail = [&](const std::string& what) {
      report.failures.push_back("trial " + std::to_string(t) + " (" + fx.name + "): " + what);
    };

    ++report.checks;
    if (!check_relations(fm).ok) fail("F M violates a relation");

    std::vector<std::size_t> operated;
    if (fx.op == Fixture::Op::Blow) {
      ++report.checks;
      if (!(functor_G_blow(fm, fx.base, fx.vertex) == m)) fail("G F M differs from M");
    } else {
      operated = {bq.vertex_index(fx.pair.first), bq.vertex_index(fx.pair.second)};
    }
    if (fx.op == Fixture::Op::Inessential) {
      const auto core = without_simple_summands(m, operated);
      ++report.checks;
      if (!is_isomorphic(functor_G_inessential(apply_F(fx, core), fx.base, fx.pair), core)) {
        fail("G F M is not isomorphic to M after removing simple summands at the glued vertices");
      }
    }
    const auto c1 = without_simple_summands(m, operated);
    const auto c2 = without_simple_summands(m2, operated);
    ++report.checks;
    if (is_isomorphic(c1, c2) != is_isomorphic(apply_F(fx, c1), apply_F(fx, c2))) {
      fail("F does not reflect isomorphism");
    }
  }
  return report;
}

}  // namespace nodal
