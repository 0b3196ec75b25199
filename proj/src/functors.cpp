#include "nodal/functors.hpp"

#include "nodal/errors.hpp"

namespace nodal {

std::optional<std::pair<std::string, std::string>> inessential_ordering(const Quiver& q,
                                                                        const GluePair& pair) {
  auto works = [&](const std::string& i, const std::string& j) {
    return q.arrows_at(i, Direction::In).empty() && q.arrows_at(j, Direction::Out).empty();
  };
  if (works(pair.first, pair.second)) return std::make_pair(pair.first, pair.second);
  if (works(pair.second, pair.first)) return std::make_pair(pair.second, pair.first);
  return std::nullopt;
}

namespace {

void require_no_loops(const Quiver& q, const std::string& v) {
  for (auto a : q.arrows_at(v, Direction::Out)) {
    if (q.vertex(q.arrow(a).target) == v) throw Mismatch("functor needs vertex '" + v + "' without loops");
  }
}

Representation glue_blocks(const Representation& m, const GluePair& pair, const std::string& first,
                           const std::string& second, std::shared_ptr<const Presentation> target) {
  const auto& q = m.presentation().quiver();
  require_no_loops(q, pair.first);
  require_no_loops(q, pair.second);
  auto tp = target ? std::move(target)
                   : std::make_shared<const Presentation>(glue_vertices(m.presentation(), pair.first, pair.second));
  const auto& tq = tp->quiver();
  if (tq.arrow_count() != q.arrow_count()) throw Mismatch("target presentation does not match the gluing");

  const auto vi = q.vertex_index(first);
  const auto vj = q.vertex_index(second);
  const auto merged = tq.vertex_index(merged_vertex_id(pair.first, pair.second));
  auto image = [&](std::size_t v) { return (v == vi || v == vj) ? merged : tq.vertex_index(q.vertex(v)); };
  auto offset = [&](std::size_t v) { return v == vj ? m.dim(vi) : std::size_t{0}; };

  std::vector<std::size_t> dims(tq.vertex_count(), 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[image(v)] += m.dim(v);
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    Matrix out(dims[image(arr.target)], dims[image(arr.source)]);
    const auto& src = m.mat(a);
    const auto r0 = offset(arr.target);
    const auto c0 = offset(arr.source);
    for (std::size_t r = 0; r < src.rows(); ++r)
      for (std::size_t c = 0; c < src.cols(); ++c) out(r0 + r, c0 + c) = src(r, c);
    mats.push_back(std::move(out));
  }
  return Representation(std::move(tp), m.field(), std::move(dims), std::move(mats));
}

}  // namespace

Representation functor_F_glue(const Representation& m, const GluePair& pair,
                              std::shared_ptr<const Presentation> target) {
  return glue_blocks(m, pair, pair.first, pair.second, std::move(target));
}

Representation functor_F_inessential(const Representation& m, const GluePair& pair,
                                     std::shared_ptr<const Presentation> target) {
  auto order = inessential_ordering(m.presentation().quiver(), pair);
  if (!order) throw Mismatch("gluing {" + pair.first + ", " + pair.second + "} is not inessential");
  return glue_blocks(m, pair, order->first, order->second, std::move(target));
}

Representation functor_G_inessential(const Representation& n, std::shared_ptr<const Presentation> base,
                                     const GluePair& pair) {
  const auto& bq = base->quiver();
  auto order = inessential_ordering(bq, pair);
  if (!order) throw Mismatch("gluing {" + pair.first + ", " + pair.second + "} is not inessential");
  const auto& gq = n.presentation().quiver();
  if (gq.arrow_count() != bq.arrow_count()) throw Mismatch("base presentation does not match the gluing");
  const auto& f = n.field();
  const auto g = gq.vertex_index(merged_vertex_id(pair.first, pair.second));
  const auto vi = bq.vertex_index(order->first);
  const auto vj = bq.vertex_index(order->second);
  const auto ng = n.dim(g);

  // N0 = common kernel of the arrows leaving (ij).
  Matrix outgoing(0, ng);
  for (auto a : gq.arrows_at(g, Direction::Out)) outgoing = linalg::vstack(outgoing, n.mat(a));
  auto n0 = linalg::rref(f, linalg::transpose(linalg::kernel(f, outgoing)));
  std::vector<bool> pivot(ng, false);
  for (auto p : n0.pivots) pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ng; ++c)
    if (!pivot[c]) free_cols.push_back(c);
  // Section of the quotient map: quotient coordinates -> non-pivot unit vectors.
  Matrix lift(ng, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) lift(free_cols[k], k) = f.one();

  // Sum of the images of arrows entering (ij).
  Matrix incoming(ng, 0);
  for (auto a : gq.arrows_at(g, Direction::In)) incoming = linalg::hstack(incoming, n.mat(a));
  auto span = linalg::column_space(f, incoming);

  std::vector<std::size_t> dims(bq.vertex_count(), 0);
  for (std::size_t v = 0; v < bq.vertex_count(); ++v) {
    if (v == vi) {
      dims[v] = free_cols.size();
    } else if (v == vj) {
      dims[v] = span.cols();
    } else {
      dims[v] = n.dim(gq.vertex_index(bq.vertex(v)));
    }
  }
  auto into_span = [&](const Matrix& y) {
    auto c = linalg::coordinates(f, span, y);
    if (!c) throw std::logic_error("image outside the sum of incoming images");
    return *c;
  };
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < bq.arrow_count(); ++a) {
    const auto& arr = bq.arrow(a);
    Matrix m = n.mat(a);
    if (arr.source == vi) m = linalg::multiply(f, m, lift);
    if (arr.target == vj) m = into_span(m);
    mats.push_back(std::move(m));
  }
  return Representation(std::move(base), f, std::move(dims), std::move(mats));
}

Representation functor_F_blow(const Representation& m, const std::string& vertex,
                              std::shared_ptr<const Presentation> target) {
  const auto& q = m.presentation().quiver();
  auto tp = target ? std::move(target)
                   : std::make_shared<const Presentation>(blow_up_vertex(m.presentation(), vertex));
  const auto& tq = tp->quiver();
  const auto vb = q.vertex_index(vertex);
  std::vector<std::size_t> dims(tq.vertex_count(), 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (v == vb) {
      dims[tq.vertex_index(prime_id(vertex))] = m.dim(v);
      dims[tq.vertex_index(double_prime_id(vertex))] = m.dim(v);
    } else {
      dims[tq.vertex_index(q.vertex(v))] = m.dim(v);
    }
  }
  std::vector<Matrix> mats(tq.arrow_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (arr.source == vb || arr.target == vb) {
      mats[tq.arrow_index(prime_id(arr.id))] = m.mat(a);
      mats[tq.arrow_index(double_prime_id(arr.id))] = m.mat(a);
    } else {
      mats[tq.arrow_index(arr.id)] = m.mat(a);
    }
  }
  return Representation(std::move(tp), m.field(), std::move(dims), std::move(mats));
}

Representation functor_G_blow(const Representation& n, std::shared_ptr<const Presentation> base,
                              const std::string& vertex) {
  const auto& bq = base->quiver();
  const auto& nq = n.presentation().quiver();
  const auto vb = bq.vertex_index(vertex);
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < bq.vertex_count(); ++v) {
    dims.push_back(n.dim(nq.vertex_index(v == vb ? prime_id(vertex) : bq.vertex(v))));
  }
  std::vector<Matrix> mats;
  for (const auto& arr : bq.arrows()) {
    bool incident = arr.source == vb || arr.target == vb;
    mats.push_back(n.mat(nq.arrow_index(incident ? prime_id(arr.id) : arr.id)));
  }
  return Representation(std::move(base), n.field(), std::move(dims), std::move(mats));
}

}  // namespace nodal
