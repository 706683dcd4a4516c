#include "wolfkit/bundle.hpp"

#include "wolfkit/errors.hpp"

namespace wolfkit {

namespace {

void require_ambient(const NilLieAlgebra& alg, const char* who) {
  if (!alg.has_ambient())
    throw PreconditionError(std::string(who) + ": algebra has no ambient realization", "");
}

Matrix random_vector(RationalSampler& rng, std::size_t n) {
  Matrix x(n, 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = rng.next();
  return x;
}

// exp(X).p = p + A p + v
Matrix act(const InfinitesimalIsometry& x, const Matrix& p) { return p + x.at(p); }

// Map (u, t) -> L u + t (A L u + v) on m + 1 variables into R^n.
PolynomialMap flow_on_slice(const InfinitesimalIsometry& x, const Matrix& inclusion) {
  const std::size_t n = inclusion.rows();
  const std::size_t m = inclusion.cols();
  const std::size_t vars = m + 1;
  const Matrix al = x.A() * inclusion;
  std::vector<Polynomial> out;
  out.reserve(n);
  const Polynomial t = Polynomial::variable(vars, m);
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial lin(vars), moved(vars);
    for (std::size_t c = 0; c < m; ++c) {
      Exponents e(vars, 0);
      e[c] = 1;
      lin.add_term(e, inclusion(r, c));
      moved.add_term(e, al(r, c));
    }
    moved += Polynomial::constant(vars, x.v()[r]);
    out.push_back(lin + moved * t);
  }
  return PolynomialMap(vars, std::move(out));
}

// phi with sum_c phi_c (P_c(u, t) - u_c) = t identically, or none.
std::optional<Matrix> slicing_functional(const PolynomialMap& induced) {
  const std::size_t m = induced.out_vars();
  const std::size_t vars = induced.in_vars();
  std::map<Exponents, std::size_t, GradedLexDescending> rows;
  std::vector<Polynomial> deltas;
  for (std::size_t c = 0; c < m; ++c) {
    deltas.push_back(induced[c] - Polynomial::variable(vars, c));
    for (const auto& [e, coeff] : deltas.back().terms()) rows.emplace(e, 0);
  }
  Exponents t_mono(vars, 0);
  t_mono[vars - 1] = 1;
  rows.emplace(t_mono, 0);
  std::size_t idx = 0;
  for (auto& [e, r] : rows) r = idx++;
  Matrix a(rows.size(), m), b(rows.size(), 1);
  for (std::size_t c = 0; c < m; ++c)
    for (const auto& [e, coeff] : deltas[c].terms()) a(rows.at(e), c) = coeff;
  b[rows.at(t_mono)] = 1;
  LinearSolution sol = solve_linear(a, b);
  if (!sol.particular) return std::nullopt;
  return sol.particular->transpose();
}

// Preimage in g of the center of g / h, h spanned by the columns of `used`.
Matrix quotient_center(const NilLieAlgebra& alg, const Matrix& used) {
  const std::size_t k = alg.dim();
  Matrix annihilator = used.cols() == 0 ? Matrix::identity(k) : kernel(used.transpose()).transpose();
  if (annihilator.rows() == 0) return Matrix(k, 0);
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < k; ++i)
    blocks.push_back(annihilator * alg.ad(alg.basis_vector(i)));
  Matrix stacked = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) stacked = vstack(stacked, blocks[i]);
  return canonical_column_basis(kernel(stacked));
}

std::string degree_text(const PolynomialMap& f) {
  if (f.out_vars() == 0) return "none (no components)";
  if (f.degree() < 0) return "zero map";
  return std::to_string(f.degree());
}

}  // namespace

std::optional<Matrix> beta(const Matrix& q, const Matrix& p, const NilLieAlgebra& alg) {
  require_ambient(alg, "beta");
  const std::size_t k = alg.dim();
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < k; ++i) cols.push_back(alg.ambient()[i].at(p));
  const Matrix b = Matrix::from_columns(cols, p.rows());
  LinearSolution sol = solve_linear(b, q - p);
  if (!sol.particular) return std::nullopt;
  if (sol.kernel.cols() != 0)
    throw PreconditionError("beta: orbit map is not injective at p (action not free)",
                            to_string(sol.kernel.col(0)));
  if (act(alg.realize(*sol.particular), p) != q)
    throw ConsistencyError("beta: exp(sum t_i X_i).p != q after solving");
  return sol.particular;
}

bool same_orbit(const Matrix& q, const Matrix& p, const NilLieAlgebra& alg) {
  return beta(q, p, alg).has_value();
}

std::variant<Trivialization, NotSliceable> trivialize(const NilLieAlgebra& alg,
                                                      const TrivializeOptions& options) {
  require_ambient(alg, "trivialize");
  const std::size_t k = alg.dim();
  const std::size_t n = alg.space()->dim();
  if (k > n) throw PreconditionError("trivialize: more directions than ambient dimensions", "");

  PolynomialMap retraction = PolynomialMap::identity(n);
  Matrix inclusion = Matrix::identity(n);
  std::vector<std::size_t> kept(n);
  for (std::size_t i = 0; i < n; ++i) kept[i] = i;
  Matrix used(k, 0);
  std::vector<SliceStep> history;

  for (std::size_t stage = 0; stage < k; ++stage) {
    const Matrix center_basis = quotient_center(alg, used);
    const std::size_t m = kept.size();
    NotSliceable stalled{stage, {}, {}, retraction};
    bool advanced = false;
    for (std::size_t c = 0; c < center_basis.cols() && !advanced; ++c) {
      const Matrix x = center_basis.col(c);
      if (used.cols() != 0 && in_span(used, x)) continue;
      const InfinitesimalIsometry xi = alg.realize(x);
      // induced one-parameter action on the current slice coordinates
      PolynomialMap induced = compose(retraction, flow_on_slice(xi, inclusion));
      std::optional<Matrix> phi = slicing_functional(induced);
      if (!phi) {
        stalled.candidates.push_back(x);
        stalled.induced.push_back(std::move(induced));
        continue;
      }
      std::size_t e = 0;
      while ((*phi)(0, e) == 0) ++e;

      // r(u) = drop_e(P(u, -phi . u))
      std::vector<Polynomial> sub;
      for (std::size_t i = 0; i < m; ++i) sub.push_back(Polynomial::variable(m, i));
      Polynomial t(m);
      for (std::size_t i = 0; i < m; ++i) t.add_term([&] { Exponents ex(m, 0); ex[i] = 1; return ex; }(), -(*phi)(0, i));
      sub.push_back(t);
      PolynomialMap full = compose(induced, PolynomialMap(m, std::move(sub)));
      std::vector<Polynomial> dropped;
      for (std::size_t i = 0; i < m; ++i)
        if (i != e) dropped.push_back(full[i]);
      PolynomialMap r(m, std::move(dropped));

      // slice {phi = 0} parametrized by the remaining coordinates
      Matrix embed(m, m - 1);
      for (std::size_t i = 0, col = 0; i < m; ++i) {
        if (i == e) continue;
        embed(i, col) = 1;
        embed(e, col) = -(*phi)(0, i) / (*phi)(0, e);
        ++col;
      }

      history.push_back(SliceStep{x, *phi, kept[e], r});
      retraction = compose(r, retraction);
      inclusion = inclusion * embed;
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(e));
      used = hstack(used, x);
      advanced = true;
    }
    if (!advanced) return stalled;
  }

  Trivialization triv;
  triv.projection = retraction;
  triv.section = PolynomialMap::affine(inclusion);
  triv.history = std::move(history);
  triv.base_coordinates = kept;
  Report& rep = triv.verification;

  const std::size_t base = n - k;
  if (triv.projection.out_vars() != base || triv.section.in_vars() != base)
    throw ConsistencyError("trivialize: base dimension differs from n - k");
  rep.add("base_dimension", Status::Pass, std::to_string(base));

  const PolynomialMap loop = compose(triv.projection, triv.section) - PolynomialMap::identity(base);
  if (!poly_identity_zero(loop))
    throw ConsistencyError("trivialize: pi o sigma - id is not the zero polynomial");
  rep.add("section_identity", Status::Pass, "pi o sigma - id is the zero polynomial");

  RationalSampler rng(options.seed);
  for (std::size_t s = 0; s < options.invariance_samples; ++s) {
    const Matrix p = random_vector(rng, n);
    const Matrix g = random_vector(rng, k);
    const Matrix gp = act(alg.realize(g), p);
    if (triv.projection.evaluate(gp) != triv.projection.evaluate(p))
      throw ConsistencyError("trivialize: pi(g.p) != pi(p) at p = " + to_string(p) +
                             ", t = " + to_string(g));
  }
  rep.add("projection_invariant", Status::Pass,
          std::to_string(options.invariance_samples) + " samples");

  for (std::size_t s = 0; s < options.orbit_samples; ++s) {
    const Matrix p = random_vector(rng, n);
    const Matrix back = triv.section.evaluate(triv.projection.evaluate(p));
    if (!same_orbit(back, p, alg) || !beta(p, back, alg))
      throw ConsistencyError("trivialize: sigma(pi(p)) not in the orbit of p = " + to_string(p));
  }
  rep.add("fibers_are_orbits", Status::Pass, std::to_string(options.orbit_samples) + " samples");
  rep.add("degrees", Status::Evidence,
          "pi " + degree_text(triv.projection) + ", sigma " + degree_text(triv.section));
  return triv;
}

}  // namespace wolfkit
