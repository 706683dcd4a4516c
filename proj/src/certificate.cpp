#include "wolfkit/certificate.hpp"

#include "wolfkit/errors.hpp"

namespace wolfkit {

namespace {

Matrix flatten(const InfinitesimalIsometry& x) {
  std::size_t n = x.dim();
  Matrix f(n * n + n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f[i * n + j] = x.A()(i, j);
  for (std::size_t i = 0; i < n; ++i) f[n * n + i] = x.v()[i];
  return f;
}

// Records the first failure of a check that runs over many items.
class CheckRecorder {
 public:
  explicit CheckRecorder(std::string name) { entry_.name = std::move(name); }

  void fail(const std::string& where, const Matrix& witness) {
    ++failures_;
    if (failures_ > 1) return;
    entry_.status = Status::Fail;
    entry_.detail = where;
    entry_.witness = witness;
  }

  CheckEntry finish(std::size_t checked) {
    if (failures_ == 0)
      entry_.detail = std::to_string(checked) + " cases checked";
    else
      entry_.detail += " (" + std::to_string(failures_) + " of " + std::to_string(checked) +
                       " cases failed)";
    return entry_;
  }

 private:
  CheckEntry entry_;
  std::size_t failures_ = 0;
};

bool acts_freely(const InfinitesimalIsometry& x) {
  return !solve_linear(x.A(), x.v()).particular.has_value();
}

Matrix orthogonal_complement(const Matrix& gram, const Matrix& basis) {
  if (basis.cols() == 0) return Matrix::identity(gram.rows());
  return kernel(basis.transpose() * gram);
}

void check_spaces(const std::vector<AffineIsometry>& gens) {
  if (gens.empty()) throw UsageError("generator list is empty");
  for (const auto& g : gens)
    if (!same_space(g.space(), gens.front().space()))
      throw UsageError("generators act on different spaces");
}

}  // namespace

SpanningSet two_step_span(const std::vector<AffineIsometry>& gens) {
  check_spaces(gens);
  const std::size_t n = gens.front().dim();
  SpanningSet s;
  Matrix basis(n * n + n, 0);
  auto try_add = [&](InfinitesimalIsometry x, std::string label) {
    Matrix f = flatten(x);
    if (f.is_zero() || in_span(basis, f)) return;
    basis = hstack(basis, f);
    s.elements.push_back(std::move(x));
    s.labels.push_back(std::move(label));
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    try_add(log(gens[i]), "log g" + std::to_string(i + 1));
  const std::size_t nlogs = s.elements.size();
  std::vector<std::string> log_labels(s.labels.begin(), s.labels.end());
  for (std::size_t i = 0; i < nlogs; ++i)
    for (std::size_t j = i + 1; j < nlogs; ++j)
      try_add(bracket(s.elements[i], s.elements[j]),
              "[" + log_labels[i] + ", " + log_labels[j] + "]");
  return s;
}

bool WolfCertificate::algebraic_conditions_pass() const {
  for (const CheckEntry* e :
       {&square_zero, &v_perp_imA, &imA_isotropic, &Av_zero, &gram_skew, &imA_eq_kerA_perp,
        &preserves_form, &anticommute, &cross_translation, &triple_products_zero,
        &two_step_nilpotent})
    if (e->status == Status::Fail) return false;
  return true;
}

bool WolfCertificate::necessary_conditions_pass() const {
  return algebraic_conditions_pass() && free_action.status != Status::Fail;
}

Report WolfCertificate::to_report() const {
  Report r;
  for (const CheckEntry* e :
       {&square_zero, &v_perp_imA, &imA_isotropic, &Av_zero, &gram_skew, &imA_eq_kerA_perp,
        &preserves_form, &anticommute, &cross_translation, &triple_products_zero,
        &two_step_nilpotent, &free_action, &transitivity_evidence})
    r.entries.push_back(*e);
  return r;
}

WolfCertificate wolf_certificate(const std::vector<AffineIsometry>& gens,
                                 const CertificateOptions& options) {
  check_spaces(gens);
  WolfCertificate cert;
  cert.span = two_step_span(gens);
  const auto& xs = cert.span.elements;
  const auto& labels = cert.span.labels;
  const SpacePtr& space = gens.front().space();
  const Matrix& gram = space->gram();
  const std::size_t n = space->dim();

  CheckRecorder sq("square_zero"), perp("v_perp_imA"), iso("imA_isotropic"),
      av("Av_zero"), skew("gram_skew"), imker("imA_eq_kerA_perp");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Matrix& a = xs[i].A();
    const Matrix& v = xs[i].v();
    if (Matrix a2 = a * a; !a2.is_zero()) sq.fail(labels[i] + ": A^2", a2);
    // <v, A x> = 0 for all x  <=>  v^T gram A = 0
    if (Matrix w = v.transpose() * gram * a; !w.is_zero()) perp.fail(labels[i] + ": v^T gram A", w);
    if (Matrix w = a.transpose() * gram * a; !w.is_zero())
      iso.fail(labels[i] + ": A^T gram A", w);
    if (Matrix w = a * v; !w.is_zero()) av.fail(labels[i] + ": A v", w);
    if (Matrix w = gram * a + a.transpose() * gram; !w.is_zero())
      skew.fail(labels[i] + ": gram A + A^T gram", w);
    Matrix im = column_basis(a);
    Matrix ker = kernel(a);
    if (!same_span(im, orthogonal_complement(gram, ker)))
      imker.fail(labels[i] + ": im A != (ker A)^perp", im);
    else if (!same_span(ker, orthogonal_complement(gram, im)))
      imker.fail(labels[i] + ": ker A != (im A)^perp", ker);
  }
  cert.square_zero = sq.finish(xs.size());
  cert.v_perp_imA = perp.finish(xs.size());
  cert.imA_isotropic = iso.finish(xs.size());
  cert.Av_zero = av.finish(xs.size());
  cert.gram_skew = skew.finish(xs.size());
  cert.imA_eq_kerA_perp = imker.finish(xs.size());

  CheckRecorder form("preserves_form");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Matrix l = gens[i].linear();
    if (Matrix w = l.transpose() * gram * l - gram; !w.is_zero())
      form.fail("g" + std::to_string(i + 1) + ": (I+A)^T gram (I+A) - gram", w);
  }
  cert.preserves_form = form.finish(gens.size());

  CheckRecorder anti("anticommute"), cross("cross_translation"), triple("triple_products_zero"),
      nil("two_step_nilpotent");
  std::size_t pairs = 0, triples = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j) {
      ++pairs;
      const std::string where = labels[i] + " , " + labels[j];
      if (Matrix w = xs[i].A() * xs[j].A() + xs[j].A() * xs[i].A(); !w.is_zero())
        anti.fail(where + ": A_i A_j + A_j A_i", w);
      if (Matrix w = xs[i].A() * xs[j].v() + xs[j].A() * xs[i].v(); !w.is_zero())
        cross.fail(where + ": A_i v_j + A_j v_i", w);
    }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      Matrix aij = xs[i].A() * xs[j].A();
      InfinitesimalIsometry bij = bracket(xs[i], xs[j]);
      for (std::size_t k = 0; k < xs.size(); ++k) {
        ++triples;
        const std::string where = labels[i] + " , " + labels[j] + " , " + labels[k];
        if (Matrix w = aij * xs[k].A(); !w.is_zero()) triple.fail(where + ": A_i A_j A_k", w);
        InfinitesimalIsometry dbl = bracket(xs[k], bij);
        if (!dbl.is_zero()) nil.fail("[" + labels[k] + ", [" + labels[i] + ", " + labels[j] + "]]",
                                     dbl.homogeneous());
      }
    }
  cert.anticommute = anti.finish(pairs);
  cert.cross_translation = cross.finish(pairs);
  cert.triple_products_zero = triple.finish(triples);
  cert.two_step_nilpotent = nil.finish(triples);

  // freeness: each spanning element, then random combinations
  RationalSampler sampler(options.seed);
  CheckRecorder fr("free_action");
  std::size_t free_cases = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ++free_cases;
    if (!acts_freely(xs[i])) fr.fail(labels[i] + ": v in im A", hstack(xs[i].A(), xs[i].v()));
  }
  for (std::size_t s = 0; s < options.free_samples && !xs.empty(); ++s) {
    InfinitesimalIsometry x = InfinitesimalIsometry::zero(space);
    std::string where = "combination";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Rational c = sampler.next();
      x += c * xs[i];
      where += " " + to_string(c);
    }
    if (x.is_zero()) continue;
    ++free_cases;
    if (!acts_freely(x)) fr.fail(where + ": v in im A", hstack(x.A(), x.v()));
  }
  cert.free_action = fr.finish(free_cases);

  std::vector<InfinitesimalIsometry> centralizer = centralizer_algebra(gens);
  std::size_t min_rank = evaluation_rank(centralizer, Matrix(n, 1));
  for (std::size_t s = 0; s < options.transitivity_samples; ++s) {
    Matrix p(n, 1);
    for (std::size_t i = 0; i < n; ++i) p[i] = sampler.next();
    min_rank = std::min(min_rank, evaluation_rank(centralizer, p));
  }
  cert.transitivity_min_rank = min_rank;
  cert.transitivity_evidence.name = "transitivity_evidence";
  cert.transitivity_evidence.status = Status::Evidence;
  cert.transitivity_evidence.detail =
      (min_rank == n ? std::string("transitive") : std::string("inconclusive")) +
      ": centralizer algebra of dim " + std::to_string(centralizer.size()) +
      ", minimum evaluation rank " + std::to_string(min_rank) + " of " + std::to_string(n) +
      " at origin and " + std::to_string(options.transitivity_samples) + " sampled points";
  return cert;
}

std::vector<InfinitesimalIsometry> centralizer_algebra(const std::vector<AffineIsometry>& gens) {
  check_spaces(gens);
  const SpacePtr& space = gens.front().space();
  const Matrix& g = space->gram();
  const std::size_t n = space->dim();
  const std::size_t unknowns = n * n + n;
  auto b_index = [n](std::size_t i, std::size_t j) { return i * n + j; };
  auto w_index = [n](std::size_t i) { return n * n + i; };

  std::vector<Matrix> rows;
  auto new_row = [&]() -> Matrix& { return rows.emplace_back(1, unknowns); };
  // gram B + B^T gram = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix& r = new_row();
      for (std::size_t k = 0; k < n; ++k) {
        r(0, b_index(k, j)) += g(i, k);
        r(0, b_index(k, i)) += g(k, j);
      }
    }
  for (const auto& gen : gens) {
    const Matrix& a = gen.A();
    const Matrix& v = gen.v();
    // B A - A B = 0
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Matrix& r = new_row();
        for (std::size_t k = 0; k < n; ++k) {
          r(0, b_index(i, k)) += a(k, j);
          r(0, b_index(k, j)) -= a(i, k);
        }
      }
    // B v - A w = 0
    for (std::size_t i = 0; i < n; ++i) {
      Matrix& r = new_row();
      for (std::size_t k = 0; k < n; ++k) {
        r(0, b_index(i, k)) += v[k];
        r(0, w_index(k)) -= a(i, k);
      }
    }
  }
  Matrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i) system.set_block(i, 0, rows[i]);
  Matrix ker = kernel(system);

  std::vector<InfinitesimalIsometry> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Matrix b(n, n), w(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b(i, j) = ker(b_index(i, j), c);
      w[i] = ker(w_index(i), c);
    }
    out.emplace_back(space, std::move(b), std::move(w));
  }
  return out;
}

std::size_t evaluation_rank(const std::vector<InfinitesimalIsometry>& algebra, const Matrix& p) {
  if (algebra.empty()) return 0;
  std::vector<Matrix> cols;
  for (const auto& x : algebra) cols.push_back(x.at(p));
  return rank(Matrix::from_columns(cols, p.rows()));
}

bool holonomy_abelian(const std::vector<AffineIsometry>& gens) {
  CertificateOptions quick;
  quick.free_samples = 0;
  quick.transitivity_samples = 0;
  WolfCertificate cert = wolf_certificate(gens, quick);
  if (!cert.algebraic_conditions_pass()) {
    for (const auto& e : cert.to_report().entries)
      if (e.status == Status::Fail)
        throw PreconditionError("holonomy_abelian: certificate check " + e.name + " failed",
                                e.detail);
  }
  const auto& xs = cert.span.elements;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i].A() * xs[j].A() != xs[j].A() * xs[i].A()) return false;
  return true;
}

}  // namespace wolfkit
