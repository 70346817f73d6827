#include "btalg/oracle.hpp"

#include <chrono>

#include "btalg/json_io.hpp"

namespace btalg::oracle {

Mat dense_mul(const Mat& a, const Mat& b) {
  size_t rows = a.size();
  size_t inner = b.size();
  size_t cols = b.empty() ? 0 : b[0].size();
  Mat out(rows, Vec(cols, gr_zero()));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) {
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

bool dense_block_toeplitz(const Mat& m, int n, int d) {
  for (int bi = 1; bi < n; ++bi) {
    for (int bj = 1; bj < n; ++bj) {
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          if (!(m[bi * d + i][bj * d + j] == m[(bi - 1) * d + i][(bj - 1) * d + j])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

MatrixD dense_block_at(const Mat& m, int d, int bi, int bj) {
  MatrixD out(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out.at(i, j) = m[bi * d + i][bj * d + j];
  }
  return out;
}

int Rng::int_in(int lo, int hi) {
  return lo + static_cast<int>(engine_() % static_cast<uint64_t>(hi - lo + 1));
}

GaussianRational Rng::scalar(bool allow_imaginary) {
  GaussianRational x(int_in(-9, 9));
  if (allow_imaginary && int_in(0, 1) == 1) {
    x.im = Rational(int_in(-9, 9));
  }
  return x;
}

Poly Rng::poly(int max_degree, bool allow_imaginary) {
  int deg = int_in(-1, max_degree);
  if (deg < 0) return Poly::zero();
  std::vector<GaussianRational> coeffs(deg + 1);
  for (auto& c : coeffs) c = scalar(allow_imaginary);
  return Poly(std::move(coeffs));
}

Poly Rng::monic_poly(int degree, bool allow_imaginary) {
  std::vector<GaussianRational> coeffs(degree + 1);
  for (int i = 0; i < degree; ++i) coeffs[i] = scalar(allow_imaginary);
  coeffs[degree] = gr_one();
  return Poly(std::move(coeffs));
}

PMElement Rng::pm(const Poly& p) { return pm_reduce(poly(p.degree() - 1), p); }

BlockToeplitz<PMElement> Rng::toeplitz_pm(int n, const Poly& p) {
  BlockToeplitz<PMElement> t(n, pm_reduce(Poly::zero(), p));
  for (int j = -(n - 1); j <= n - 1; ++j) t.block(j) = pm(p);
  return t;
}

CyclicDiagonal<PMElement> Rng::cyclic_pm(int n, int order, const Poly& p) {
  CyclicDiagonal<PMElement> d;
  d.n = n;
  d.order = order;
  d.top = pm(p);
  if (order >= 1) d.bottom = pm(p);
  return d;
}

SinglyGenSpec Rng::singly_gen(int max_total_degree) {
  while (true) {
    int deg_plus = int_in(0, max_total_degree - 1);
    int deg_minus = int_in(0, max_total_degree - 1 - deg_plus);
    int deg_q = int_in(0, max_total_degree - deg_plus - deg_minus);
    if (deg_plus + deg_minus + deg_q < 1) continue;
    Poly p_plus = monic_poly(deg_plus);
    Poly p_minus = monic_poly(deg_minus);
    Poly q = monic_poly(deg_q);
    Poly p = p_plus * p_minus * q;
    for (int attempt = 0; attempt < 32; ++attempt) {
      Poly chi = poly(std::max(0, p.degree() - 1));
      if (chi.is_zero() || !poly_coprime(chi, p)) continue;
      return make_singly_gen(p, p_plus, p_minus, chi);
    }
  }
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> sigma;
  for (int k = 1; k <= n - 1; ++k) sigma.push_back(k);
  for (int i = static_cast<int>(sigma.size()) - 1; i > 0; --i) {
    std::swap(sigma[i], sigma[int_in(0, i)]);
  }
  return sigma;
}

BlockToeplitz<PMElement> random_member_pm(const AlgebraSpec& spec, uint64_t seed) {
  const auto* s = std::get_if<SinglyGenSpec>(&spec.family);
  if (!s) throw InvalidSpec("random_member_pm needs a singly generated spec");
  Rng rng(seed);
  PMElement proto = pm_reduce(Poly::zero(), s->p);
  BlockToeplitz<PMElement> t(spec.n, proto);
  t.block(0) = rng.pm(s->p);
  auto slice = bsg_slice_basis(*s);
  for (int k = 1; k <= spec.n - 1; ++k) {
    for (const auto& [top, bottom] : slice) {
      GaussianRational c(rng.int_in(-9, 9));
      t.block(k) = t.block(k) + entry_scale(top, c);
      t.block(k - spec.n) = t.block(k - spec.n) + entry_scale(bottom, c);
    }
  }
  return t;
}

namespace {

BlockToeplitz<MatrixD> random_member_matrix(const AlgebraSpec& spec, Rng& rng) {
  int n = spec.n;
  int d = spec.d;
  BlockToeplitz<MatrixD> t(n, MatrixD(d));
  auto random_diag = [&]() {
    MatrixD m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = rng.scalar();
    return m;
  };
  if (const auto* f = std::get_if<DiagonalTupleSpec>(&spec.family)) {
    t.block(0) = random_diag();
    for (int i = 1; i <= n - 1; ++i) {
      MatrixD top(d), bottom(d);
      for (int s = 0; s < d; ++s) {
        if (f->alphas[s].infinite) {
          bottom.at(s, s) = rng.scalar();
        } else {
          top.at(s, s) = rng.scalar();
          bottom.at(s, s) = f->alphas[s].value * top.at(s, s);
        }
      }
      t.block(i) = top;
      t.block(i - n) = bottom;
    }
    return t;
  }
  if (const auto* f = std::get_if<ScalarCirculantSpec>(&spec.family)) {
    AlgebraSpec dt{n, 1, DiagonalTupleSpec{{f->alpha}}};
    return random_member_matrix(dt, rng);
  }
  if (const auto* f = std::get_if<SchurOpqSpec>(&spec.family)) {
    auto random_opq = [&](bool diagonal) {
      OpqElement e(f->p, f->q);
      if (diagonal) e.lambda = rng.scalar();
      for (auto& c : e.x) c = rng.scalar();
      return opq_to_matrix(e);
    };
    t.block(0) = random_opq(true);
    for (int i = 1; i <= n - 1; ++i) {
      t.block(i) = random_opq(false);
      t.block(i - n) = random_opq(false);
    }
    return t;
  }
  if (std::holds_alternative<UpperTriSpec>(spec.family) ||
      std::holds_alternative<LowerTriSpec>(spec.family)) {
    bool upper = std::holds_alternative<UpperTriSpec>(spec.family);
    for (int j = -(n - 1); j <= n - 1; ++j) {
      if ((upper && j >= 1) || (!upper && j <= -1)) continue;
      MatrixD m(d);
      for (int i = 0; i < d; ++i) {
        for (int c = 0; c < d; ++c) m.at(i, c) = rng.scalar();
      }
      t.block(j) = m;
    }
    return t;
  }
  if (const auto* f = std::get_if<PseudocirculantSpec>(&spec.family)) {
    // Sample (T_j, T_{j-n}) from the nullspace of A T_j - B T_{j-n} = 0.
    int cd = d * d;
    Mat rows(cd, Vec(2 * cd, gr_zero()));
    for (int r = 0; r < cd; ++r) {
      MatrixD basis(d);
      basis.at(r / d, r % d) = gr_one();
      Vec top = entry_coords(f->a * basis);
      Vec bottom = entry_coords(f->b * basis);
      for (int c = 0; c < cd; ++c) {
        rows[c][r] = rows[c][r] + top[c];
        rows[c][cd + r] = rows[c][cd + r] - bottom[c];
      }
    }
    auto basis = nullspace(rows, 2 * cd);
    MatrixD full(d);
    for (int i = 0; i < d; ++i) {
      for (int c = 0; c < d; ++c) full.at(i, c) = rng.scalar();
    }
    t.block(0) = full;
    for (int j = 1; j <= n - 1; ++j) {
      Vec combo(2 * cd, gr_zero());
      for (const auto& b : basis) {
        GaussianRational c(rng.int_in(-9, 9));
        for (size_t i = 0; i < combo.size(); ++i) combo[i] = combo[i] + c * b[i];
      }
      t.block(j) = entry_from_coords(MatrixD(d), Vec(combo.begin(), combo.begin() + cd));
      t.block(j - n) = entry_from_coords(MatrixD(d), Vec(combo.begin() + cd, combo.end()));
    }
    return t;
  }
  throw InvalidSpec("unsupported spec for matrix members");
}

}  // namespace

std::variant<BlockToeplitz<MatrixD>, BlockToeplitz<PMElement>> random_member(
    const AlgebraSpec& spec, uint64_t seed) {
  if (std::holds_alternative<SinglyGenSpec>(spec.family)) {
    return random_member_pm(spec, seed);
  }
  Rng rng(seed);
  return random_member_matrix(spec, rng);
}

namespace {

using SuiteFn = std::function<void(const TrialConfig&, VerificationReport&)>;

std::string pair_counterexample(const BlockToeplitz<PMElement>& a,
                                const BlockToeplitz<PMElement>& b) {
  io::json j{{"A", io::to_json(a)}, {"B", io::to_json(b)}};
  return j.dump();
}

void prod_suite(const TrialConfig& config, VerificationReport& report,
                const CompatibleFn& structured) {
  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    int n = rng.int_in(config.n_min, config.n_max);
    int d = rng.int_in(config.d_min, config.d_max);
    Poly p = rng.monic_poly(d);
    auto a = rng.toeplitz_pm(n, p);
    auto b = rng.toeplitz_pm(n, p);
    bool fast = structured(a, b);
    Mat prod = dense_mul(realize_scalar(a), realize_scalar(b));
    bool slow = dense_block_toeplitz(prod, n, d);
    if (fast != slow) {
      report.failures.push_back(
          {trial, "compatibility disagrees with dense diagonal scan",
           pair_counterexample(a, b)});
    }
  }
}

void commute_suite(const TrialConfig& config, VerificationReport& report) {
  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    int n = rng.int_in(config.n_min, std::min(config.n_max, 4));
    SinglyGenSpec s = rng.singly_gen(3);
    AlgebraSpec spec{n, s.p.degree(), s};
    auto a = random_member_pm(spec, rng.int_in(1, 1 << 30));
    auto b = random_member_pm(spec, rng.int_in(1, 1 << 30));
    if (!compatible(a, b)) {
      report.failures.push_back(
          {trial, "members of one algebra must be compatible", pair_counterexample(a, b)});
      continue;
    }
    Mat ab = dense_mul(realize_scalar(a), realize_scalar(b));
    Mat ba = dense_mul(realize_scalar(b), realize_scalar(a));
    if (ab != ba) {
      report.failures.push_back(
          {trial, "compatible pair with commuting entries failed AB = BA",
           pair_counterexample(a, b)});
    }
  }
}

void cdprod_suite(const TrialConfig& config, VerificationReport& report) {
  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    int n = rng.int_in(std::max(2, config.n_min), config.n_max);
    int d = rng.int_in(config.d_min, config.d_max);
    Poly p = rng.monic_poly(d);
    int k = rng.int_in(0, n - 1);
    int l = rng.int_in(0, n - 1);
    auto a = rng.cyclic_pm(n, k, p);
    auto b = rng.cyclic_pm(n, l, p);
    auto res = cyclic_product(a, b);
    if (res.order != (k + l) % n) {
      report.failures.push_back({trial, "cyclic product order law violated", ""});
      continue;
    }
    Mat dense = dense_mul(realize_scalar(a.embed()), realize_scalar(b.embed()));
    Mat structured = realize_scalar(res.full);
    if (dense != structured) {
      report.failures.push_back(
          {trial, "cyclic product entries differ from dense multiplication",
           pair_counterexample(a.embed(), b.embed())});
    }
  }
}

void closure_suite(const TrialConfig& config, VerificationReport& report) {
  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    int n = rng.int_in(config.n_min, std::min(config.n_max, 4));
    SinglyGenSpec s = rng.singly_gen(4);
    AlgebraSpec spec{n, s.p.degree(), s};
    auto a = random_member_pm(spec, rng.int_in(1, 1 << 30));
    auto b = random_member_pm(spec, rng.int_in(1, 1 << 30));
    auto res = product(a, b);
    if (!res.toeplitz) {
      report.failures.push_back(
          {trial, "product of members left the Toeplitz space", pair_counterexample(a, b)});
      continue;
    }
    std::string witness;
    if (!membership(spec, *res.as_toeplitz, &witness)) {
      report.failures.push_back(
          {trial, "product of members left the algebra: " + witness,
           pair_counterexample(a, b)});
    }
  }
}

// Extensional comparison of the order-1 slices, independent of bsg_equal.
bool slices_extensionally_equal(const SinglyGenSpec& a, const SinglyGenSpec& b) {
  auto coords = [](const std::vector<std::pair<PMElement, PMElement>>& slice) {
    std::vector<Vec> vecs;
    for (const auto& [top, bottom] : slice) {
      Vec v = entry_coords(top);
      Vec w = entry_coords(bottom);
      v.insert(v.end(), w.begin(), w.end());
      vecs.push_back(std::move(v));
    }
    return vecs;
  };
  return same_span(coords(bsg_slice_basis(a)), coords(bsg_slice_basis(b)));
}

void equal_suite(const TrialConfig& config, VerificationReport& report) {
  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    SinglyGenSpec s = rng.singly_gen(4);
    SinglyGenSpec other;
    if (trial % 2 == 0) {
      // Same algebra, chi shifted by a multiple of q.
      Poly chi2 = s.chi + rng.poly(2) * s.q;
      if (chi2.is_zero() || !poly_coprime(chi2, s.p)) chi2 = s.chi;
      other = make_singly_gen(s.p, s.p_plus, s.p_minus, chi2);
    } else {
      other = rng.singly_gen(4);
      if (other.p != s.p) {
        // Different modulus: replace by a chi perturbation that stays valid.
        Poly chi2 = s.chi + Poly::one();
        if (chi2.is_zero() || !poly_coprime(chi2, s.p)) chi2 = s.chi + Poly::constant(GaussianRational(2));
        if (chi2.is_zero() || !poly_coprime(chi2, s.p)) chi2 = s.chi;
        other = make_singly_gen(s.p, s.p_plus, s.p_minus, chi2);
      }
    }
    bool claimed = bsg_equal(s, other);
    bool extensional = slices_extensionally_equal(s, other);
    if (claimed != extensional) {
      io::json j{{"s", io::spec_to_json({2, s.p.degree(), s})},
                 {"other", io::spec_to_json({2, other.p.degree(), other})}};
      report.failures.push_back(
          {trial, "bsg_equal disagrees with extensional slice comparison", j.dump()});
    }
  }
}

void classify_suite(const TrialConfig& config, VerificationReport& report) {
  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    int n = rng.int_in(config.n_min, std::min(config.n_max, 4));
    SinglyGenSpec s = rng.singly_gen(4);
    auto gens = bsg_generators(s, n);
    try {
      ClassificationReport rep = classify_maximal(gens);
      const auto& recovered = std::get<SinglyGenSpec>(rep.spec.family);
      if (!bsg_equal(s, recovered)) {
        io::json j{{"input", io::spec_to_json({n, s.p.degree(), s})},
                   {"output", io::spec_to_json(rep.spec)}};
        report.failures.push_back({trial, "classification round trip mismatch", j.dump()});
      }
    } catch (const Error& e) {
      io::json j{{"input", io::spec_to_json({n, s.p.degree(), s})}};
      report.failures.push_back(
          {trial, std::string("classification raised ") + e.name(), j.dump()});
    }
  }
}

void action_suite(const TrialConfig& config, VerificationReport& report) {
  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    int n = rng.int_in(std::max(2, config.n_min), std::min(config.n_max, 5));
    SinglyGenSpec s = rng.singly_gen(4);
    AlgebraSpec spec{n, s.p.degree(), s};
    auto t = random_member_pm(spec, rng.int_in(1, 1 << 30));
    for (int k = 0; k <= n - 1; ++k) {
      if (!membership(spec, project_Ek(t, k).embed())) {
        report.failures.push_back({trial, "projection E_k left the algebra",
                                   io::to_json(t).dump()});
        break;
      }
    }
    auto sigma = rng.permutation(n);
    if (!membership(spec, permute(t, sigma))) {
      report.failures.push_back({trial, "permuted member left the algebra",
                                 io::to_json(t).dump()});
    }
  }
}

void powers_suite(const TrialConfig& config, VerificationReport& report) {
  Rng rng(config.seed);
  for (int trial = 0; trial < config.trials; ++trial) {
    int n = rng.int_in(std::max(2, config.n_min), std::min(config.n_max, 5));
    int d = rng.int_in(config.d_min, config.d_max);
    Poly p = rng.monic_poly(d);
    int order = rng.int_in(0, n - 1);
    auto cd = rng.cyclic_pm(n, order, p);
    Mat base = realize_scalar(cd.embed());
    Mat power = base;
    for (int k = 2; k <= n + 1; ++k) {
      power = dense_mul(power, base);
      if (!dense_block_toeplitz(power, n, d)) {
        report.failures.push_back({trial, "cyclic diagonal power not block Toeplitz",
                                   io::to_json(cd.embed()).dump()});
        break;
      }
      // Check cyclic-diagonal support of the power.
      int expected = (order * k) % n;
      bool support_ok = true;
      for (int bi = 0; bi < n && support_ok; ++bi) {
        for (int bj = 0; bj < n && support_ok; ++bj) {
          int off = bi - bj;
          if (off == expected || off == expected - n) continue;
          if (!dense_block_at(power, d, bi, bj).is_zero()) support_ok = false;
        }
      }
      if (!support_ok) {
        report.failures.push_back({trial, "cyclic diagonal power has extra support",
                                   io::to_json(cd.embed()).dump()});
        break;
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "prod", "commute", "cdprod", "closure", "equal", "classify", "action", "powers"};
  return names;
}

VerificationReport run_prod_suite_with(const TrialConfig& config, const CompatibleFn& fn) {
  VerificationReport report;
  report.suite = "prod";
  report.trials = config.trials;
  auto start = std::chrono::steady_clock::now();
  prod_suite(config, report, fn);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport run_suite(const TrialConfig& config) {
  VerificationReport report;
  report.suite = config.suite;
  report.trials = config.trials;
  auto start = std::chrono::steady_clock::now();
  if (config.suite == "prod") {
    prod_suite(config, report, [](const auto& a, const auto& b) { return compatible(a, b); });
  } else if (config.suite == "commute") {
    commute_suite(config, report);
  } else if (config.suite == "cdprod") {
    cdprod_suite(config, report);
  } else if (config.suite == "closure") {
    closure_suite(config, report);
  } else if (config.suite == "equal") {
    equal_suite(config, report);
  } else if (config.suite == "classify") {
    classify_suite(config, report);
  } else if (config.suite == "action") {
    action_suite(config, report);
  } else if (config.suite == "powers") {
    powers_suite(config, report);
  } else {
    throw UnknownSuite("no suite named '" + config.suite + "'");
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace btalg::oracle
