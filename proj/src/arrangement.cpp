#include "semispace/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "semispace/errors.hpp"
#include "semispace/poly.hpp"

namespace semispace {

AffineSlice AffineSlice::orthogonal_complement(const QMatrix& a, QVector u) {
  if (static_cast<int>(u.size()) != a.col_count()) {
    throw InputError("offset length does not match ambient dimension");
  }
  AffineSlice slice;
  slice.basis = kernel_basis(a);
  slice.offset = std::move(u);
  return slice;
}

QVector AffineSlice::point(const QVector& lambda) const {
  QVector x = offset;
  for (int k = 0; k < basis.row_count(); ++k) {
    if (lambda[k] == 0) continue;
    for (int j = 0; j < ambient(); ++j) x[j] += lambda[k] * basis.rows[k][j];
  }
  return x;
}

QVector AffineSlice::coordinates(const QVector& x) const {
  const int m = dim();
  QVector diff(ambient());
  for (int j = 0; j < ambient(); ++j) diff[j] = x[j] - offset[j];
  // Gram system: Σ_k λ_k <B_k, B_l> = <diff, B_l>.
  QMatrix sys = QMatrix::zero(m, m + 1);
  for (int l = 0; l < m; ++l) {
    for (int k = 0; k < m; ++k) sys.rows[l][k] = dot(basis.rows[k], basis.rows[l]);
    sys.rows[l][m] = dot(diff, basis.rows[l]);
  }
  RrefResult r = rref(sys);
  QVector lambda(m, BigRational(0));
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivot_cols[i] == m) throw InputError("point does not lie on the slice");
    lambda[r.pivot_cols[i]] = r.matrix.rows[i][m];
  }
  if (point(lambda) != x) throw InputError("point does not lie on the slice");
  return lambda;
}

std::string SignPattern::to_string() const {
  std::string out;
  for (int i : set_elements(i_set)) out += sign(i) > 0 ? '+' : '-';
  return out;
}

namespace {

// x_i as an affine function of λ: (coefficients over λ, constant u_i).
std::pair<QVector, BigRational> coordinate_function(const AffineSlice& slice, int i) {
  QVector coef(slice.dim());
  for (int k = 0; k < slice.dim(); ++k) coef[k] = slice.basis.rows[k][i];
  return {std::move(coef), slice.offset[i]};
}

}  // namespace

std::vector<RegionReport> enumerate_regions(const AffineSlice& slice, SmallSet i_set) {
  for (int i : set_elements(i_set)) {
    auto [coef, cst] = coordinate_function(slice, i);
    if (qvec_is_zero(coef) && cst == 0) {
      throw PreconditionError("coordinate x_" + std::to_string(i + 1) +
                              " vanishes identically on the slice; u is not generic");
    }
  }

  std::vector<RegionReport> regions;
  const auto elements = set_elements(i_set);
  const SmallSet sigma_count = SmallSet{1} << elements.size();
  for (SmallSet bits = 0; bits < sigma_count; ++bits) {
    SignPattern sigma;
    sigma.i_set = i_set;
    for (std::size_t k = 0; k < elements.size(); ++k) {
      if (set_contains(bits, static_cast<int>(k))) {
        sigma.positives = set_add(sigma.positives, elements[k]);
      }
    }

    LinearSystem sys;
    for (int i : elements) {
      auto [coef, cst] = coordinate_function(slice, i);
      if (sigma.sign(i) < 0) {
        for (auto& c : coef) c = -c;
        cst = -cst;
      }
      sys.add_gt(std::move(coef), -cst);  // σ_i·(u_i + coef·λ) > 0
    }
    if (sys.strict.empty()) sys.add_ge(QVector(slice.dim(), BigRational(0)), 0);

    auto lambda = lp_feasible(sys);
    if (!lambda) continue;
    RegionReport region;
    region.pattern = sigma;
    region.witness_lambda = *lambda;
    region.witness = slice.point(*lambda);
    regions.push_back(std::move(region));
  }
  return regions;
}

bool recession_trivial(const AffineSlice& slice, SmallSet i_set, const SignPattern& sigma) {
  // A nonzero v ∈ L⊥ with v_j = 0 off I and σ_i v_i ≥ 0 on I exists iff the
  // normalization Σ_i σ_i v_i = 1 is feasible.
  const int n = slice.ambient();
  LinearSystem sys;
  QVector norm(slice.dim(), BigRational(0));
  for (int j = 0; j < n; ++j) {
    auto [coef, cst] = coordinate_function(slice, j);
    (void)cst;  // recession directions ignore the offset
    if (!set_contains(i_set, j)) {
      sys.add_eq(std::move(coef), 0);
    } else {
      QVector signed_coef = coef;
      if (sigma.sign(j) < 0) {
        for (auto& c : signed_coef) c = -c;
      }
      for (int k = 0; k < slice.dim(); ++k) norm[k] += signed_coef[k];
      sys.add_ge(std::move(signed_coef), 0);
    }
  }
  sys.add_eq(std::move(norm), 1);
  return !lp_feasible(sys).has_value();
}

namespace {

std::vector<double> to_doubles(const QVector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(rat_to_double(x));
  return out;
}

struct NewtonWorkspace {
  std::vector<std::vector<double>> basis;  // m x n
  std::vector<double> offset;              // n
  SmallSet i_set;

  int m() const { return static_cast<int>(basis.size()); }
  int n() const { return static_cast<int>(offset.size()); }

  std::vector<double> point(const std::vector<double>& lambda) const {
    std::vector<double> x = offset;
    for (int k = 0; k < m(); ++k) {
      for (int j = 0; j < n(); ++j) x[j] += lambda[k] * basis[k][j];
    }
    return x;
  }

  bool inside(const std::vector<double>& x, const SignPattern& sigma) const {
    for (int i : set_elements(i_set)) {
      if (sigma.sign(i) * x[i] <= 0) return false;
    }
    return true;
  }

  double objective(const std::vector<double>& x) const {
    double f = 0;
    for (int j = 0; j < n(); ++j) {
      if (set_contains(i_set, j)) {
        f -= std::log(std::fabs(x[j]));
      } else {
        f += 0.5 * x[j] * x[j];
      }
    }
    return f;
  }
};

// Dense symmetric solve with partial pivoting; desk-scale sizes only.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    if (a[col][col] == 0) {
      throw ResourceCutoff(ResourceCutoff::Kind::IterationLimit,
                           "singular Newton system (near-degenerate slice)");
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<double> newton_on_slice(const NewtonWorkspace& ws, const SignPattern& sigma,
                                    std::vector<double> lambda, const NewtonOptions& opts,
                                    std::vector<double>* lambda_out) {
  const int m = ws.m();
  if (m == 0) {
    if (lambda_out) lambda_out->clear();
    return ws.offset;
  }

  auto gradient = [&](const std::vector<double>& l) {
    const std::vector<double> x = ws.point(l);
    std::vector<double> grad(m, 0.0);
    for (int k = 0; k < m; ++k) {
      for (int j = 0; j < ws.n(); ++j) {
        const double gj = set_contains(ws.i_set, j) ? -1.0 / x[j] : x[j];
        grad[k] += ws.basis[k][j] * gj;
      }
    }
    return grad;
  };
  auto norm = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };
  auto newton_step = [&](const std::vector<double>& l, const std::vector<double>& grad) {
    const std::vector<double> x = ws.point(l);
    std::vector<double> hess_x(ws.n());
    for (int j = 0; j < ws.n(); ++j) {
      hess_x[j] = set_contains(ws.i_set, j) ? 1.0 / (x[j] * x[j]) : 1.0;
    }
    std::vector<std::vector<double>> hess(m, std::vector<double>(m, 0.0));
    for (int k = 0; k < m; ++k) {
      for (int l2 = k; l2 < m; ++l2) {
        double h = 0;
        for (int j = 0; j < ws.n(); ++j) h += ws.basis[k][j] * hess_x[j] * ws.basis[l2][j];
        hess[k][l2] = hess[l2][k] = h;
      }
    }
    std::vector<double> rhs(m);
    for (int k = 0; k < m; ++k) rhs[k] = -grad[k];
    return solve_dense(hess, rhs);
  };
  auto finish = [&](std::vector<double> l) {
    // Polish: undamped Newton steps while they strictly shrink the gradient,
    // so recovered points sit at machine precision rather than just below
    // the requested tolerance.
    double best = norm(gradient(l));
    for (int polish = 0; polish < 6 && best > 0; ++polish) {
      std::vector<double> grad = gradient(l);
      std::vector<double> delta = newton_step(l, grad);
      std::vector<double> trial(m);
      for (int k = 0; k < m; ++k) trial[k] = l[k] + delta[k];
      if (!ws.inside(ws.point(trial), sigma)) break;
      const double trial_norm = norm(gradient(trial));
      if (trial_norm >= best) break;
      best = trial_norm;
      l = std::move(trial);
    }
    if (lambda_out) *lambda_out = l;
    return ws.point(l);
  };

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    const std::vector<double> grad = gradient(lambda);
    if (norm(grad) < opts.tol) return finish(lambda);

    std::vector<double> delta = newton_step(lambda, grad);
    double slope = 0;
    for (int k = 0; k < m; ++k) slope += grad[k] * delta[k];

    // Once the Newton decrement −slope is below double resolution of the
    // objective, Armijo comparisons are noise; take the undamped step (still
    // halved until inside the region), which is the quadratic regime anyway.
    const bool quadratic_regime = -slope < 1e-12;
    const std::vector<double> x = ws.point(lambda);
    const double f0 = ws.objective(x);
    double step = 1.0;
    bool moved = false;
    for (int halvings = 0; halvings < 80; ++halvings) {
      std::vector<double> trial(m);
      for (int k = 0; k < m; ++k) trial[k] = lambda[k] + step * delta[k];
      const std::vector<double> xt = ws.point(trial);
      if (ws.inside(xt, sigma) &&
          (quadratic_regime || ws.objective(xt) <= f0 + 1e-4 * step * slope)) {
        lambda = std::move(trial);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      throw ResourceCutoff(ResourceCutoff::Kind::IterationLimit,
                           "Newton line search stalled");
    }
  }
  throw ResourceCutoff(ResourceCutoff::Kind::IterationLimit,
                       "Newton did not converge within the iteration cap");
}

}  // namespace

std::vector<double> minimize_region(const AffineSlice& slice, SmallSet i_set,
                                    const SignPattern& sigma, const QVector& witness,
                                    const NewtonOptions& opts) {
  NewtonWorkspace ws;
  ws.i_set = i_set;
  ws.offset = to_doubles(slice.offset);
  for (const auto& row : slice.basis.rows) ws.basis.push_back(to_doubles(row));
  QVector lambda0 = slice.coordinates(witness);
  return newton_on_slice(ws, sigma, to_doubles(lambda0), opts, nullptr);
}

CensusReport real_point_census(const QMatrix& a, SmallSet i_set, const QVector& u,
                               const QVector& w, double residual_tol, std::uint64_t seed,
                               const NewtonOptions& newton) {
  const Matroid m = matroid_from_matrix(a);
  for (int i : set_elements(i_set)) {
    if (m.is_loop(i)) {
      throw PreconditionError("element " + std::to_string(i + 1) +
                              " of I is a loop of M(L); inv_I(L) is empty");
    }
  }

  CensusReport census;
  census.i_set = i_set;
  census.u = u;
  census.residual_tol = residual_tol;
  census.degree = degree(m, i_set, w);

  AffineSlice slice = AffineSlice::orthogonal_complement(a, u);
  census.regions = enumerate_regions(slice, i_set);

  std::vector<Poly> minus_polys;
  for (const auto& cf : circuit_forms(a, m)) {
    minus_polys.push_back(circuit_polynomial_minus(cf, i_set));
  }

  NewtonWorkspace ws;
  ws.i_set = i_set;
  ws.offset = to_doubles(slice.offset);
  for (const auto& row : slice.basis.rows) ws.basis.push_back(to_doubles(row));

  std::vector<std::vector<double>> recovered;
  for (auto& region : census.regions) {
    region.recession_trivial = recession_trivial(slice, i_set, region.pattern);
    if (!region.recession_trivial) continue;
    ++census.qualifying;

    std::vector<double> lambda_out;
    std::vector<double> p;
    try {
      p = newton_on_slice(ws, region.pattern, to_doubles(region.witness_lambda), newton,
                          &lambda_out);
    } catch (const ResourceCutoff& e) {
      throw ResourceCutoff(e.kind(), std::string(e.what()) + " (region " +
                                         region.pattern.to_string() + ")");
    }
    double residual = 0;
    for (const auto& f : minus_polys) {
      residual = std::max(residual, std::fabs(f.eval_double(p)));
    }
    region.real_point = p;
    region.real_lambda = lambda_out;
    region.residual = residual;
    if (residual < residual_tol) {
      ++census.points_recovered;
      recovered.push_back(std::move(p));
    }
  }

  census.min_separation = 0;
  for (std::size_t i = 0; i < recovered.size(); ++i) {
    for (std::size_t j = i + 1; j < recovered.size(); ++j) {
      double d2 = 0;
      for (std::size_t k = 0; k < recovered[i].size(); ++k) {
        const double diff = recovered[i][k] - recovered[j][k];
        d2 += diff * diff;
      }
      const double d = std::sqrt(d2);
      if (census.min_separation == 0 || d < census.min_separation) {
        census.min_separation = d;
      }
    }
  }

  // Genericity surrogate: the census pattern sets must be stable under one
  // small seeded rational perturbation of u.
  std::mt19937_64 rng(seed);
  QVector u_pert = u;
  for (auto& ui : u_pert) {
    const long r = 1 + static_cast<long>(rng() % 17);
    const long sign_bit = rng() % 2 ? 1 : -1;
    ui += BigRational(sign_bit * r, 1009);
  }
  try {
    AffineSlice pert = AffineSlice::orthogonal_complement(a, u_pert);
    auto pert_regions = enumerate_regions(pert, i_set);
    auto key = [](const RegionReport& r) { return r.pattern.positives; };
    std::vector<SmallSet> base_pat, pert_pat, base_q, pert_q;
    for (const auto& r : census.regions) {
      base_pat.push_back(key(r));
      if (r.recession_trivial) base_q.push_back(key(r));
    }
    for (auto& r : pert_regions) {
      pert_pat.push_back(key(r));
      if (recession_trivial(pert, i_set, r.pattern)) pert_q.push_back(key(r));
    }
    if (base_pat != pert_pat) {
      census.generic_ok = false;
      census.genericity_notes.push_back(
          "feasible sign patterns changed under perturbation of u");
    }
    if (base_q != pert_q) {
      census.generic_ok = false;
      census.genericity_notes.push_back(
          "qualifying sign patterns changed under perturbation of u");
    }
  } catch (const PreconditionError& e) {
    census.generic_ok = false;
    census.genericity_notes.push_back(std::string("perturbed census failed: ") + e.what());
  }
  return census;
}

std::string census_svg(const AffineSlice& slice, SmallSet i_set, const CensusReport& census) {
  if (slice.dim() != 2) {
    throw InputError("SVG output is only available for 2-dimensional slices");
  }

  double min_x = -1, max_x = 1, min_y = -1, max_y = 1;
  auto grow = [&](double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  };
  for (const auto& region : census.regions) {
    grow(rat_to_double(region.witness_lambda[0]), rat_to_double(region.witness_lambda[1]));
    if (region.real_lambda) grow((*region.real_lambda)[0], (*region.real_lambda)[1]);
  }
  const double margin = 0.35 * std::max(max_x - min_x, max_y - min_y) + 0.5;
  min_x -= margin;
  max_x += margin;
  min_y -= margin;
  max_y += margin;

  const double width = 480, height = 480;
  auto sx = [&](double x) { return (x - min_x) / (max_x - min_x) * width; };
  auto sy = [&](double y) { return height - (y - min_y) / (max_y - min_y) * height; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Each line {λ : u_i + λ·B_i = 0} clipped against the viewport.
  for (int i : set_elements(i_set)) {
    const double a0 = rat_to_double(slice.basis.rows[0][i]);
    const double a1 = rat_to_double(slice.basis.rows[1][i]);
    const double c = -rat_to_double(slice.offset[i]);
    std::vector<std::pair<double, double>> hits;
    auto try_hit = [&](double x, double y, bool valid) {
      if (valid && x >= min_x - 1e-9 && x <= max_x + 1e-9 && y >= min_y - 1e-9 &&
          y <= max_y + 1e-9) {
        hits.emplace_back(x, y);
      }
    };
    if (a1 != 0) {
      try_hit(min_x, (c - a0 * min_x) / a1, true);
      try_hit(max_x, (c - a0 * max_x) / a1, true);
    }
    if (a0 != 0) {
      try_hit((c - a1 * min_y) / a0, min_y, true);
      try_hit((c - a1 * max_y) / a0, max_y, true);
    }
    if (hits.size() < 2) continue;
    std::sort(hits.begin(), hits.end());
    const auto& p1 = hits.front();
    const auto& p2 = hits.back();
    svg << "  <line x1=\"" << sx(p1.first) << "\" y1=\"" << sy(p1.second) << "\" x2=\""
        << sx(p2.first) << "\" y2=\"" << sy(p2.second)
        << "\" stroke=\"#444\" stroke-width=\"1.2\"/>\n";
    svg << "  <text x=\"" << sx(p2.first) - 28 << "\" y=\"" << sy(p2.second) + 12
        << "\" font-size=\"11\" fill=\"#444\">x" << i + 1 << "=0</text>\n";
  }

  for (const auto& region : census.regions) {
    if (!region.real_lambda) continue;
    svg << "  <circle cx=\"" << sx((*region.real_lambda)[0]) << "\" cy=\""
        << sy((*region.real_lambda)[1])
        << "\" r=\"4\" fill=\"#c0392b\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace semispace
