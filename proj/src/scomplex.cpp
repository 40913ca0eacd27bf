#include "semispace/scomplex.hpp"

#include <algorithm>

#include "semispace/errors.hpp"

namespace semispace {

namespace {

void sort_facets(std::vector<SmallSet>& facets) {
  std::sort(facets.begin(), facets.end(), [](SmallSet a, SmallSet b) {
    int sa = set_size(a), sb = set_size(b);
    return sa != sb ? sa < sb : a < b;
  });
}

int argmin_w(SmallSet s, const QVector& w) {
  int best = -1;
  for (int e : set_elements(s)) {
    if (best < 0 || w[e] < w[best]) best = e;
  }
  return best;
}

int argmax_w(SmallSet s, const QVector& w) {
  int best = -1;
  for (int e : set_elements(s)) {
    if (best < 0 || w[e] > w[best]) best = e;
  }
  return best;
}

// Facets of {masks with is_face} where is_face is downward closed.
std::vector<SmallSet> facets_of_face_table(const std::vector<char>& is_face, int n) {
  std::vector<SmallSet> facets;
  const SmallSet all = full_set(n);
  for (SmallSet s = 0; s <= all; ++s) {
    if (!is_face[s]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!set_contains(s, v) && is_face[set_add(s, v)]) maximal = false;
    }
    if (maximal) facets.push_back(s);
    if (s == all) break;
  }
  sort_facets(facets);
  return facets;
}

}  // namespace

SimplicialComplex SimplicialComplex::on_ground_set(int n) {
  SimplicialComplex dx;
  dx.n_vertices = n;
  for (int i = 1; i <= n; ++i) dx.labels.push_back(std::to_string(i));
  return dx;
}

bool SimplicialComplex::is_face(SmallSet s) const {
  for (SmallSet f : facets) {
    if (set_subset(s, f)) return true;
  }
  return false;
}

int SimplicialComplex::dim() const {
  int d = -2;
  for (SmallSet f : facets) d = std::max(d, set_size(f) - 1);
  return d;
}

void SimplicialComplex::set_facets(std::vector<SmallSet> f) {
  facets = inclusion_maximal(std::move(f));
  sort_facets(facets);
}

void require_distinct(const QVector& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] == w[j]) {
        throw PreconditionError("weight vector has tied coordinates (w[" +
                                std::to_string(i + 1) + "] = w[" + std::to_string(j + 1) +
                                "])");
      }
    }
  }
}

SmallSet i_broken_circuit(SmallSet c, SmallSet i_set, const QVector& w) {
  require_distinct(w);
  if (c == 0) throw PreconditionError("broken circuit of the empty set is undefined");
  if (set_subset(c, i_set)) return set_remove(c, argmin_w(c, w));
  return set_add(c & i_set, argmax_w(c & ~i_set, w));
}

SimplicialComplex semi_broken_complex(const Matroid& m, SmallSet i_set, const QVector& w) {
  require_distinct(w);
  SimplicialComplex dx = SimplicialComplex::on_ground_set(m.n);

  std::vector<SmallSet> broken;
  for (SmallSet c : m.circuits) {
    SmallSet b = i_broken_circuit(c, i_set, w);
    if (b == 0) return dx;  // loop inside I: void complex
    broken.push_back(b);
  }
  broken = inclusion_minimal(std::move(broken));

  std::vector<char> is_face(SmallSet{1} << m.n, 1);
  for (SmallSet s = 0; s < (SmallSet{1} << m.n); ++s) {
    for (SmallSet b : broken) {
      if (set_subset(b, s)) {
        is_face[s] = 0;
        break;
      }
    }
  }
  dx.facets = facets_of_face_table(is_face, m.n);
  return dx;
}

long long facet_count_recursive(const Matroid& m, SmallSet i_set, const QVector& w) {
  require_distinct(w);
  for (int i : set_elements(i_set)) {
    if (m.is_loop(i)) return 0;
  }
  if (i_set == 0) return 1;

  const int i = argmax_w(i_set, w);
  auto transported = [&](const Minor& minor) {
    SmallSet new_i = 0;
    QVector new_w(minor.matroid.n);
    for (int k = 0; k < minor.matroid.n; ++k) {
      const int old = minor.old_of_new[k];
      new_w[k] = w[old];
      if (old != i && set_contains(i_set, old)) new_i = set_add(new_i, k);
    }
    return std::pair<SmallSet, QVector>(new_i, std::move(new_w));
  };

  Minor contraction = contract_element(m, i);
  auto [ci, cw] = transported(contraction);
  long long total = facet_count_recursive(contraction.matroid, ci, cw);
  if (!m.is_coloop(i)) {
    Minor deletion = delete_element(m, i);
    auto [di, dw] = transported(deletion);
    total += facet_count_recursive(deletion.matroid, di, dw);
  }
  return total;
}

SimplicialComplex cone(const SimplicialComplex& dx, const std::string& new_label) {
  SimplicialComplex out = dx;
  const int v = out.n_vertices++;
  out.labels.push_back(new_label);
  for (SmallSet& f : out.facets) f = set_add(f, v);
  return out;
}

SimplicialComplex link(const SimplicialComplex& dx, SmallSet sigma) {
  if (!dx.is_face(sigma)) {
    throw InputError("link requested at a non-face");
  }
  SimplicialComplex out;
  out.n_vertices = dx.n_vertices;
  out.labels = dx.labels;
  std::vector<SmallSet> candidates;
  for (SmallSet f : dx.facets) {
    if (set_subset(sigma, f)) candidates.push_back(f & ~sigma);
  }
  out.set_facets(std::move(candidates));
  return out;
}

FHVectors fh_vectors(const SimplicialComplex& dx) {
  FHVectors out;
  if (dx.is_void()) return out;

  const int d = dx.dim() + 1;
  out.f.assign(d + 1, 0);
  const SmallSet all = full_set(dx.n_vertices);
  for (SmallSet s = 0; s <= all; ++s) {
    if (dx.is_face(s)) ++out.f[set_size(s)];
    if (s == all) break;
  }

  // Σ_i f_{i−1} t^i (1−t)^{d−i} expanded into h_0 + h_1 t + ... + h_d t^d.
  out.h.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    long long binom = 1;
    for (int k = 0; k <= d - i; ++k) {
      const int j = i + k;
      out.h[j] += out.f[i] * (k % 2 ? -binom : binom);
      binom = binom * (d - i - k) / (k + 1);
    }
  }
  return out;
}

std::vector<SmallSet> sr_generators(const SimplicialComplex& dx) {
  std::vector<SmallSet> gens;
  const SmallSet all = full_set(dx.n_vertices);
  for (int size = 0; size <= dx.n_vertices; ++size) {
    for (SmallSet s = 0; s <= all; ++s) {
      if (set_size(s) != size || dx.is_face(s)) {
        if (s == all) break;
        continue;
      }
      bool minimal = true;
      for (SmallSet g : gens) {
        if (set_subset(g, s)) {
          minimal = false;
          break;
        }
      }
      if (minimal) gens.push_back(s);
      if (s == all) break;
    }
    if (!gens.empty() && gens[0] == 0) break;  // void: ∅ generates everything
  }
  sort_facets(gens);
  return gens;
}

SimplicialComplex external_activity_complex(const Matroid& m, const QVector& u) {
  require_distinct(u);
  const int n = m.n;
  SimplicialComplex dx;
  dx.n_vertices = 2 * n;
  for (int i = 1; i <= n; ++i) dx.labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) dx.labels.push_back("y" + std::to_string(i));

  std::vector<SmallSet> nonfaces;
  for (SmallSet c : m.circuits) {
    const int mn = argmin_w(c, u);
    SmallSet nf = SmallSet{1} << mn;
    for (int e : set_elements(set_remove(c, mn))) nf = set_add(nf, n + e);
    nonfaces.push_back(nf);
  }
  nonfaces = inclusion_minimal(std::move(nonfaces));

  std::vector<char> is_face(SmallSet{1} << (2 * n), 1);
  for (SmallSet s = 0; s < (SmallSet{1} << (2 * n)); ++s) {
    for (SmallSet nf : nonfaces) {
      if (set_subset(nf, s)) {
        is_face[s] = 0;
        break;
      }
    }
  }
  dx.facets = facets_of_face_table(is_face, 2 * n);
  return dx;
}

bool verify_link_isomorphism(const Matroid& m, SmallSet i_set, const QVector& w) {
  require_distinct(w);
  for (const auto& wi : w) {
    if (wi <= 0) throw PreconditionError("link isomorphism check requires w > 0");
  }
  for (int i : set_elements(i_set)) {
    if (m.is_loop(i)) throw PreconditionError("link isomorphism check requires no loop in I");
  }

  const int n = m.n;
  QVector u(n);
  for (int j = 0; j < n; ++j) u[j] = set_contains(i_set, j) ? w[j] : -w[j];
  SimplicialComplex bu = external_activity_complex(m, u);

  SmallSet sigma = 0;
  for (int j = 0; j < n; ++j) {
    sigma = set_contains(i_set, j) ? set_add(sigma, j) : set_add(sigma, n + j);
  }
  if (!bu.is_face(sigma)) return false;

  SimplicialComplex lk = link(bu, sigma);
  std::vector<SmallSet> mapped;
  for (SmallSet f : lk.facets) {
    SmallSet ground = 0;
    for (int v : set_elements(f)) {
      if (v < n) {
        if (set_contains(i_set, v)) return false;  // x_i with i ∈ I cannot appear
        ground = set_add(ground, v);
      } else {
        if (!set_contains(i_set, v - n)) return false;
        ground = set_add(ground, v - n);
      }
    }
    mapped.push_back(ground);
  }
  sort_facets(mapped);

  SimplicialComplex delta = semi_broken_complex(m, i_set, w);
  return mapped == delta.facets;
}

}  // namespace semispace
