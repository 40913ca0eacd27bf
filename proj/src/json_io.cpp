#include "semispace/json_io.hpp"

#include <algorithm>

#include "semispace/errors.hpp"

namespace semispace {

namespace {

// Lexicographic order on 1-based element lists, for external surfaces.
std::vector<std::vector<int>> sorted_set_lists(const std::vector<SmallSet>& sets) {
  std::vector<std::vector<int>> lists;
  lists.reserve(sets.size());
  for (SmallSet s : sets) lists.push_back(set_elements_1based(s));
  std::sort(lists.begin(), lists.end());
  return lists;
}

}  // namespace

Json rational_to_json(const BigRational& q) { return rat_to_string(q); }

BigRational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return rat_parse(std::to_string(j.get<long long>()));
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw InputError("expected a rational as \"p/q\" string or integer");
}

Json qvector_to_json(const QVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(rational_to_json(x));
  return arr;
}

QVector qvector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json qmatrix_to_json(const QMatrix& m) {
  Json arr = Json::array();
  for (const auto& row : m.rows) arr.push_back(qvector_to_json(row));
  return arr;
}

QMatrix qmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty matrix");
  std::vector<QVector> rows;
  for (const auto& r : j) rows.push_back(qvector_from_json(r));
  return QMatrix(std::move(rows));
}

Json set_to_json(SmallSet s) {
  Json arr = Json::array();
  for (int e : set_elements_1based(s)) arr.push_back(e);
  return arr;
}

SmallSet set_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InputError("expected an array of 1-based elements");
  SmallSet s = 0;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("set elements must be integers");
    const long v = e.get<long>();
    if (v < 1 || v > n) {
      throw InputError("element " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    s = set_add(s, static_cast<int>(v - 1));
  }
  return s;
}

std::vector<int> sorted_elements_1based(SmallSet s) { return set_elements_1based(s); }

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.n;
  j["rank"] = m.rank;
  Json circuits = Json::array();
  std::vector<std::vector<int>> lists;
  for (SmallSet c : m.circuits) lists.push_back(set_elements_1based(c));
  std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& c : lists) circuits.push_back(c);
  j["circuits"] = circuits;
  return j;
}

Matroid matroid_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("circuits")) {
    throw InputError("matroid JSON needs \"n\" and \"circuits\"");
  }
  const int n = j["n"].get<int>();
  if (n < 0 || n > 20) throw InputError("ground-set size out of range");
  std::vector<SmallSet> circuits;
  for (const auto& c : j["circuits"]) circuits.push_back(set_from_json(c, n));
  Matroid m = Matroid::from_circuits(n, std::move(circuits));
  if (j.contains("rank") && j["rank"].get<int>() != m.rank) {
    throw InputError("declared rank disagrees with the circuit list");
  }
  return m;
}

Json complex_to_json(const SimplicialComplex& dx) {
  Json j;
  bool numeric = true;
  for (const auto& label : dx.labels) {
    if (label.empty() || label.find_first_not_of("0123456789") != std::string::npos) {
      numeric = false;
      break;
    }
  }
  Json vertices = Json::array();
  for (const auto& label : dx.labels) {
    if (numeric) {
      vertices.push_back(std::stoi(label));
    } else {
      vertices.push_back(label);
    }
  }
  j["vertices"] = vertices;
  j["void"] = dx.is_void();
  Json facets = Json::array();
  if (numeric) {
    std::vector<std::vector<int>> lists;
    for (SmallSet f : dx.facets) {
      std::vector<int> list;
      for (int v : set_elements(f)) list.push_back(std::stoi(dx.labels[v]));
      std::sort(list.begin(), list.end());
      lists.push_back(std::move(list));
    }
    std::sort(lists.begin(), lists.end());
    for (const auto& f : lists) facets.push_back(f);
  } else {
    std::vector<std::vector<std::string>> lists;
    for (SmallSet f : dx.facets) {
      std::vector<std::string> list;
      for (int v : set_elements(f)) list.push_back(dx.labels[v]);
      std::sort(list.begin(), list.end());
      lists.push_back(std::move(list));
    }
    std::sort(lists.begin(), lists.end());
    for (const auto& f : lists) facets.push_back(f);
  }
  j["facets"] = facets;
  return j;
}

Json degree_report_to_json(const DegreeReport& r) {
  Json j;
  j["by_facets"] = r.by_facets;
  j["by_recursion"] = r.by_recursion;
  if (r.by_formula) {
    j["by_formula"] = *r.by_formula;
  } else {
    j["by_formula"] = nullptr;
  }
  j["h_vector"] = r.hilbert_h;
  return j;
}

Json supports_report_to_json(const SupportsReport& r, int n) {
  Json j;
  j["n"] = n;
  j["loop_in_I"] = r.loop_in_i;
  Json arr = Json::array();
  for (const auto& s : sorted_set_lists(r.achievable)) arr.push_back(s);
  j["achievable"] = arr;
  return j;
}

Json ugb_report_to_json(const UgbReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["loop_in_I"] = r.loop_in_i;
  j["all_passed"] = r.all_passed();
  j["inconclusive"] = r.inconclusive_count();
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    Json tj;
    tj["w"] = t.weights;
    tj["spair"] = t.spair_ok;
    tj["oracle_generators_reduce"] = t.oracle_generators_reduce;
    tj["circuit_polys_reduce"] = t.circuit_polys_reduce;
    tj["initial_ideal_matches"] = t.initial_ideal_matches;
    tj["inconclusive"] = t.inconclusive;
    if (!t.note.empty()) tj["note"] = t.note;
    trials.push_back(tj);
  }
  j["trials"] = trials;
  return j;
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exp"] = e;
    term["coef"] = rat_to_string(c);
    arr.push_back(term);
  }
  return arr;
}

Poly poly_from_json(const Json& j, int nvars) {
  Poly p(nvars);
  for (const auto& term : j) {
    Exponents e = term.at("exp").get<Exponents>();
    if (static_cast<int>(e.size()) != nvars) {
      throw InputError("exponent vector length mismatch");
    }
    p.add_term(e, rational_from_json(term.at("coef")));
  }
  return p;
}

Json region_to_json(const RegionReport& r) {
  Json j;
  j["pattern"] = r.pattern.to_string();
  j["elements"] = set_to_json(r.pattern.i_set);
  j["witness"] = qvector_to_json(r.witness);
  j["recession_trivial"] = r.recession_trivial;
  if (r.real_point) j["real_point"] = *r.real_point;
  if (r.residual) j["residual"] = *r.residual;
  return j;
}

Json census_to_json(const CensusReport& c) {
  Json j;
  j["I"] = set_to_json(c.i_set);
  j["u"] = qvector_to_json(c.u);
  j["degree"] = degree_report_to_json(c.degree);
  Json regions = Json::array();
  for (const auto& r : c.regions) regions.push_back(region_to_json(r));
  j["regions"] = regions;
  j["region_count"] = c.regions.size();
  j["qualifying"] = c.qualifying;
  j["points_recovered"] = c.points_recovered;
  j["residual_tol"] = c.residual_tol;
  j["min_separation"] = c.min_separation;
  j["generic_ok"] = c.generic_ok;
  j["genericity_notes"] = c.genericity_notes;
  j["theorem_counts_equal"] = c.theorem_counts_equal();
  return j;
}

}  // namespace semispace
