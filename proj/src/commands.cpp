#include "semispace/commands.hpp"

#include <fstream>
#include <random>

#include "semispace/errors.hpp"

namespace semispace {

QVector ProblemInput::weight_or_default() const {
  if (w) return *w;
  QVector def(n());
  for (int i = 0; i < n(); ++i) def[i] = i + 1;
  return def;
}

QVector ProblemInput::offset_or_sampled() const {
  if (u) return *u;
  std::mt19937_64 rng(seed);
  QVector out(n());
  for (int i = 0; i < n(); ++i) {
    const long magnitude = 1 + static_cast<long>(rng() % 19);
    const long sign_bit = rng() % 2 ? 1 : -1;
    out[i] = BigRational(sign_bit * magnitude);
  }
  return out;
}

ProblemInput parse_problem(const Json& j) {
  if (!j.is_object()) throw InputError("problem input must be a JSON object");
  if (!j.contains("matrix")) throw InputError("problem input needs a \"matrix\"");
  ProblemInput in;
  in.matrix = qmatrix_from_json(j["matrix"]);
  const int n = in.matrix.col_count();
  if (n == 0) throw InputError("matrix must have at least one column");
  if (n > 20) throw InputError("desk scale only: at most 20 columns");
  if (j.contains("I")) in.i_set = set_from_json(j["I"], n);
  if (j.contains("w")) {
    in.w = qvector_from_json(j["w"]);
    if (static_cast<int>(in.w->size()) != n) {
      throw InputError("w must have one entry per column");
    }
    require_distinct(*in.w);
  }
  if (j.contains("u")) {
    in.u = qvector_from_json(j["u"]);
    if (static_cast<int>(in.u->size()) != n) {
      throw InputError("u must have one entry per column");
    }
  }
  if (j.contains("seed")) in.seed = j["seed"].get<std::uint64_t>();
  return in;
}

Json cmd_matroid(const ProblemInput& in) {
  const Matroid m = matroid_from_matrix(in.matrix);
  Json j = matroid_to_json(m);
  j["loops"] = set_to_json(m.loops());
  j["coloops"] = set_to_json(m.coloops());
  return j;
}

Json cmd_complex(const ProblemInput& in) {
  const Matroid m = matroid_from_matrix(in.matrix);
  const QVector w = in.weight_or_default();
  require_distinct(w);
  SimplicialComplex dx = semi_broken_complex(m, in.i_set, w);

  Json j;
  j["I"] = set_to_json(in.i_set);
  j["w"] = qvector_to_json(w);
  Json broken = Json::array();
  if (!dx.is_void()) {
    std::vector<std::vector<int>> lists;
    for (SmallSet c : m.circuits) {
      lists.push_back(set_elements_1based(i_broken_circuit(c, in.i_set, w)));
    }
    std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& b : lists) broken.push_back(b);
  }
  j["i_broken_circuits"] = broken;
  j["complex"] = complex_to_json(dx);
  auto fh = fh_vectors(dx);
  j["f_vector"] = fh.f;
  j["h_vector"] = fh.h;
  return j;
}

Json cmd_degree(const ProblemInput& in) {
  const Matroid m = matroid_from_matrix(in.matrix);
  const QVector w = in.weight_or_default();
  DegreeReport report = degree(m, in.i_set, w);
  Json j = degree_report_to_json(report);
  j["I"] = set_to_json(in.i_set);
  return j;
}

Json cmd_supports(const ProblemInput& in) {
  const Matroid m = matroid_from_matrix(in.matrix);
  SupportsReport report = achievable_supports(m, in.i_set);
  Json j = supports_report_to_json(report, m.n);
  j["I"] = set_to_json(in.i_set);
  return j;
}

Json cmd_verify_ugb(const ProblemInput& in, const CommandOptions& opts) {
  UgbReport report = verify_ugb(in.matrix, in.i_set, opts.trials, in.seed);
  Json j = ugb_report_to_json(report);
  j["I"] = set_to_json(in.i_set);
  return j;
}

namespace {

CensusReport run_census(const ProblemInput& in, const CommandOptions& opts) {
  NewtonOptions newton;
  newton.tol = opts.newton_tol;
  CensusReport census = real_point_census(in.matrix, in.i_set, in.offset_or_sampled(),
                                          in.weight_or_default(), opts.tol, in.seed,
                                          newton);
  if (!census.generic_ok) {
    std::string detail;
    for (const auto& note : census.genericity_notes) detail += note + "; ";
    throw PreconditionError("translation vector u failed the genericity probe: " + detail);
  }
  return census;
}

void maybe_write_svg(const ProblemInput& in, const CensusReport& census,
                     const CommandOptions& opts) {
  if (!opts.svg_path) return;
  AffineSlice slice = AffineSlice::orthogonal_complement(in.matrix, census.u);
  std::ofstream out(*opts.svg_path);
  if (!out) throw InputError("cannot write SVG to " + *opts.svg_path);
  out << census_svg(slice, in.i_set, census);
}

}  // namespace

Json cmd_regions(const ProblemInput& in, const CommandOptions& opts) {
  CensusReport census = run_census(in, opts);
  maybe_write_svg(in, census, opts);
  return census_to_json(census);
}

Json cmd_realpoints(const ProblemInput& in, const CommandOptions& opts) {
  CensusReport census = run_census(in, opts);
  maybe_write_svg(in, census, opts);
  Json j = census_to_json(census);
  if (!census.theorem_counts_equal()) {
    throw ConsistencyError("census counts disagree: degree " +
                           std::to_string(census.degree.by_facets) + ", qualifying " +
                           std::to_string(census.qualifying) + ", points " +
                           std::to_string(census.points_recovered));
  }
  return j;
}

Json cmd_report(const ProblemInput& in, const CommandOptions& opts) {
  const Matroid m = matroid_from_matrix(in.matrix);
  const QVector w = in.weight_or_default();

  Json j;
  j["input"] = Json{{"matrix", qmatrix_to_json(in.matrix)},
                    {"I", set_to_json(in.i_set)},
                    {"w", qvector_to_json(w)},
                    {"seed", in.seed}};
  j["matroid"] = cmd_matroid(in);
  j["complex"] = cmd_complex(in);

  const auto forms = circuit_forms(in.matrix, m);
  Json polys = Json::array();
  for (const auto& cf : forms) {
    Json p;
    p["circuit"] = set_to_json(cf.circuit);
    Poly f = circuit_polynomial(cf, in.i_set);
    p["terms"] = poly_to_json(f);
    p["pretty"] = f.to_string();
    polys.push_back(p);
  }
  j["circuit_polynomials"] = polys;

  j["degree"] = cmd_degree(in);
  j["supports"] = cmd_supports(in);
  j["verify_ugb"] = cmd_verify_ugb(in, opts);

  CensusReport census = run_census(in, opts);
  maybe_write_svg(in, census, opts);
  j["census"] = census_to_json(census);
  j["theorem_counts_equal"] = census.theorem_counts_equal();
  if (!census.theorem_counts_equal()) {
    throw ConsistencyError("degree / qualifying-region / real-point counts disagree");
  }
  if (!j["verify_ugb"]["all_passed"].get<bool>()) {
    throw ConsistencyError("universal Groebner basis property failed in the report run");
  }
  return j;
}

}  // namespace semispace
