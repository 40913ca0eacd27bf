#ifndef SEMISPACE_JSON_IO_HPP
#define SEMISPACE_JSON_IO_HPP

#include "semispace/arrangement.hpp"
#include "semispace/invspace.hpp"
#include "semispace/linalg.hpp"
#include "semispace/matroid.hpp"
#include "semispace/poly.hpp"
#include "semispace/scomplex.hpp"

// The vendored single-header nlohmann/json; the ordered variant keeps
// emitted keys in insertion order.
#include <json.hpp>

namespace semispace {

using Json = nlohmann::ordered_json;

Json rational_to_json(const BigRational& q);
BigRational rational_from_json(const Json& j);

Json qvector_to_json(const QVector& v);
QVector qvector_from_json(const Json& j);

Json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

// {"n":…, "rank":…, "circuits":[[1-based]…]} with circuits sorted by size
// then lexicographically.
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

// {"vertices":[…], "facets":[[…]…]} with facets sorted lexicographically;
// numeric labels are emitted as integers.
Json complex_to_json(const SimplicialComplex& dx);

Json degree_report_to_json(const DegreeReport& r);
Json supports_report_to_json(const SupportsReport& r, int n);
Json ugb_report_to_json(const UgbReport& r);

// Sorted list of {"exp":[…], "coef":"p/q"}.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int nvars);

Json region_to_json(const RegionReport& r);
Json census_to_json(const CensusReport& c);

// 1-based element list ↔ bitmask.
Json set_to_json(SmallSet s);
SmallSet set_from_json(const Json& j, int n);

std::vector<int> sorted_elements_1based(SmallSet s);

}  // namespace semispace

#endif
