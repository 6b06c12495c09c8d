#include "serialize.hpp"

#include <json.hpp>

#include "version.hpp"

namespace arcspan {

namespace {

using nlohmann::json;

json envelope(int n, const char* kind) {
  json j;
  j["paper"] = source_tag;
  j["n"] = n;
  j["kind"] = kind;
  j["version"] = version_string;
  return j;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

json points_of(const EvenSet& x) { return json(x.points()); }

json arcs_of(const Matching& b) {
  json out = json::array();
  for (const Arc& a : b.arcs()) out.push_back({a.lo, a.hi});
  return out;
}

json report_of(const Report& r) {
  json j;
  j["id"] = r.id;
  j["status"] = r.status;
  j["counts"] = r.counts;
  j["witnesses"] = r.witnesses;
  return j;
}

struct Stratum {
  std::optional<int> t;
  std::optional<Refinement> ref;
};

Stratum parse_stratum(const std::string& s) {
  Stratum out;
  size_t start = 0;
  while (start < s.size()) {
    size_t comma = s.find(',', start);
    size_t stop = comma == std::string::npos ? s.size() : comma;
    std::string piece = s.substr(start, stop - start);
    start = stop + 1;
    if (piece.empty()) continue;
    if (piece == "prime") {
      out.ref = Refinement::prime;
    } else if (piece == "doubleprime") {
      out.ref = Refinement::doubleprime;
    } else if (piece.rfind("t=", 0) == 0) {
      try {
        size_t used = 0;
        out.t = std::stoi(piece.substr(2), &used);
        if (used != piece.size() - 2) throw std::invalid_argument(piece);
      } catch (const std::exception&) {
        throw usage_error("bad stratum level: " + piece);
      }
    } else {
      throw usage_error("bad stratum piece: " + piece + " (want t=K, prime, doubleprime)");
    }
  }
  return out;
}

}  // namespace

std::string enumerate_json(int n, const std::string& family, const std::string& stratum) {
  check_ambient(n);
  Stratum st = parse_stratum(stratum);
  json j = envelope(n, "enumerate");
  j["family"] = family;
  if (!stratum.empty()) j["stratum"] = stratum;
  json items = json::array();

  if (family == "e" || family == "e-plus" || family == "e-minus") {
    VectorFilter flt;
    flt.t = st.t;
    if (family != "e") flt.sign = family == "e-plus" ? 1 : -1;
    if (st.ref) flt.refinement = *st.ref == Refinement::prime ? 0 : 1;
    for (const EvenSet& x : enumerate_vectors(n, flt)) items.push_back(points_of(x));
  } else {
    Family f;
    if (family == "xn1") f = Family::xn1;
    else if (family == "xn2") f = Family::xn2;
    else if (family == "xn2-plus") f = Family::xn2_plus;
    else if (family == "xn2-minus") f = Family::xn2_minus;
    else throw usage_error("unknown family: " + family);
    MatchFilter flt{st.t, st.ref};
    for (const Matching& b : enumerate_family(n, f, flt)) items.push_back(arcs_of(b));
  }

  j["items"] = items;
  j["count"] = items.size();
  return finish(j);
}

std::string matrix_json(int n, const std::string& kind) {
  check_ambient(n);
  json j = envelope(n, "matrix");
  j["matrix-kind"] = kind;

  auto vec_labels = [](const std::vector<EvenSet>& v) {
    json out = json::array();
    for (const EvenSet& x : v) out.push_back(points_of(x));
    return out;
  };
  auto orbit_labels = [](const std::vector<Orbit>& v) {
    json out = json::array();
    for (const Orbit& o : v) out.push_back(points_of(o.rep));
    return out;
  };

  if (kind == "c" || kind == "cprime" || kind == "cplus" || kind == "cminus") {
    MatrixKind mk = kind == "c"        ? MatrixKind::c
                    : kind == "cprime" ? MatrixKind::cprime
                    : kind == "cplus"  ? MatrixKind::cplus
                                       : MatrixKind::cminus;
    F2Matrix mat = transition_matrix(n, mk);
    OrderRelation ord = build_order(n, order_for(mk));
    Report cert = unitriangular_check(mat, ord, kind);
    json rows = json::array();
    for (int r = 0; r < mat.m; ++r) {
      json row = json::array();
      for (int c = 0; c < mat.m; ++c) row.push_back(int(mat.at(r, c)));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["carrier"] = mat.orbit_carrier.empty() ? vec_labels(mat.vec_carrier)
                                             : orbit_labels(mat.orbit_carrier);
    json cj;
    cj["status"] = cert.status;
    cj["counts"] = cert.counts;
    cj["witnesses"] = cert.witnesses;
    j["certificate"] = std::move(cj);
  } else if (kind == "A" || kind == "Aprime" || kind == "bar-plus-fourier") {
    OperatorBasis ob = kind == "A"        ? OperatorBasis::A_on_c
                       : kind == "Aprime" ? OperatorBasis::Aprime_on_cprime
                                          : OperatorBasis::bar_plus_on_tilde;
    DyadicMatrix mat = operator_matrix(n, ob);
    json rows = json::array();
    for (int r = 0; r < mat.m; ++r) {
      json row = json::array();
      for (int c = 0; c < mat.m; ++c) row.push_back(mat.at(r, c).str());
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["carrier"] = mat.orbit_carrier.empty() ? vec_labels(mat.vec_carrier)
                                             : orbit_labels(mat.orbit_carrier);
  } else {
    throw usage_error("unknown matrix kind: " + kind);
  }
  return finish(j);
}

std::string verify_json(int n, const std::string& suite, bool& all_pass) {
  check_ambient(n);
  json j = envelope(n, "verify");
  j["suite"] = suite;
  json reports = json::array();
  all_pass = true;
  for (const Report& r : run_suite(suite, n)) {
    if (!r.passed()) all_pass = false;
    reports.push_back(report_of(r));
  }
  j["reports"] = std::move(reports);
  j["all-pass"] = all_pass;
  return finish(j);
}

std::string conjecture_json(int n) {
  check_ambient(n);
  json j = envelope(n, "conjecture");
  j["report"] = report_of(run_statement("5.2", n));
  DyadicMatrix mat = operator_matrix(n, OperatorBasis::bar_plus_on_tilde);
  json rows = json::array();
  for (int r = 0; r < mat.m; ++r) {
    json row = json::array();
    for (int c = 0; c < mat.m; ++c) row.push_back(mat.at(r, c).str());
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  json carrier = json::array();
  for (const Orbit& o : mat.orbit_carrier) carrier.push_back(points_of(o.rep));
  j["carrier"] = std::move(carrier);
  return finish(j);
}

}  // namespace arcspan
