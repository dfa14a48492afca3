#include "mixeddet/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mixeddet {

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const GaussianRational& z) { return Json::array({format_rational(z.re()), format_rational(z.im())}); }

Json to_json(const HermitianMatrix& a) {
  Json rows = Json::array();
  for (Index i = 0; i < a.order(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < a.order(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", a.order()}, {"entries", std::move(rows)}};
}

Json to_json(const Pencil& p) {
  Json coeffs = Json::array();
  for (const auto& m : p.coeffs) coeffs.push_back(to_json(m));
  return Json{{"ell", p.ell()}, {"coeffs", std::move(coeffs)}, {"constant", to_json(p.constant)}};
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(format_rational(c));
  return out;
}

Json to_json(const ExponentVector& alpha) {
  Json out = Json::array();
  for (int a : alpha) out.push_back(a);
  return out;
}

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({to_json(e), format_rational(c)}));
  // [] would lose the variable count
  if (p.is_zero()) return Json{{"nvars", p.nvars()}, {"terms", out}};
  return out;
}

Json to_json(const Inertia& i) { return Json::array({i.plus, i.zero, i.minus}); }

Json to_json(IndexSet s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(e + 1);
  return out;
}

Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

Json to_json(const StabilityVerdict& v) {
  Json out{{"status", to_string(v.status)},
           {"seed", v.seed},
           {"trials_requested", v.trials_requested},
           {"trials_run", v.trials_run},
           {"witness_trial", v.witness_trial}};
  if (!v.witness) {
    out["witness"] = nullptr;
    return out;
  }
  const StabilityWitness& w = *v.witness;
  Json wj;
  switch (w.kind) {
    case StabilityWitness::Kind::NegativeDelta:
      wj = Json{{"kind", "negative_delta"},
                {"i", w.i + 1},
                {"j", w.j + 1},
                {"point", to_json(w.point)},
                {"delta", format_rational(w.value)}};
      break;
    case StabilityWitness::Kind::NonrealLineRoot:
    case StabilityWitness::Kind::VanishingLine:
      wj = Json{{"kind", w.kind == StabilityWitness::Kind::VanishingLine ? "vanishing_line" : "nonreal_line_root"},
                {"base", to_json(w.point)},
                {"direction", to_json(w.direction)},
                {"restriction", to_json(w.restriction)}};
      break;
  }
  out["witness"] = std::move(wj);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("complex entry must be [re, im], got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  }
  return GaussianRational(rational_from_json(j));
}

HermitianMatrix hermitian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument("matrix document needs \"n\" and \"entries\"");
  const long long n = j.at("n").get<long long>();
  const Json& rows = j.at("entries");
  if (n < 0 || !rows.is_array() || static_cast<long long>(rows.size()) != n)
    throw std::invalid_argument("matrix \"entries\" must have n = " + std::to_string(n) + " rows");
  ComplexMatrix m(n, n);
  for (long long r = 0; r < n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long long>(row.size()) != n)
      throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    for (long long c = 0; c < n; ++c) {
      try {
        m(r, c) = gaussian_from_json(row[static_cast<std::size_t>(c)]);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("entry (" + std::to_string(r + 1) + ", " + std::to_string(c + 1) + "): " + e.what());
      }
    }
  }
  if (j.value("symmetrize", false)) return HermitianMatrix::symmetrized(m);
  return HermitianMatrix::from_dense(std::move(m));
}

Pencil pencil_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.contains("constant"))
    throw std::invalid_argument("pencil document needs \"coeffs\" and \"constant\"");
  std::vector<HermitianMatrix> coeffs;
  for (const auto& m : j.at("coeffs")) coeffs.push_back(hermitian_from_json(m));
  if (j.contains("ell") && j.at("ell").get<long long>() != static_cast<long long>(coeffs.size()))
    throw std::invalid_argument("pencil \"ell\" does not match the number of coefficient matrices");
  return Pencil(std::move(coeffs), hermitian_from_json(j.at("constant")));
}

UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("univariate polynomial must be a coefficient array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return UniPoly(std::move(c));
}

ExponentVector exponents_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("exponent vector must be an array, got " + j.dump());
  ExponentVector e;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw std::invalid_argument("exponents must be nonnegative integers, got " + j.dump());
    e.push_back(x.get<int>());
  }
  return e;
}

MultiPoly multipoly_from_json(const Json& j) {
  const Json* terms = &j;
  int nvars = -1;
  if (j.is_object()) {
    nvars = j.at("nvars").get<int>();
    terms = &j.at("terms");
  }
  if (!terms->is_array()) throw std::invalid_argument("multivariate polynomial must be a list of terms");
  for (const auto& t : *terms) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("term must be [exponents, coefficient], got " + t.dump());
    if (nvars < 0) nvars = static_cast<int>(t[0].size());
  }
  MultiPoly p(std::max(nvars, 0));
  for (const auto& t : *terms) p.add_term(exponents_from_json(t[0]), rational_from_json(t[1]));
  return p;
}

ParsedInput parse_document(const Json& j) {
  if (j.is_object()) {
    if (j.contains("entries")) return hermitian_from_json(j);
    if (j.contains("coeffs")) return pencil_from_json(j);
    if (j.contains("terms")) return multipoly_from_json(j);
    throw std::invalid_argument("unrecognized JSON object (expected matrix, pencil or polynomial)");
  }
  if (j.is_array()) {
    if (!j.empty() && j[0].is_array()) return multipoly_from_json(j);
    return unipoly_from_json(j);
  }
  throw std::invalid_argument("unrecognized JSON document");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": malformed JSON: " + e.what());
  }
}

ParsedInput parse_input(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return parse_document(j);
  } catch (const std::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string digest(const Json& j) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mixeddet
