#include "ykit/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ykit {
namespace {

using nlohmann::json;

// All emission goes through one dump so the byte format is uniform:
// sorted keys (json's object is std::map), two-space indent, newline.
std::string dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw std::invalid_argument("json: " + where + ": " + what);
}

json poly_to_value(const Polynomial& p) {
  json a = json::array();
  for (const Rational& c : p.coeffs()) a.push_back(c.str());
  return a;
}

Polynomial poly_from_value(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected a coefficient array");
  std::vector<Rational> coeffs;
  coeffs.reserve(v.size());
  for (const auto& c : v) {
    if (!c.is_string()) bad(where, "coefficients must be \"p/q\" strings");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

json rf_to_value(const RationalFunction& f) {
  return json{{"num", poly_to_value(f.num())}, {"den", poly_to_value(f.den())}};
}

RationalFunction rf_from_value(const json& v, const std::string& where) {
  if (!v.is_object() || !v.contains("num") || !v.contains("den"))
    bad(where, "expected {num, den}");
  return RationalFunction(poly_from_value(v["num"], where + ".num"),
                          poly_from_value(v["den"], where + ".den"));
}

json parse(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad(what, "not valid JSON");
  return j;
}

std::string kind_string(const TRep& rep) {
  if (rep.is_gl()) return "gl" + std::to_string(rep.N());
  const AlgebraKind& k = rep.kind();
  return family_name(k.family()) + std::to_string(k.n());
}

}  // namespace

std::string polynomial_to_json(const Polynomial& p) { return dump(poly_to_value(p)); }

Polynomial polynomial_from_json(const std::string& text) {
  return poly_from_value(parse(text, "polynomial"), "polynomial");
}

std::string rational_function_to_json(const RationalFunction& f) {
  return dump(rf_to_value(f));
}

RationalFunction rational_function_from_json(const std::string& text) {
  return rf_from_value(parse(text, "rational function"), "rational function");
}

std::string drinfeld_to_json(const DrinfeldTuple& t) {
  json entries = json::array();
  for (const Polynomial& p : t.polys) {
    json entry = json::array();
    entry.push_back(poly_to_value(p));
    entries.push_back(std::move(entry));
  }
  return dump(json{{"polys", entries}});
}

DrinfeldTuple drinfeld_from_json(const std::string& text) {
  const json j = parse(text, "drinfeld tuple");
  if (!j.is_object() || !j.contains("polys") || !j["polys"].is_array())
    bad("drinfeld tuple", "expected {polys: [...]}");
  DrinfeldTuple t;
  std::size_t i = 0;
  for (const auto& entry : j["polys"]) {
    const std::string where = "polys[" + std::to_string(i++) + "]";
    if (!entry.is_array() || entry.empty())
      bad(where, "expected a nonempty array of factor polynomials");
    Polynomial p{Rational(1)};
    for (const auto& factor : entry) p = p * poly_from_value(factor, where);
    t.polys.push_back(std::move(p));
  }
  return t;
}

std::string trep_to_json(const TRep& rep) {
  const std::vector<int>& labels = rep.space().labels();
  json entries = json::array();
  for (int i : labels) {
    json row = json::array();
    for (int j : labels) {
      const Matrix<RationalFunction>& block = rep.t(i, j);
      json b = json::array();
      for (std::size_t r = 0; r < block.rows(); ++r) {
        json br = json::array();
        for (std::size_t c = 0; c < block.cols(); ++c)
          br.push_back(rf_to_value(block(r, c)));
        b.push_back(std::move(br));
      }
      row.push_back(std::move(b));
    }
    entries.push_back(std::move(row));
  }
  return dump(json{{"kind", kind_string(rep)},
                   {"dim", rep.dim()},
                   {"desc", rep.desc()},
                   {"entries", entries}});
}

TRep trep_from_json(const std::string& text) {
  const json j = parse(text, "rep");
  if (!j.is_object() || !j.contains("kind") || !j.contains("dim") ||
      !j.contains("entries"))
    bad("rep", "expected {kind, dim, desc, entries}");
  if (!j["kind"].is_string() || !j["dim"].is_number_unsigned())
    bad("rep", "kind must be a string and dim a nonnegative integer");
  const std::string kind = j["kind"].get<std::string>();
  const std::size_t dim = j["dim"].get<std::size_t>();
  const std::string desc = j.contains("desc") && j["desc"].is_string()
                               ? j["desc"].get<std::string>()
                               : std::string();
  auto make = [&]() -> TRep {
    if (kind.rfind("gl", 0) == 0) {
      const int N = std::stoi(kind.substr(2));
      return TRep(N, dim, desc);
    }
    if (kind.size() < 2) bad("rep.kind", "unrecognized kind " + kind);
    const Family f = parse_family(kind.substr(0, 1));
    const int n = std::stoi(kind.substr(1));
    return TRep(AlgebraKind(f, n), dim, desc);
  };
  TRep rep = make();
  const std::vector<int>& labels = rep.space().labels();
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != labels.size())
    bad("rep.entries", "expected one row per auxiliary label");
  for (std::size_t p = 0; p < labels.size(); ++p) {
    const json& row = entries[p];
    if (!row.is_array() || row.size() != labels.size())
      bad("rep.entries", "expected one block per auxiliary label");
    for (std::size_t q = 0; q < labels.size(); ++q) {
      const json& b = row[q];
      const std::string where = "entries[" + std::to_string(p) + "][" +
                                std::to_string(q) + "]";
      if (!b.is_array() || b.size() != dim) bad(where, "expected dim rows");
      Matrix<RationalFunction> block(dim, dim);
      for (std::size_t r = 0; r < dim; ++r) {
        if (!b[r].is_array() || b[r].size() != dim)
          bad(where, "expected dim columns");
        for (std::size_t c = 0; c < dim; ++c)
          block(r, c) = rf_from_value(b[r][c], where);
      }
      rep.t(labels[p], labels[q]) = std::move(block);
    }
  }
  return rep;
}

std::string weights_to_json(const HighestWeightData& hw) {
  json lam = json::array();
  for (const RationalFunction& f : hw.lambda) lam.push_back(rf_to_value(f));
  return dump(json{{"kind", family_name(hw.kind.family()) + std::to_string(hw.kind.n())},
                   {"lambda", lam}});
}

HighestWeightData weights_from_json(const std::string& text) {
  const json j = parse(text, "weights");
  if (!j.is_object() || !j.contains("kind") || !j.contains("lambda") ||
      !j["kind"].is_string() || !j["lambda"].is_array())
    bad("weights", "expected {kind, lambda}");
  const std::string kind = j["kind"].get<std::string>();
  if (kind.size() < 2) bad("weights.kind", "unrecognized kind " + kind);
  const AlgebraKind k(parse_family(kind.substr(0, 1)), std::stoi(kind.substr(1)));
  std::vector<RationalFunction> lam;
  std::size_t i = 0;
  for (const auto& v : j["lambda"])
    lam.push_back(rf_from_value(v, "lambda[" + std::to_string(i++) + "]"));
  if (lam.size() != k.labels().size())
    bad("weights.lambda", "expected one series per auxiliary label");
  return HighestWeightData(k, std::move(lam));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ykit
