#include "ahs/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ahs {

namespace {

ordered_json rat_pair(const Rat& r) {
  return ordered_json::array(
      {r.get_num().get_str(), r.get_den().get_str()});
}

Rat rat_from_pair(const ordered_json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() ||
      !v[1].is_string())
    throw math_error("rational must be a [num_str, den_str] pair");
  return rat_from_strings(v[0].get<std::string>(), v[1].get<std::string>());
}

}  // namespace

ordered_json rat_to_json(const Rat& r) { return rat_pair(r); }
Rat rat_from_json(const ordered_json& v) { return rat_from_pair(v); }

ordered_json cplx_to_json(Cplx z) {
  return ordered_json::array({z.real(), z.imag()});
}

Cplx cplx_from_json(const ordered_json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number())
    throw math_error("complex must be a [re, im] number pair");
  return Cplx(v[0].get<double>(), v[1].get<double>());
}

ordered_json jet_to_json(const JetC& j) {
  ordered_json out;
  out["base_point"] =
      j.base() ? cplx_to_json(*j.base()) : ordered_json(nullptr);
  ordered_json coeffs = ordered_json::array();
  for (const Cplx& c : j.coeffs()) coeffs.push_back(cplx_to_json(c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

ordered_json jet_to_json(const JetQ& j) {
  ordered_json out;
  out["base_point"] =
      j.base() ? rat_pair(*j.base()) : ordered_json(nullptr);
  ordered_json coeffs = ordered_json::array();
  for (const Rat& c : j.coeffs()) coeffs.push_back(rat_pair(c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

JetC jetc_from_json(const ordered_json& v) {
  if (!v.contains("coeffs") || !v["coeffs"].is_array() ||
      v["coeffs"].empty())
    throw math_error("jet needs a non-empty coeffs array");
  std::optional<Cplx> base;
  if (v.contains("base_point") && !v["base_point"].is_null())
    base = cplx_from_json(v["base_point"]);
  std::vector<Cplx> c;
  c.reserve(v["coeffs"].size());
  for (const auto& e : v["coeffs"]) c.push_back(cplx_from_json(e));
  return JetC(base, std::move(c));
}

JetQ jetq_from_json(const ordered_json& v) {
  if (!v.contains("coeffs") || !v["coeffs"].is_array() ||
      v["coeffs"].empty())
    throw math_error("jet needs a non-empty coeffs array");
  std::optional<Rat> base;
  if (v.contains("base_point") && !v["base_point"].is_null())
    base = rat_from_pair(v["base_point"]);
  std::vector<Rat> c;
  c.reserve(v["coeffs"].size());
  for (const auto& e : v["coeffs"]) c.push_back(rat_from_pair(e));
  return JetQ(base, std::move(c));
}

ordered_json imat_to_json(const IMat& m) {
  return ordered_json::array({ordered_json::array({m.a, m.b}),
                              ordered_json::array({m.c, m.d})});
}

IMat imat_from_json(const ordered_json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_array() ||
      !v[1].is_array() || v[0].size() != 2 || v[1].size() != 2)
    throw math_error("matrix must be [[a,b],[c,d]]");
  return {v[0][0].get<long long>(), v[0][1].get<long long>(),
          v[1][0].get<long long>(), v[1][1].get<long long>()};
}

ordered_json qseries_to_json(const QSeries& s) {
  ordered_json coeffs = ordered_json::array();
  for (const Rat& c : s.a) coeffs.push_back(rat_pair(c));
  ordered_json out;
  out["coeffs"] = std::move(coeffs);
  return out;
}

QSeries qseries_from_json(const ordered_json& v) {
  if (!v.contains("coeffs") || !v["coeffs"].is_array() ||
      v["coeffs"].empty())
    throw math_error("q-series needs a non-empty coeffs array");
  std::vector<Rat> c;
  c.reserve(v["coeffs"].size());
  for (const auto& e : v["coeffs"]) c.push_back(rat_from_pair(e));
  return QSeries(std::move(c));
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw math_error("cannot open " + path);
  ordered_json v;
  in >> v;
  return v;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw math_error("cannot write " + path);
  out << text;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace ahs
