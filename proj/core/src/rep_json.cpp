#include "gammatype/rep_json.hpp"

#include <json.hpp>

#include "gammatype/error.hpp"

namespace gammatype {
namespace {

nlohmann::json factors_to_json(const std::vector<GammaFactor>& fs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : fs) arr.push_back({f.a, f.b});
  return arr;
}

std::vector<GammaFactor> factors_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw InvalidRep("rep json: factor list must be an array");
  std::vector<GammaFactor> fs;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw InvalidRep("rep json: each factor must be [a, b]");
    fs.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return fs;
}

}  // namespace

std::string rep_to_json(const GammaTypeRep& rep, int indent) {
  nlohmann::json j;
  j["logC"] = rep.log_c();
  j["sign"] = rep.sign();
  j["d"] = rep.d();
  j["num"] = factors_to_json(rep.numerator());
  j["den"] = factors_to_json(rep.denominator());
  return j.dump(indent);
}

GammaTypeRep rep_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidRep(std::string("rep json: ") + e.what());
  }
  if (!j.is_object()) throw InvalidRep("rep json: top level must be an object");
  auto number = [&j](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw InvalidRep(std::string("rep json: ") + key + " must be a number");
    return j[key].get<double>();
  };
  const double log_c = number("logC", 0.0);
  const double sign = number("sign", 1.0);
  const double d = number("d", 0.0);
  if (sign != 1.0 && sign != -1.0) throw InvalidRep("rep json: sign must be +1 or -1");
  auto num = j.contains("num") ? factors_from_json(j["num"]) : std::vector<GammaFactor>{};
  auto den = j.contains("den") ? factors_from_json(j["den"]) : std::vector<GammaFactor>{};
  return GammaTypeRep(log_c, static_cast<int>(sign), d, std::move(num), std::move(den));
}

}  // namespace gammatype
