#include "distspec/serialize.hpp"

#include <cstdio>

#include <json.hpp>

namespace distspec {

namespace {

std::string real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_json(const PerronResult& r) {
  std::string out = "{\"lambda\": " + real(r.lambda) +
                    ", \"lower\": " + real(r.lower) +
                    ", \"upper\": " + real(r.upper) +
                    ", \"residual\": " + real(r.residual) +
                    ", \"iterations\": " + std::to_string(r.iterations) +
                    ", \"vector\": [";
  for (std::size_t i = 0; i < r.vector.size(); ++i) {
    if (i > 0) out += ", ";
    out += real(r.vector[i]);
  }
  out += "]}";
  return out;
}

PerronResult perron_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  PerronResult r;
  r.lambda = j.at("lambda").get<double>();
  r.lower = j.at("lower").get<double>();
  r.upper = j.at("upper").get<double>();
  r.residual = j.at("residual").get<double>();
  r.iterations = j.at("iterations").get<int>();
  r.vector = j.at("vector").get<std::vector<double>>();
  return r;
}

}  // namespace distspec
