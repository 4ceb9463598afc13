#include "ndq/certificate.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ndq {

std::string write_certificate(const Placement& p) {
  nlohmann::json j;
  j["n"] = p.spec.n;
  j["d"] = p.spec.d;
  j["queens"] = p.queen_coords();
  return j.dump(2) + "\n";
}

Placement read_certificate(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("queens"))
    throw std::invalid_argument(
        "certificate must be an object with fields n, d, queens");
  if (!j["n"].is_number_integer() || !j["d"].is_number_integer())
    throw std::invalid_argument("certificate fields n and d must be integers");
  BoardSpec spec(j["n"].get<int>(), j["d"].get<int>());
  if (!j["queens"].is_array())
    throw std::invalid_argument("certificate field queens must be an array");
  std::vector<std::vector<int>> queens;
  for (const auto& q : j["queens"]) {
    if (!q.is_array())
      throw std::invalid_argument("each queen must be an array of coordinates");
    std::vector<int> coords;
    for (const auto& c : q) {
      if (!c.is_number_integer())
        throw std::invalid_argument("queen coordinates must be integers");
      coords.push_back(c.get<int>());
    }
    queens.push_back(std::move(coords));
  }
  return make_placement(spec, queens);
}

Placement read_certificate_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_certificate(buf.str());
}

void write_certificate_file(const Placement& p, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write certificate file " + path.string());
  out << write_certificate(p);
  if (!out) throw std::runtime_error("failed writing certificate file " + path.string());
}

}  // namespace ndq
