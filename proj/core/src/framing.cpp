#include "llg/framing.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace llg {

Framing::Framing(FramingSpec spec) : spec_(std::move(spec)) {
  const int n = spec_.dim;
  if (n < 1 || n > kMaxJetDim) {
    throw InvalidArgument("framing dimension must be in [1, " + std::to_string(kMaxJetDim) + "]");
  }
  if (spec_.domain.dim() != n) throw InvalidArgument("domain box has wrong number of coordinates");
  for (const auto& [lo, hi] : spec_.domain.bounds) {
    if (!(lo <= hi)) throw InvalidArgument("domain interval with lo > hi");
  }
  if (static_cast<int>(spec_.w.size()) != n) throw InvalidArgument("w must have dim rows");
  exprs_.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : spec_.w) {
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("w must have dim columns");
    for (const auto& text : row) exprs_.push_back(parse(text, n));
  }
  // Invertibility is only certified at sample points; the box center is the
  // first one.
  Point center(n);
  for (int i = 0; i < n; ++i) center[i] = 0.5 * (spec_.domain.bounds[i].first + spec_.domain.bounds[i].second);
  (void)z_at(center);
}

FrameJets Framing::eval_frames(std::span<const double> x) const {
  const int n = dim();
  if (!spec_.domain.contains(x)) throw DomainBoundary("point " + point_to_string(x) + " outside domain");
  std::vector<Jet2> seeds;
  seeds.reserve(n);
  for (int k = 0; k < n; ++k) seeds.push_back(Jet2::variable(x[k], k, n));
  JetMatrix w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = evaluate<Jet2>(entry(i, j), seeds);
  }
  JetMatrix z = inverse(w, point_to_string(x));
  return FrameJets{std::move(w), std::move(z)};
}

RealMatrix Framing::w_at(std::span<const double> x) const {
  const int n = dim();
  if (static_cast<int>(x.size()) != n) throw InvalidArgument("point dimension mismatch");
  RealMatrix w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = evaluate<double>(entry(i, j), x);
  }
  return w;
}

RealMatrix Framing::z_at(std::span<const double> x) const { return inverse(w_at(x), point_to_string(x)); }

std::string point_to_string(std::span<const double> x) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  os << ')';
  return os.str();
}

FramingSpec framing_from_json(const std::string& text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("framing file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("framing file must be a JSON object");
  static const std::set<std::string> kKeys{"dim", "domain", "w"};
  for (const auto& [key, _] : j.items()) {
    if (!kKeys.count(key)) throw InvalidArgument("unknown key '" + key + "' in framing file");
  }
  for (const auto& key : kKeys) {
    if (!j.contains(key)) throw InvalidArgument("framing file lacks '" + key + "'");
  }

  FramingSpec spec;
  spec.name = name;
  if (!j["dim"].is_number_integer()) throw InvalidArgument("'dim' must be an integer");
  spec.dim = j["dim"].get<int>();
  if (spec.dim < 1 || spec.dim > kMaxJetDim) throw InvalidArgument("'dim' out of range");

  const auto& dom = j["domain"];
  if (!dom.is_object()) throw InvalidArgument("'domain' must be an object");
  for (const auto& [key, _] : dom.items()) {
    bool known = false;
    for (int i = 1; i <= spec.dim; ++i) known = known || key == "x" + std::to_string(i);
    if (!known) throw InvalidArgument("unknown domain key '" + key + "'");
  }
  for (int i = 1; i <= spec.dim; ++i) {
    const std::string key = "x" + std::to_string(i);
    if (!dom.contains(key)) throw InvalidArgument("domain lacks '" + key + "'");
    const auto& iv = dom[key];
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number()) {
      throw InvalidArgument("domain '" + key + "' must be [lo, hi]");
    }
    spec.domain.bounds.emplace_back(iv[0].get<double>(), iv[1].get<double>());
  }

  const auto& w = j["w"];
  if (!w.is_array() || static_cast<int>(w.size()) != spec.dim) throw InvalidArgument("'w' must have dim rows");
  for (const auto& row : w) {
    if (!row.is_array() || static_cast<int>(row.size()) != spec.dim) {
      throw InvalidArgument("each row of 'w' must have dim entries");
    }
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (!e.is_string()) throw InvalidArgument("entries of 'w' must be expression strings");
      r.push_back(e.get<std::string>());
    }
    spec.w.push_back(std::move(r));
  }
  return spec;
}

std::string framing_to_json(const FramingSpec& spec) {
  nlohmann::ordered_json j;
  j["dim"] = spec.dim;
  nlohmann::ordered_json dom = nlohmann::ordered_json::object();
  for (int i = 0; i < spec.dim; ++i) {
    dom["x" + std::to_string(i + 1)] = {spec.domain.bounds[i].first, spec.domain.bounds[i].second};
  }
  j["domain"] = dom;
  j["w"] = spec.w;
  return j.dump(2) + "\n";
}

FramingSpec load_framing_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open framing file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return framing_from_json(buf.str(), path.string());
}

}  // namespace llg
