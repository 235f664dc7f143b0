#include "hyperpot/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hyperpot {

using nlohmann::json;

namespace {

json window_to_obj(const Window& w) {
  json obj;
  if (w.kind() == Window::Kind::Box) {
    obj["kind"] = "box";
    obj["lo"] = w.lo();
    obj["hi"] = w.hi();
  } else {
    obj["kind"] = "ball";
    obj["center"] = w.center().x;
    obj["radius"] = w.radius();
  }
  return obj;
}

Window window_from_obj(const json& obj) {
  const std::string kind = obj.at("kind").get<std::string>();
  if (kind == "box")
    return Window::box(obj.at("lo").get<std::vector<double>>(),
                       obj.at("hi").get<std::vector<double>>());
  if (kind == "ball")
    return Window::ball(Point(obj.at("center").get<std::vector<double>>()),
                        obj.at("radius").get<double>());
  throw std::invalid_argument("unknown window kind: " + kind);
}

json configuration_to_obj(const MarkedConfiguration& c) {
  json obj;
  obj["dim"] = c.dim();
  obj["window"] = window_to_obj(c.window());
  json pts = json::array();
  for (const auto& mp : c.points()) {
    json p;
    p["x"] = mp.pos.x;
    p["mark"] = mark_to_string(mp.mark);
    pts.push_back(std::move(p));
  }
  obj["points"] = std::move(pts);
  return obj;
}

MarkedConfiguration configuration_from_obj(const json& obj) {
  const Window w = window_from_obj(obj.at("window"));
  if (obj.contains("dim") && obj.at("dim").get<int>() != w.dim())
    throw std::invalid_argument("declared dimension disagrees with the window");
  std::vector<MarkedPoint> pts;
  for (const auto& p : obj.at("points")) {
    MarkedPoint mp;
    mp.pos = Point(p.at("x").get<std::vector<double>>());
    mp.mark = mark_from_string(p.at("mark").get<std::string>());
    pts.push_back(std::move(mp));
  }
  return MarkedConfiguration(w, std::move(pts));
}

}  // namespace

std::string window_to_json(const Window& w) { return window_to_obj(w).dump(2); }

Window window_from_json(const std::string& text) {
  return window_from_obj(json::parse(text));
}

std::string configuration_to_json(const MarkedConfiguration& c) {
  return configuration_to_obj(c).dump(2);
}

MarkedConfiguration configuration_from_json(const std::string& text) {
  return configuration_from_obj(json::parse(text));
}

std::string wrm_params_to_json(const WrmParams& p) {
  json obj;
  obj["lambda_plus"] = p.lambda_plus;
  obj["lambda_minus"] = p.lambda_minus;
  obj["r"] = p.r;
  if (std::isinf(p.t))
    obj["t"] = "inf";
  else
    obj["t"] = p.t;
  return obj.dump(2);
}

WrmParams wrm_params_from_json(const std::string& text) {
  const json obj = json::parse(text);
  WrmParams p;
  p.lambda_plus = obj.at("lambda_plus").get<double>();
  p.lambda_minus = obj.at("lambda_minus").get<double>();
  p.r = obj.at("r").get<double>();
  const auto& t = obj.at("t");
  if (t.is_string()) {
    if (t.get<std::string>() != "inf")
      throw std::invalid_argument("t must be a number or \"inf\"");
    p.t = kInf;
  } else {
    p.t = t.get<double>();
  }
  p.validate();
  return p;
}

void save_configuration(const std::filesystem::path& path,
                        const MarkedConfiguration& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << configuration_to_json(c) << "\n";
}

MarkedConfiguration load_configuration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return configuration_from_json(buf.str());
}

namespace {

std::vector<double> parse_csv_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size())
      throw std::invalid_argument("bad number in window spec: " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Window parse_window_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("window spec needs the form kind:numbers");
  const std::string kind = spec.substr(0, colon);
  const std::vector<double> v = parse_csv_doubles(spec.substr(colon + 1));
  if (kind == "box") {
    if (v.empty() || v.size() % 2 != 0)
      throw std::invalid_argument("box spec needs lo coordinates then hi coordinates");
    const std::size_t d = v.size() / 2;
    return Window::box(std::vector<double>(v.begin(), v.begin() + d),
                       std::vector<double>(v.begin() + d, v.end()));
  }
  if (kind == "ball") {
    if (v.size() < 2)
      throw std::invalid_argument("ball spec needs center coordinates then a radius");
    return Window::ball(Point(std::vector<double>(v.begin(), v.end() - 1)),
                        v.back());
  }
  throw std::invalid_argument("unknown window kind: " + kind);
}

std::string window_spec(const Window& w) {
  std::ostringstream out;
  out.precision(17);
  if (w.kind() == Window::Kind::Box) {
    out << "box:";
    for (double x : w.lo()) out << x << ",";
    for (std::size_t i = 0; i < w.hi().size(); ++i) {
      if (i) out << ",";
      out << w.hi()[i];
    }
  } else {
    out << "ball:";
    for (double x : w.center().x) out << x << ",";
    out << w.radius();
  }
  return out.str();
}

void RunManifest::set(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

void RunManifest::set(const std::string& key, double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  params.emplace_back(key, out.str());
}

void RunManifest::set(const std::string& key, long value) {
  params.emplace_back(key, std::to_string(value));
}

std::string manifest_to_json(const RunManifest& m) {
  json obj;
  obj["tool"] = m.tool;
  obj["version"] = m.version;
  obj["seed"] = m.seed;
  json p = json::object();
  for (const auto& [k, v] : m.params) p[k] = v;
  obj["params"] = std::move(p);
  return obj.dump(2);
}

std::vector<std::string> manifest_comment_lines(const RunManifest& m) {
  std::vector<std::string> lines;
  lines.push_back("# tool: " + m.tool);
  lines.push_back("# version: " + m.version);
  lines.push_back("# seed: " + std::to_string(m.seed));
  for (const auto& [k, v] : m.params) lines.push_back("# " + k + ": " + v);
  return lines;
}

}  // namespace hyperpot
