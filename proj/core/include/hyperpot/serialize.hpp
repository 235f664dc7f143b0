#ifndef HYPERPOT_SERIALIZE_HPP
#define HYPERPOT_SERIALIZE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "hyperpot/configuration.hpp"
#include "hyperpot/models.hpp"

namespace hyperpot {

// JSON forms:
//   window         {"kind":"box","lo":[..],"hi":[..]}
//                  {"kind":"ball","center":[..],"radius":r}
//   configuration  {"dim":d,"window":{..},"points":[{"x":[..],"mark":"+"},..]}
//   parameters     {"lambda_plus":..,"lambda_minus":..,"r":..,"t":..}
//                  with "t":"inf" for the stationary limit

std::string window_to_json(const Window& w);
Window window_from_json(const std::string& text);

std::string configuration_to_json(const MarkedConfiguration& c);
MarkedConfiguration configuration_from_json(const std::string& text);

std::string wrm_params_to_json(const WrmParams& p);
WrmParams wrm_params_from_json(const std::string& text);

void save_configuration(const std::filesystem::path& path,
                        const MarkedConfiguration& c);
MarkedConfiguration load_configuration(const std::filesystem::path& path);

/// Compact command-line window form:
///   box:lo1,..,lod,hi1,..,hid     e.g. box:-1,-1,1,1
///   ball:c1,..,cd,radius          e.g. ball:0,0,2.5
Window parse_window_spec(const std::string& spec);
std::string window_spec(const Window& w);

/// Provenance block stamped into every tool output so a result file carries
/// the exact invocation that produced it.
struct RunManifest {
  std::string tool;
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> params;

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, long value);
};

std::string manifest_to_json(const RunManifest& m);
/// "# key: value" lines for CSV headers.
std::vector<std::string> manifest_comment_lines(const RunManifest& m);

}  // namespace hyperpot

#endif  // HYPERPOT_SERIALIZE_HPP
