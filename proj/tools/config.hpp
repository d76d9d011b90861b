#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

namespace wptk::cli {

/// INI config (`[section]` + `key = value`). Every lookup, including the
/// defaults it falls back to, is echoed into resolved() for the manifest.
class Config {
 public:
  static Config load(const std::string& path);
  static Config from_string(const std::string& text);

  bool has(const std::string& key) const;
  bool has_section(const std::string& section) const;

  std::string text(const std::string& key, std::optional<std::string> fallback = {});
  double real(const std::string& key, std::optional<double> fallback = {});
  int integer(const std::string& key, std::optional<int> fallback = {});
  bool flag(const std::string& key, std::optional<bool> fallback = {});
  /// Comma-separated reals.
  std::vector<double> reals(const std::string& key,
                            std::optional<std::vector<double>> fallback = {});

  /// Records a derived value in the manifest without reading it.
  void note(const std::string& key, const std::string& value);

  /// Throws ConfigurationError naming keys that no lookup consumed.
  void check_unused() const;

  const boost::property_tree::ptree& resolved() const { return resolved_; }

 private:
  std::optional<std::string> raw(const std::string& key) const;
  void record(const std::string& key, const std::string& value);

  boost::property_tree::ptree raw_;
  boost::property_tree::ptree resolved_;
};

std::string format_real(double v);
std::string format_reals(const std::vector<double>& v);

}  // namespace wptk::cli
