#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <cmath>
#include <sstream>

#include "wptk/error.hpp"

namespace wptk::cli {

namespace pt = boost::property_tree;

Config Config::load(const std::string& path) {
  Config c;
  try {
    pt::read_ini(path, c.raw_);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigurationError("config: " + std::string(e.what()));
  }
  return c;
}

Config Config::from_string(const std::string& text) {
  Config c;
  std::istringstream is(text);
  try {
    pt::read_ini(is, c.raw_);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigurationError("config: " + std::string(e.what()));
  }
  return c;
}

bool Config::has(const std::string& key) const { return raw(key).has_value(); }

bool Config::has_section(const std::string& section) const {
  return raw_.get_child_optional(section).has_value();
}

std::optional<std::string> Config::raw(const std::string& key) const {
  if (auto v = raw_.get_optional<std::string>(key)) {
    std::string s = *v;
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string{};
    return s.substr(b, e - b + 1);
  }
  return std::nullopt;
}

void Config::record(const std::string& key, const std::string& value) { resolved_.put(key, value); }

void Config::note(const std::string& key, const std::string& value) { record(key, value); }

std::string Config::text(const std::string& key, std::optional<std::string> fallback) {
  auto v = raw(key);
  if (!v) {
    if (!fallback) throw ConfigurationError("config: missing required key '" + key + "'");
    v = fallback;
  }
  record(key, *v);
  return *v;
}

namespace {

double parse_real(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigurationError("config: '" + key + "' expects a number, got '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw ConfigurationError("config: '" + key + "' expects a finite number, got '" + s + "'");
  }
  return v;
}

}  // namespace

double Config::real(const std::string& key, std::optional<double> fallback) {
  auto v = raw(key);
  double out = 0.0;
  if (v) {
    out = parse_real(key, *v);
  } else if (fallback) {
    out = *fallback;
  } else {
    throw ConfigurationError("config: missing required key '" + key + "'");
  }
  record(key, format_real(out));
  return out;
}

int Config::integer(const std::string& key, std::optional<int> fallback) {
  auto v = raw(key);
  int out = 0;
  if (v) {
    const double d = parse_real(key, *v);
    if (d != std::floor(d) || std::abs(d) > 2e9) {
      throw ConfigurationError("config: '" + key + "' expects an integer, got '" + *v + "'");
    }
    out = static_cast<int>(d);
  } else if (fallback) {
    out = *fallback;
  } else {
    throw ConfigurationError("config: missing required key '" + key + "'");
  }
  record(key, std::to_string(out));
  return out;
}

bool Config::flag(const std::string& key, std::optional<bool> fallback) {
  auto v = raw(key);
  bool out = false;
  if (v) {
    if (*v == "true" || *v == "1" || *v == "yes") {
      out = true;
    } else if (*v == "false" || *v == "0" || *v == "no") {
      out = false;
    } else {
      throw ConfigurationError("config: '" + key + "' expects true/false, got '" + *v + "'");
    }
  } else if (fallback) {
    out = *fallback;
  } else {
    throw ConfigurationError("config: missing required key '" + key + "'");
  }
  record(key, out ? "true" : "false");
  return out;
}

std::vector<double> Config::reals(const std::string& key,
                                  std::optional<std::vector<double>> fallback) {
  auto v = raw(key);
  std::vector<double> out;
  if (v) {
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto b = item.find_first_not_of(" \t");
      const auto e = item.find_last_not_of(" \t");
      if (b == std::string::npos) throw ConfigurationError("config: empty entry in '" + key + "'");
      out.push_back(parse_real(key, item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw ConfigurationError("config: '" + key + "' is empty");
  } else if (fallback) {
    out = *fallback;
  } else {
    throw ConfigurationError("config: missing required key '" + key + "'");
  }
  record(key, format_reals(out));
  return out;
}

void Config::check_unused() const {
  std::string unknown;
  for (const auto& [section, child] : raw_) {
    if (child.empty()) {
      if (!resolved_.get_optional<std::string>(section)) unknown += " " + section;
      continue;
    }
    for (const auto& [key, value] : child) {
      (void)value;
      const std::string path = section + "." + key;
      if (!resolved_.get_optional<std::string>(path)) unknown += " " + path;
    }
  }
  if (!unknown.empty()) throw ConfigurationError("config: unknown or unused keys:" + unknown);
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string format_reals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_real(v[i]);
  }
  return s;
}

}  // namespace wptk::cli
