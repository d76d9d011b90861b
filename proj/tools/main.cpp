#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wptk: wave packet transform toolkit"};
  std::string command;
  std::string config;
  std::string names;
  for (const auto& n : wptk::cli::command_names()) names += (names.empty() ? "" : ", ") + n;
  app.add_option("command", command, "one of: " + names)->required();
  app.add_option("config", config, "INI configuration file")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wptk::cli::kExitConfig;
  }
  return wptk::cli::run(command, config, std::cout, std::cerr);
}
