#include <unistd.h>

#include <iostream>

#include "exform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool text = false;
  // --format is global and stripped before dispatch.
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string value;
    if (args[i] == "--format" && i + 1 < args.size()) {
      value = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
    } else if (args[i].rfind("--format=", 0) == 0) {
      value = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
    } else {
      continue;
    }
    if (value != "json" && value != "text") {
      std::cerr << "error: --format must be json or text\n";
      return exform::cli::kUsage;
    }
    text = value == "text";
    break;
  }

  const exform::cli::CommandResult result = exform::cli::run_command(args);
  if (result.report.is_null()) {
    (result.exit_code == exform::cli::kPass ? std::cout : std::cerr) << result.message;
    return result.exit_code;
  }
  if (text) {
    std::cout << result.table << "status: " << result.report["status"].get<std::string>() << '\n';
  } else {
    std::cout << result.report.dump(2) << '\n';
    if (isatty(STDERR_FILENO)) std::cerr << result.table;
  }
  return result.exit_code;
}
