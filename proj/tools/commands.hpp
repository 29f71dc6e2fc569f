#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace monogenica::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kSpectrumError = 3,
  kIoError = 4,
};

enum class Method { Explicit, Integral, Special };

/// Command-line overrides; unset fields fall back to the job file, then to defaults.
struct Options {
  Method method = Method::Explicit;
  int order = 0;
  bool compare = false;
  std::optional<double> tol_cr;
  std::optional<double> tol_pde;
  std::optional<double> h;
  std::optional<int> nodes;
  std::optional<std::string> out;
  std::optional<std::array<double, 3>> point;
};

/// A parsed job document plus the directory relative paths resolve against.
struct Job {
  nlohmann::json doc;
  std::filesystem::path base_dir;
};

Job load_job(const std::filesystem::path& path);

int cmd_validate(const Job& job, const Options& opts, std::ostream& out);
int cmd_eval(const Job& job, const Options& opts, std::ostream& out);
int cmd_grid(const Job& job, const Options& opts, std::ostream& out);
int cmd_check(const Job& job, const Options& opts, std::ostream& out);

/// Runs `body` and maps library exceptions onto exit codes, writing the message to `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace monogenica::cli
