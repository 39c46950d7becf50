#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sipmark {

// Error with a machine-readable stage tag ("parse", "decode", "io", ...).
// The CLI surfaces these as `error=<stage>:<detail>` lines.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& detail)
      : std::runtime_error(detail), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace sipmark
