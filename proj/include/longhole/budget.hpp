#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace longhole {

// Thrown when an exact search exceeds its configured resource budget.
// Callers that can degrade gracefully use Meter::try_tick instead.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Counts units of work against a limit. tick() throws; try_tick() reports.
class Meter {
 public:
  Meter(uint64_t limit, const char* label) : limit_(limit), label_(label) {}

  void tick(uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetError(std::string(label_) + " budget exceeded (limit " +
                        std::to_string(limit_) + ")");
    }
  }

  bool try_tick(uint64_t n = 1) noexcept {
    used_ += n;
    return used_ <= limit_;
  }

  bool exhausted() const noexcept { return used_ > limit_; }
  uint64_t used() const noexcept { return used_; }
  uint64_t limit() const noexcept { return limit_; }

 private:
  uint64_t limit_;
  uint64_t used_ = 0;
  const char* label_;
};

}  // namespace longhole
