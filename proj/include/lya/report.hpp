#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace lya {

struct Violation {
  std::string equation;
  std::vector<std::size_t> witness;  // basis indices
  Vector residual;                   // left side minus right side
};

// Outcome of a checker. `total` counts every violation seen; only the first
// `limit` are kept with witnesses. A checker stops scanning an equation once
// the limit is hit, so `total` is a lower bound when capped.
class Report {
 public:
  static constexpr std::size_t default_limit = 10;
  static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

  explicit Report(std::string subject = {}, std::size_t limit = default_limit)
      : subject_(std::move(subject)), limit_(limit == 0 ? 1 : limit) {}

  const std::string& subject() const { return subject_; }
  std::size_t limit() const { return limit_; }
  bool passed() const { return total_ == 0; }
  std::size_t total() const { return total_; }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<std::pair<std::string, bool>>& equations() const { return equations_; }

  // Records a violation; returns true when the caller should stop scanning.
  bool fail(const std::string& eq, std::vector<std::size_t> witness, Vector residual) {
    ++total_;
    mark(eq, false);
    if (violations_.size() < limit_)
      violations_.push_back({eq, std::move(witness), std::move(residual)});
    return capped();
  }

  bool capped() const { return violations_.size() >= limit_; }

  // Registers that an equation was checked (pass unless a failure is logged).
  void mark(const std::string& eq, bool ok = true) {
    for (auto& [name, status] : equations_)
      if (name == eq) {
        status = status && ok;
        return;
      }
    equations_.emplace_back(eq, ok);
  }

  bool equation_passed(const std::string& eq) const {
    for (const auto& [name, status] : equations_)
      if (name == eq) return status;
    return true;
  }

  void note(std::string s) { notes_.push_back(std::move(s)); }

  // Appends another report's findings, optionally prefixing equation ids.
  void merge(const Report& o, const std::string& prefix = {}) {
    for (const auto& [name, status] : o.equations_) mark(prefix + name, status);
    total_ += o.total_;
    for (const auto& v : o.violations_)
      if (violations_.size() < limit_)
        violations_.push_back({prefix + v.equation, v.witness, v.residual});
    for (const auto& n : o.notes_) notes_.push_back(n);
  }

 private:
  std::string subject_;
  std::size_t limit_;
  std::size_t total_ = 0;
  std::vector<Violation> violations_;
  std::vector<std::pair<std::string, bool>> equations_;
  std::vector<std::string> notes_;
};

}  // namespace lya
