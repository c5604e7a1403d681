#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace lefschetz {

/// Collects the outcome of the individual checks inside one criterion.
class CheckLog {
public:
  void expect(bool ok, const std::string &what);
  void note(const std::string &what) { notes_.push_back(what); }

  [[nodiscard]] auto ok() const -> bool { return failures_.empty(); }
  [[nodiscard]] auto checks() const -> std::size_t { return checks_; }
  [[nodiscard]] auto failures() const -> const std::vector<std::string> & {
    return failures_;
  }
  [[nodiscard]] auto notes() const -> const std::vector<std::string> & { return notes_; }

private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id = 0;
  std::string title;
  double time_limit_seconds = 0;
  std::function<void(CheckLog &)> run;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t checks = 0;
  double seconds = 0;
  double time_limit_seconds = 0;
  /// First failures, or a one-line summary on success.
  std::string detail;
};

/// The fourteen acceptance criteria with their pinned time limits.
auto acceptance_criteria() -> std::vector<Criterion>;

/// Exceptions count as failures; so does exceeding the time limit.
auto run_criterion(const Criterion &c) -> CriterionResult;

/// Runs the criteria whose ids are listed (all when empty), reporting each
/// result through the callback as soon as it is known.
auto run_acceptance(std::span<const int> ids = {},
                    const std::function<void(const CriterionResult &)> &on_result = {})
    -> std::vector<CriterionResult>;

} // namespace lefschetz
