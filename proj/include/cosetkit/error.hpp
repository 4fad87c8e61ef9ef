#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cosetkit {

enum class ErrorCode {
  NonInvolution,
  SizeCapExceeded,
  MalformedSpec,
  UnknownLabel,
  NotTwoAcyclic,
  BudgetExceeded,
  GuardTooWeak,
  ConstructionFailed,
  MalformedDualPath,
  LabelMismatch,
  NotCompatible,
  UnknownFamily,
  BadParams,
  Precondition,
  Io,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonInvolution: return "NonInvolution";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotTwoAcyclic: return "NotTwoAcyclic";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::GuardTooWeak: return "GuardTooWeak";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::MalformedDualPath: return "MalformedDualPath";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Outcome of a property sweep.
enum class Status { verified, refuted, unverified_guard, budget_exceeded };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::unverified_guard: return "unverified-guard";
    case Status::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

/// Every failure raised by the library. The code is stable and is what the
/// CLI maps onto exit statuses; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

/// Node budget shared by the exhaustive searches. COSETKIT_BUDGET overrides
/// the default of 10^7 expansions.
inline std::uint64_t default_budget() {
  static const std::uint64_t value = [] {
    if (const char* env = std::getenv("COSETKIT_BUDGET")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && parsed > 0) return static_cast<std::uint64_t>(parsed);
    }
    return std::uint64_t{10'000'000};
  }();
  return value;
}

/// Counts expansions and throws BudgetExceeded once the limit is passed.
/// Safe to charge from several threads.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = default_budget()) : limit_(limit) {}

  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  void charge(std::uint64_t amount = 1) {
    if (used_.fetch_add(amount, std::memory_order_relaxed) + amount > limit_) {
      fail(ErrorCode::BudgetExceeded, "search exceeded node budget of " + std::to_string(limit_));
    }
  }

  std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace cosetkit
