#pragma once

#include <stdexcept>
#include <string>

namespace wsnpc {

/// Failure classes; each maps onto one CLI exit status.
enum class ErrorKind {
  kValidation = 1,
  kInfeasible = 2,
  kSolver = 3,
  kIo = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(ErrorKind::kValidation, what) {}
};

struct InvalidRadioModel : Error {
  explicit InvalidRadioModel(const std::string& what) : Error(ErrorKind::kValidation, what) {}
};

struct LinkInfeasible : Error {
  explicit LinkInfeasible(const std::string& what) : Error(ErrorKind::kInfeasible, what) {}
};

struct InfeasibleConnectivity : Error {
  explicit InfeasibleConnectivity(const std::string& what) : Error(ErrorKind::kInfeasible, what) {}
};

struct DegenerateNetwork : Error {
  explicit DegenerateNetwork(const std::string& what) : Error(ErrorKind::kInfeasible, what) {}
};

struct ScheduleInfeasible : Error {
  explicit ScheduleInfeasible(const std::string& what) : Error(ErrorKind::kInfeasible, what) {}
};

struct SolverFailure : Error {
  explicit SolverFailure(const std::string& what) : Error(ErrorKind::kSolver, what) {}
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& what) : Error(ErrorKind::kValidation, what) {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

}  // namespace wsnpc
