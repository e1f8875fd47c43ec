#pragma once

#include <stdexcept>
#include <string>

namespace dgsp {

/// Base class for all library errors. `kind()` maps onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    kParse,
    kValidation,
    kDomain,
    kNoPath,
    kRejectionBudget,
    kOverflow,
  };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline Error parse_error(const std::string& what) { return Error(Error::Kind::kParse, what); }
inline Error validation_error(const std::string& what) {
  return Error(Error::Kind::kValidation, what);
}
inline Error domain_error(const std::string& what) { return Error(Error::Kind::kDomain, what); }

}  // namespace dgsp
