#pragma once

#include <stdexcept>
#include <string>

namespace geocme {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Caller misuse: bad arguments, violated preconditions, malformed config.
class UsageError : public Error {
  using Error::Error;
};

/// Bad or missing input data: unparseable files, unresolved ids, cache misses.
class DataError : public Error {
  using Error::Error;
};

/// Remote archive failure after retries were exhausted.
class FetchError : public DataError {
  using DataError::DataError;
};

/// Non-finite values or other numeric breakdown inside the model.
class NumericError : public Error {
  using Error::Error;
};

/// A backbone adapter was requested whose weight bundle is not installed.
class MissingWeightsError : public DataError {
 public:
  MissingWeightsError(const std::string& adapter, const std::string& detail)
      : DataError("backbone '" + adapter + "': weights unavailable (" + detail + ")"),
        adapter_(adapter) {}
  const std::string& adapter() const { return adapter_; }

 private:
  std::string adapter_;
};

}  // namespace geocme
